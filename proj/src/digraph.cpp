#include "seymour/digraph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace seymour {

VertexSet::VertexSet(int n) : n_(n), words_(words_for_bits(n), 0) {
  if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet::VertexSet(int n, const std::uint64_t* row_words) : VertexSet(n) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = row_words[i];
}

int VertexSet::count() const {
  return popcount_words(words_.data(), static_cast<int>(words_.size()));
}

bool VertexSet::contains(int v) const {
  return v >= 0 && v < n_ && test_bit(words_.data(), v);
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::insert");
  set_bit(words_.data(), v);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::erase");
  clear_bit(words_.data(), v);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each_set_bit(words_.data(), static_cast<int>(words_.size()),
                   [&](int v) { out.push_back(v); });
  return out;
}

Digraph::Digraph(int n)
    : n_(n), words_(words_for_bits(n)), rows_(std::size_t(n) * words_for_bits(n), 0) {
  if (n < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
}

void Digraph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range(std::string(what) + ": vertex index out of range");
  }
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u, "has_arc");
  check_vertex(v, "has_arc");
  return test_bit(row(u), v);
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u, "add_arc");
  check_vertex(v, "add_arc");
  if (u == v) throw std::invalid_argument("add_arc: self-loops are not allowed");
  set_bit(row_mut(u), v);
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u, "remove_arc");
  check_vertex(v, "remove_arc");
  clear_bit(row_mut(u), v);
}

int Digraph::out_degree(int u) const {
  check_vertex(u, "out_degree");
  return popcount_words(row(u), words_);
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int u = 0; u < n_; ++u) {
    for_each_set_bit(row(u), words_, [&](int v) { ++deg[v]; });
  }
  return deg;
}

long long Digraph::arc_count() const {
  long long total = 0;
  for (int u = 0; u < n_; ++u) total += out_degree(u);
  return total;
}

std::string Digraph::to_text() const {
  std::string out = std::to_string(n_);
  out.push_back('\n');
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      out.push_back(test_bit(row(u), v) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

Digraph Digraph::from_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw std::invalid_argument("graph text: missing vertex count");
  if (n < 1 || n > (1 << 26)) {
    throw std::invalid_argument("graph text: vertex count out of range");
  }
  Digraph g(static_cast<int>(n));
  std::string line;
  for (int u = 0; u < g.order(); ++u) {
    if (!(in >> line)) throw std::invalid_argument("graph text: missing adjacency row");
    if (static_cast<long long>(line.size()) != n) {
      throw std::invalid_argument("graph text: adjacency row has wrong length");
    }
    for (int v = 0; v < g.order(); ++v) {
      if (line[v] == '1') {
        if (u == v) throw std::invalid_argument("graph text: self-loop bit set");
        set_bit(g.row_mut(u), v);
      } else if (line[v] != '0') {
        throw std::invalid_argument("graph text: adjacency rows must be '0'/'1'");
      }
    }
  }
  return g;
}

Digraph Digraph::from_text(const std::string& text) {
  std::istringstream in(text);
  return from_text(in);
}

bool is_tournament(const Digraph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (test_bit(g.row(u), v) == test_bit(g.row(v), u)) return false;
    }
  }
  return true;
}

bool has_no_antiparallel_pair(const Digraph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (test_bit(g.row(u), v) && test_bit(g.row(v), u)) return false;
    }
  }
  return true;
}

Tournament Tournament::from_digraph(Digraph g) {
  if (!is_tournament(g)) {
    throw std::invalid_argument("Tournament: every pair needs exactly one arc");
  }
  return Tournament(std::move(g));
}

Tournament Tournament::from_digraph_unchecked(Digraph g) {
  return Tournament(std::move(g));
}

}  // namespace seymour
