#include "seymour/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace seymour {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sum of pmf terms j = 0..k for Bin(m,p), valid when k is at or below the
// mode so the terms shrink walking down from j = k.  Anchored at log pmf(k),
// stepped by the exact pmf ratio; long double keeps ~64 mantissa bits.
long double tail_sum_low(long long m, long double p, long long k) {
  const long double q = 1.0L - p;
  const long double log_pk = std::lgamma(static_cast<long double>(m) + 1.0L) -
                             std::lgamma(static_cast<long double>(k) + 1.0L) -
                             std::lgamma(static_cast<long double>(m - k) + 1.0L) +
                             static_cast<long double>(k) * std::log(p) +
                             static_cast<long double>(m - k) * std::log(q);
  long double term = 1.0L;  // pmf(j) / pmf(k), walking j downward
  long double sum = 1.0L;
  const long double rq = q / p;
  for (long long j = k; j >= 1; --j) {
    term *= rq * static_cast<long double>(j) / static_cast<long double>(m - j + 1);
    sum += term;
    if (term < sum * 1e-30L) break;
  }
  return std::exp(log_pk) * sum;
}

}  // namespace

double variance_coeff_even() {
  return 0.25 - 1.0 / (2.0 * std::numbers::pi);
}

double variance_coeff_odd() {
  return variance_coeff_even() + 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

double binom_tail_le(long long m, double p, long long k) {
  if (m < 0 || k < 0 || k > m || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binom_tail_le: need 0 <= k <= m and p in [0, 1]");
  }
  if (k == m) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  if (p == 0.5 && 2 * k + 1 == m) return 0.5;  // symmetric split, exact
  // Evaluate whichever tail is the short one; the complement keeps full
  // absolute precision because the subtracted piece is the small side.
  if (static_cast<double>(k) <= static_cast<double>(m) * p) {
    return static_cast<double>(tail_sum_low(m, p, k));
  }
  return static_cast<double>(1.0L - tail_sum_low(m, 1.0L - static_cast<long double>(p),
                                                 m - k - 1));
}

double central_binom_pmf(long long m) {
  if (m < 0) throw std::invalid_argument("central_binom_pmf: m must be >= 0");
  // c(m) = c(m-1) * m/(m+1) for odd m, unchanged for even m.
  long double a = 1.0L;
  for (long long j = 1; j <= m; j += 2) {
    a *= static_cast<long double>(j) / static_cast<long double>(j + 1);
  }
  return static_cast<double>(a);
}

double central_binom_stirling(long long m) {
  if (m < 1) throw std::invalid_argument("central_binom_stirling: m must be >= 1");
  return std::sqrt(2.0 / (std::numbers::pi * static_cast<double>(m)));
}

BoundsReport tournament_expectation_bounds(long long n) {
  if (n < 1) throw std::invalid_argument("tournament_expectation_bounds: n must be >= 1");
  BoundsReport r;
  r.n = n;
  r.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
  const double tail = binom_tail_le(n - 1, 0.5, (n - 1) / 2);
  if (n == 1) {
    r.diameter_defect = 0.0;
    r.log_diameter_defect = -kInf;
  } else {
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    r.diameter_defect = pairs * std::pow(0.75, static_cast<double>(n - 2));
    r.log_diameter_defect =
        std::log(pairs) + static_cast<double>(n - 2) * std::log(0.75);
  }
  const double base = static_cast<double>(n) * tail;
  r.e_s_lower_raw = base - r.diameter_defect;
  r.e_s_upper_raw = base + r.diameter_defect;
  r.lower_clamped = r.e_s_lower_raw < 0.0;
  r.e_s_lower = std::max(0.0, r.e_s_lower_raw);
  r.upper_clamped = r.e_s_upper_raw > static_cast<double>(n);
  r.e_s_upper = std::min(static_cast<double>(n), r.e_s_upper_raw);
  r.c_constant = (n % 2 == 0) ? variance_coeff_even() : variance_coeff_odd();
  r.var_asymptote = r.c_constant * static_cast<double>(n);
  return r;
}

double tournament_variance_asymptote(long long n) {
  if (n < 1) throw std::invalid_argument("tournament_variance_asymptote: n must be >= 1");
  const double c = (n % 2 == 0) ? variance_coeff_even() : variance_coeff_odd();
  return c * static_cast<double>(n);
}

CentralPair variance_pi_terms(long long n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("variance_pi_terms: n must be odd and >= 3");
  }
  CentralPair out;
  out.pi1 = central_binom_pmf(n - 1);
  // P(Bin(n-2,1/2) = (n-1)/2) with n-2 odd: the target is ceil((n-2)/2), and
  // by symmetry of the binomial coefficients that equals the central term.
  out.pi2 = central_binom_pmf(n - 2);
  out.diff = out.pi2 - out.pi1;
  out.pi1_sq = out.pi1 * out.pi1;
  return out;
}

double p1_upper_bound(long long n) {
  if (n < 3) throw std::invalid_argument("p1_upper_bound: n must be >= 3");
  const long long k = (n - 1) / 2;
  return 0.5 * binom_tail_le(n - 2, 0.5, k - 1) * binom_tail_le(n - 2, 0.5, k);
}

double chernoff_upper(double mean, double epsilon) {
  if (!(mean > 0.0) || !(epsilon > 0.0)) {
    throw std::invalid_argument("chernoff_upper: mean and epsilon must be positive");
  }
  const double log_base = epsilon - (1.0 + epsilon) * std::log1p(epsilon);
  return std::exp(mean * log_base);
}

double DigraphWindow::e_s_lower_at(double p) const {
  return digraph_expectation_lower(n, p).value;
}

DigraphWindow digraph_window(long long n, double epsilon, double eta) {
  if (n < 2) throw std::invalid_argument("digraph_window: n must be >= 2");
  if (!(epsilon > 0.0) || !(eta > 0.0)) {
    throw std::invalid_argument("digraph_window: slacks must be positive");
  }
  DigraphWindow w;
  w.n = n;
  w.epsilon = epsilon;
  w.eta = eta;
  const double logn = std::log(static_cast<double>(n));
  w.p_min = std::sqrt((2.0 + epsilon) * logn / static_cast<double>(n));
  w.epsilon_n = (2.0 + eta) * logn / static_cast<double>(n);
  const double target = 1.0 - w.epsilon_n;
  const auto f = [](double p) { return 2.0 * p * std::exp(1.0 - 2.0 * p); };
  if (target <= 0.0) {
    w.p_max = 0.0;
    w.delta_n = 0.5;
    w.residual = kInf;
    w.empty = true;
    return w;
  }
  // f is strictly increasing on (0, 1/2) with f(0) = 0, f(1/2) = 1, so the
  // root is bracketed; bisect to absolute 1e-13 on p.
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  w.p_max = 0.5 * (lo + hi);
  w.delta_n = 0.5 - w.p_max;
  w.residual = std::abs(f(w.p_max) - target);
  w.empty = !(w.p_min < w.p_max);
  return w;
}

DigraphLowerBound digraph_expectation_lower(long long n, double p) {
  if (n < 1) throw std::invalid_argument("digraph_expectation_lower: n must be >= 1");
  if (!(p > 0.0 && p < 0.5)) {
    throw std::invalid_argument("digraph_expectation_lower: p must lie in (0, 1/2)");
  }
  DigraphLowerBound r;
  r.n = n;
  r.p = p;
  const long long k = (n - 1) / 2;
  r.tail = binom_tail_le(n, p, k);
  r.tail_strict = binom_tail_le(n - 1, p, k);
  if (n == 1) {
    r.defect = 0.0;
    r.log_defect = -kInf;
  } else {
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    r.log_defect = std::log(pairs) + std::log1p(-p) +
                   static_cast<double>(n - 2) * std::log1p(-p * p);
    r.defect = pairs * (1.0 - p) * std::pow(1.0 - p * p, static_cast<double>(n - 2));
  }
  const double nn = static_cast<double>(n);
  r.value_raw = nn * r.tail - r.defect;
  r.clamped = r.value_raw < 0.0;
  r.value = std::max(0.0, r.value_raw);
  r.value_strict_raw = nn * r.tail_strict - r.defect;
  r.strict_clamped = r.value_strict_raw < 0.0;
  r.value_strict = std::max(0.0, r.value_strict_raw);
  return r;
}

}  // namespace seymour
