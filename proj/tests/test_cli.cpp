// End-to-end tests of the command-line binary.  The binary path arrives in
// SEYMOUR_CLI_BIN (set by the test harness); commands run through the shell.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("SEYMOUR_CLI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "SEYMOUR_CLI_BIN must point at the binary");
  return p;
}

// Runs `command` under the shell, capturing stdout; stderr is discarded.
RunResult run_shell(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args) {
  return run_shell(cli_path() + " " + args);
}

}  // namespace

TEST_CASE("gen piped into count round-trips") {
  const RunResult r =
      run_shell(cli_path() + " gen --n 15 --seed 5 | " + cli_path() + " count");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n=15 seymour_count=", 0) == 0);
  CHECK(r.out.find("vertex,n1,n2,in_degree,out_degree,is_seymour") !=
        std::string::npos);
}

TEST_CASE("count accepts a file argument and json format") {
  const RunResult gen = run_cli("gen --n 8 --seed 41");
  REQUIRE(gen.exit_code == 0);
  const std::string path = "/tmp/seymour_cli_test_graph.txt";
  std::ofstream(path) << gen.out;
  const RunResult r = run_cli("count --input " + path + " --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("n") == 8);
  CHECK(doc.at("profiles").size() == 8);
  std::remove(path.c_str());
}

TEST_CASE("mc output is byte-identical across reruns and worker counts") {
  const std::string args = "mc --n 80 --trials 400 --seed 7";
  const RunResult a = run_cli(args + " --workers 1");
  const RunResult b = run_cli(args + " --workers 1");
  const RunResult c = run_cli(args + " --workers 4");
  const RunResult d = run_shell("SEYMOUR_WORKERS=3 " + cli_path() + " " + args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
  CHECK(a.out.rfind("n,p,trials,mean_s,var_s,frac_all_seymour,frac_deviating,seed\n",
                    0) == 0);
}

TEST_CASE("deviation and evolve are deterministic too") {
  const std::string dev =
      "deviation --n 31 --n 51 --trials 1000 --A 3 --seed 11";
  const RunResult da = run_cli(dev + " --workers 1");
  const RunResult db = run_cli(dev + " --workers 5");
  CHECK(da.exit_code == 0);
  CHECK(da.out == db.out);

  const std::string evo = "evolve --n-start 4 --n-end 24 --trials 150 --seed 3";
  const RunResult ea = run_cli(evo + " --workers 1");
  const RunResult eb = run_cli(evo + " --workers 4");
  CHECK(ea.exit_code == 0);
  CHECK(ea.out == eb.out);
  CHECK(ea.out.rfind("n,mean_s,", 0) == 0);
}

TEST_CASE("random seeding draws distinct seeds") {
  const RunResult a = run_cli("mc --n 10 --trials 20 --seed random");
  const RunResult b = run_cli("mc --n 10 --trials 20 --seed random");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  // The drawn seed lands in the last CSV column; two draws colliding would
  // mean a 64-bit coincidence.
  const auto last_field = [](const std::string& out) {
    const auto nl = out.find_last_not_of('\n');
    const auto comma = out.rfind(',', nl);
    return out.substr(comma + 1, nl - comma);
  };
  CHECK(last_field(a.out) != last_field(b.out));
}

TEST_CASE("bounds subcommand emits both formats") {
  const RunResult j = run_cli("bounds --model tournament --n 25");
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("n") == 25);
  CHECK(doc.at("parity") == "odd");

  const RunResult c = run_cli("bounds --model tournament --n 25 --format csv");
  CHECK(c.exit_code == 0);
  CHECK(c.out.rfind("field,value\n", 0) == 0);

  const RunResult w =
      run_cli("bounds --model digraph --n 10000 --p 0.3 --format json");
  CHECK(w.exit_code == 0);
  const auto wd = nlohmann::json::parse(w.out);
  CHECK(wd.at("window").at("n") == 10000);
  CHECK(wd.at("lower_bound").at("p") == 0.3);
}

TEST_CASE("exhaustive subcommand text and json") {
  const RunResult t = run_cli("exhaustive --model tournament --n 3");
  CHECK(t.exit_code == 0);
  CHECK(t.out.rfind("model=tournament n=3 total_graphs=8\n", 0) == 0);
  CHECK(t.out.find("e_s=3/2 (1.5)") != std::string::npos);

  const RunResult d = run_cli("exhaustive --model digraph --n 3 --format json");
  CHECK(d.exit_code == 0);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc.at("total_graphs") == 27);
  CHECK(doc.at("exact_e_s").at("rational") == "16/9");
}

TEST_CASE("--output writes the same bytes as stdout") {
  const std::string path = "/tmp/seymour_cli_test_out.csv";
  const RunResult direct = run_cli("mc --n 30 --trials 100 --seed 9 --workers 2");
  const RunResult filed =
      run_cli("mc --n 30 --trials 100 --seed 9 --workers 2 --output " + path);
  CHECK(direct.exit_code == 0);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("invalid flags exit with 2") {
  CHECK(run_cli("").exit_code == 2);                     // no subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);           // unknown subcommand
  CHECK(run_cli("mc").exit_code == 2);                   // missing --n
  CHECK(run_cli("mc --n 10 --format xml").exit_code == 2);
  CHECK(run_cli("mc --n 10 --seed banana").exit_code == 2);
  CHECK(run_cli("mc --model digraph --n 10").exit_code == 2);  // missing --p
  CHECK(run_cli("bounds --model digraph --n 100 --p 0.7").exit_code == 2);
  CHECK(run_cli("gen --n 5 --model digraph").exit_code == 2);  // missing --p
  CHECK(run_cli("deviation --n 31 --trials 1000").exit_code == 2);  // no threshold
  CHECK(run_cli("exhaustive --model tournament --n 9").exit_code == 2);  // over cap
  CHECK(run_shell("SEYMOUR_WORKERS=zero " + cli_path() + " mc --n 10").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("mc --help").exit_code == 0);
}

TEST_CASE("runtime failures exit with 1") {
  CHECK(run_cli("count --input /nonexistent/graph.txt").exit_code == 1);
  // Malformed graph text on stdin is a data error, not a flag error.
  const RunResult r = run_shell("printf 'bogus' | " + cli_path() + " count");
  CHECK(r.exit_code == 1);
}
