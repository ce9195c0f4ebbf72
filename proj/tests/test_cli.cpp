#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "sumset/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SUMSET_MINIMAX_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli phi") {
  const RunResult prime = run_cli("phi 13 3");
  CHECK(prime.exit_code == 0);
  CHECK(prime.output.find("exact=7") != std::string::npos);
  CHECK(prime.output.find("regime=prime") != std::string::npos);

  const RunResult gap = run_cli("phi 10 2");
  CHECK(gap.exit_code == 0);
  CHECK(gap.output.find("lower=2") != std::string::npos);
  CHECK(gap.output.find("upper=5") != std::string::npos);
  CHECK(gap.output.find("regime=gap") != std::string::npos);

  const RunResult oracle = run_cli("phi 10 2 --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output.find("exact=5") != std::string::npos);
}

TEST_CASE("cli phi json revalidates and is byte-stable") {
  const RunResult first = run_cli("phi 9 3 --json --witness");
  REQUIRE(first.exit_code == 0);
  const RunResult second = run_cli("phi 9 3 --json --witness");
  CHECK(first.output == second.output);

  const sumset::Certificate certificate =
      sumset::certificate_from_json(sumset::json::parse(first.output));
  std::string reason;
  CHECK_MESSAGE(sumset::revalidate(certificate, &reason), reason);
}

TEST_CASE("cli sumset") {
  const RunResult block = run_cli("sumset 0,1,2,3 --mod 7");
  CHECK(block.exit_code == 0);
  CHECK(block.output.find("sumset=[1,2,3,4,5]") != std::string::npos);
  CHECK(block.output.find("size=5") != std::string::npos);
  CHECK(block.output.find("\"kind\":\"block\"") != std::string::npos);

  const RunResult empty = run_cli("sumset 0 --mod 5");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("size=0") != std::string::npos);

  const RunResult coset = run_cli("sumset 1,4,7 --mod 9");
  CHECK(coset.exit_code == 0);
  CHECK(coset.output.find("sumset=[2,5,8]") != std::string::npos);
  CHECK(coset.output.find("coset-subset") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("phi 1 2").exit_code == 2);
  CHECK(run_cli("phi 9").exit_code == 2);
  CHECK(run_cli("sumset 0,9 --mod 9").exit_code == 2);
  CHECK(run_cli("sumset 1,1 --mod 9").exit_code == 2);
  CHECK(run_cli("oracle 40 2").exit_code == 3);
  CHECK(run_cli("oracle 12 2 --budget 3").exit_code == 3);
  CHECK(run_cli("table 24 --oracle").exit_code == 3);
  CHECK(run_cli("verify nonsense").exit_code == 2);
  CHECK(run_cli("stability 0,1 --mod 8 --subgroup 2").exit_code == 2);
}

TEST_CASE("cli oracle and construct") {
  const RunResult oracle = run_cli("oracle 12 5 --witness");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output.find("value=3") != std::string::npos);
  CHECK(oracle.output.find("witness=") != std::string::npos);

  const RunResult construct = run_cli("construct 9 3 --method coset --json");
  REQUIRE(construct.exit_code == 0);
  const sumset::Certificate certificate =
      sumset::certificate_from_json(sumset::json::parse(construct.output));
  std::string reason;
  CHECK_MESSAGE(sumset::revalidate(certificate, &reason), reason);
}

TEST_CASE("cli stability") {
  const RunResult report = run_cli("stability 0,3,1 --mod 9 --subgroup 3");
  CHECK(report.exit_code == 0);
  CHECK(report.output.find("cross_bound=3") != std::string::npos);
  CHECK(report.output.find("sumset_size=3") != std::string::npos);

  const RunResult threshold =
      run_cli("stability 1,4,7 --mod 9 --subgroup 3 --slack 0");
  CHECK(threshold.exit_code == 0);
  CHECK(threshold.output.find("concentrated=true") != std::string::npos);
}

TEST_CASE("cli verify") {
  const RunResult suite = run_cli("verify lemma-window --nmax 20");
  CHECK(suite.exit_code == 0);
  CHECK(suite.output.find("violations=0") != std::string::npos);
  CHECK(suite.output.find("cases=") != std::string::npos);
}

TEST_CASE("cli table determinism") {
  const RunResult first = run_cli("table 10 --csv --oracle");
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == run_cli("table 10 --csv --oracle").output);
  CHECK(first.output.find("n,k,m,p_n,q_nk,f_nq,lower,upper,regime,oracle") == 0);

  const RunResult json_lines = run_cli("table 6 --json");
  CHECK(json_lines.exit_code == 0);
  CHECK(json_lines.output.find("\"regime\"") != std::string::npos);
}
