#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(KOLCHIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Json parse(const RunResult& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("dimpoly reads inline JSON and verifies against counting") {
  const RunResult r =
      run("dimpoly -i '{\"m\":2,\"rows\":[[1,1]]}' --verify-upto 8");
  CHECK(r.exit_code == 0);
  const Json j = parse(r);
  CHECK(j["polynomial"]["standard_coeffs"] == Json::array({2, -1}));
  CHECK(j["stability_bound"] == 2);
  CHECK(j["verified"] == true);
}

TEST_CASE("dimpoly reads the plain-text matrix format") {
  const std::string path = "/tmp/kolchin_cli_matrix.txt";
  // excluded directions leave (0,b) for b <= s plus (1,0): count s+2
  std::ofstream(path) << "2\n1 1\n2 0\n";
  const RunResult r = run("dimpoly -i " + path);
  CHECK(r.exit_code == 0);
  CHECK(parse(r)["polynomial"]["standard_coeffs"] == Json::array({1, 1}));
}

TEST_CASE("output is byte-identical across runs and row orderings") {
  const RunResult a = run("dimpoly -i '{\"m\":3,\"rows\":[[1,2,0],[0,1,1],[2,0,0]]}'");
  const RunResult b = run("dimpoly -i '{\"m\":3,\"rows\":[[2,0,0],[1,2,0],[0,1,1]]}'");
  const RunResult c = run("dimpoly -i '{\"m\":3,\"rows\":[[1,2,0],[0,1,1],[2,0,0]]}'");
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
}

TEST_CASE("mincoeffs and in-w") {
  const Json m = parse(run("mincoeffs -i '{\"standard_coeffs\":[2,-1]}'"));
  CHECK(m["minimizing"] == Json::array({2, 0}));
  CHECK(m["in_W"] == true);
  const Json w = parse(run("in-w -i '{\"standard_coeffs\":[2,-2]}'"));
  CHECK(w["in_W"] == false);
  CHECK(w["witness"]["index"] == 0);
  CHECK(w["witness"]["value"] == -1);
}

TEST_CASE("charpoly on generator and leader-matrix systems") {
  const Json a = parse(run(
      "charpoly -i '{\"m\":2,\"n\":1,\"generators\":[{\"terms\":[{\"exp\":[1,1],"
      "\"comp\":1,\"coef\":\"1\"}]}]}'"));
  CHECK(a["polynomial"]["standard_coeffs"] == Json::array({2}));
  CHECK(a["invariants"]["codim"] == 1);

  const Json b = parse(run(
      "charpoly -i '{\"m\":4,\"n\":1,\"leader_matrices\":[{\"rows\":[[2,0,0,0],"
      "[0,2,0,0],[1,0,2,1],[0,0,4,2]]}],\"degrees\":[0]}'"));
  CHECK(b["polynomial"]["standard_coeffs"] == Json::array({18}));
  CHECK(b["invariants"]["codim"] == 3);
  CHECK(b["invariants"]["typical_dimension"] == 18);
}

TEST_CASE("bound subcommand, closed and general") {
  const Json closed = parse(run("bound --codim 1 --orders 2,3"));
  CHECK(closed["bound"] == 5);
  CHECK(closed["method"] == "closed");

  const Json general = parse(run("bound --codim 2 --orders 7 --general --trace"));
  CHECK(general["bound"] == 49);
  CHECK(general.contains("derivation"));
  CHECK(general["derivation"]["b"] == Json::array({7, 0}));

  const Json flagged = parse(run("bound --codim 5 --orders 2 --general"));
  CHECK(flagged["bound"] == 34056);
  CHECK(flagged["discrepancy_flags"].size() == 1);
}

TEST_CASE("jacobi subcommand") {
  CHECK(parse(run("jacobi -i '{\"matrix\":[[1,2],[3,4]]}'"))["jacobi"] == 5);
  CHECK(parse(run("jacobi -i '{\"matrix\":[[1,null],[null,null]]}'"))["jacobi"]
            .is_null());
}

TEST_CASE("verify subcommand and exit codes") {
  const RunResult ok = run(
      "verify -i '{\"m\":4,\"n\":1,\"leader_matrices\":[{\"rows\":[[2,0,0,0],"
      "[0,2,0,0],[1,0,2,1],[0,0,4,2]]}],\"degrees\":[0],\"orders\":[2]}'");
  CHECK(ok.exit_code == 0);
  const Json j = parse(ok);
  CHECK(j["holds"] == true);
  CHECK(j["bound_report"]["bound"] == 18);
  CHECK(j["invariants"]["typical_dimension"] == 18);
}

TEST_CASE("example-ex matches the closed form") {
  for (int k = 1; k <= 3; ++k) {
    const RunResult r = run("example-ex --k " + std::to_string(k));
    CHECK(r.exit_code == 0);
    const Json j = parse(r);
    CHECK(j["match"] == true);
    CHECK(j["charpoly"] == k * k * (k + 1) * (k + 1) / 2);
  }
}

TEST_CASE("parse failures exit 1 with a structured error") {
  const RunResult bad = run("dimpoly -i '{\"m\":2,\"rows\":[[1,-1]]}'");
  CHECK(bad.exit_code == 1);
  CHECK(parse(bad)["error"]["code"] == "InvalidInput");

  const RunResult unsupported = run("bound --codim 6 --orders 2");
  CHECK(unsupported.exit_code == 1);
  CHECK(parse(unsupported)["error"]["code"] == "UnsupportedCodim");

  const RunResult multi = run("bound --codim 3 --orders 2,3");
  CHECK(multi.exit_code == 1);
  CHECK(parse(multi)["error"]["code"] == "MultipleOrdersUnsupported");
}

TEST_CASE("bounds beyond 64 bits are emitted as decimal strings") {
  const Json j = parse(run("bound --codim 7 --orders 3 --general"));
  CHECK(j["bound"].is_string());
  CHECK(j["bound"] == "102214399896515331594553596");
}

TEST_CASE("integers are accepted as numbers or decimal strings") {
  const Json a = parse(run("mincoeffs -i '{\"standard_coeffs\":[\"2\",\"-1\"]}'"));
  const Json b = parse(run("mincoeffs -i '{\"standard_coeffs\":[2,-1]}'"));
  CHECK(a == b);
  // e^2(e+1)^2/2 at e = 10^20 stays exact
  const Json big = parse(run("bound --codim 3 --orders 100000000000000000000"));
  CHECK(big["bound"] ==
        "50000000000000000001000000000000000000005000000000000000000000000000000000000000");
}

TEST_CASE("verify works on generator-form systems") {
  const RunResult r = run(
      "verify -i '{\"m\":2,\"n\":1,\"generators\":[{\"terms\":[{\"exp\":[1,1],"
      "\"comp\":1,\"coef\":\"1\"}]}]}'");
  CHECK(r.exit_code == 0);
  const Json j = parse(r);
  CHECK(j["invariants"]["codim"] == 1);
  CHECK(j["bound_report"]["bound"] == 2);
  CHECK(j["holds"] == true);
}

TEST_CASE("example-ex rejects k below one") {
  const RunResult r = run("example-ex --k 0");
  CHECK(r.exit_code == 1);
  CHECK(parse(r)["error"]["code"] == "InvalidInput");
}

TEST_CASE("text format renders human-readable lines") {
  const RunResult r = run("dimpoly -i '{\"m\":2,\"rows\":[[1,1]]}' --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2*C(s+1,1) - 1") != std::string::npos);
  CHECK(r.output.find("2*s + 1") != std::string::npos);
}
