#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cornerwalk/cli.hpp"
#include "cornerwalk/report.hpp"

using namespace cornerwalk;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cornerwalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("enumerate prints a distribution") {
  auto r = run_cli({"enumerate", "--vpath", "NS", "--hpath", "EE", "--stat", "signed-peak"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json{{"0", "3"}, {"-1", "3"}});
  auto csv = run_cli({"enumerate", "--vpath", "NS", "--hpath", "EE", "--stat", "signed-peak", "--format", "csv"});
  CHECK(csv.out == "value,count\n-1,3\n0,3\n");
  auto loops = run_cli({"enumerate", "--loops", "4"});
  CHECK(json::parse(loops.out) == json{{"0", "8"}, {"1", "2"}});
  auto q = run_cli({"enumerate", "--vpath", "NS", "--class", "1,1,1,1"});
  CHECK(json::parse(q.out) == json{{"0", "4"}, {"1", "2"}});
}

TEST_CASE("gf reports coefficients, shift and positivity") {
  auto r = run_cli({"gf", "--class", "1,1,1,1", "--stat", "abs-signed-peak"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["coeffs"] == json::array({"4", "2"}));
  CHECK(j["shifted"] == json::array({"2", "2"}));
  CHECK(j["positive"] == true);

  auto p = json::parse(run_cli({"gf", "--poly", "15,12,1"}).out);
  CHECK(p["shifted"] == json::array({"4", "10", "1"}));
  CHECK(p["toggle_basis"] == json::array({"4", "8", "1"}));
  CHECK(p["toggle_buildable"] == true);

  auto g1 = json::parse(run_cli({"gf", "--vpath", "NNSNSS", "--class", "1,1,3,3"}).out);
  CHECK(g1["coeffs"] == json::array({"15", "12", "1"}));

  auto csv = run_cli({"gf", "--poly", "4,2", "--format", "csv"});
  CHECK(csv.out == "power,coeff,shifted\n0,4,2\n1,2,2\n");
  CHECK(run_cli({"gf", "--class", "1,1,1,1", "--stat", "peak"}).code == 1);
}

TEST_CASE("bijection subcommand") {
  auto f = json::parse(run_cli({"bijection", "flip", "--shuffle", "EENWSNEWWN"}).out);
  CHECK(f["output"] == "NEEWSENWWN");
  auto t = json::parse(run_cli({"bijection", "toggle", "--word", "110110", "--index", "1"}).out);
  CHECK(t["output"] == "111010");
  auto c = json::parse(run_cli({"bijection", "toggle-class", "--word", "110110"}).out);
  CHECK(c["size"] == "4");
  auto w = json::parse(run_cli({"bijection", "word-to-shuffle", "--word", "0101", "--vpath", "NS", "--hpath", "EW"}).out);
  CHECK(w["signed_peak"] == "1");
  auto back = json::parse(run_cli({"bijection", "shuffle-to-word", "--shuffle", w["output"].get<std::string>(),
                                   "--vpath", "NS", "--hpath", "EW"})
                              .out);
  CHECK(back["output"] == "0101");
  CHECK(json::parse(run_cli({"bijection", "complement", "--shuffle", "ENWS"}).out)["output"] == "NESW");
  CHECK(run_cli({"bijection", "toggle", "--word", "110110"}).code == 1);
}

TEST_CASE("verify exit codes") {
  auto ok = run_cli({"verify", "thmmain", "--max", "3"});
  CHECK(ok.code == 0);
  auto reports = json::parse(ok.out);
  CHECK(reports.size() == 256);
  for (const auto& r : reports) {
    CHECK(r["verdict"] == "confirmed");
    for (const char* key : {"check", "params", "expected", "observed", "verdict", "witness"})
      CHECK(r.contains(key));
  }
  auto probe = run_cli({"verify", "toggle-example"});
  CHECK(probe.code == 2);
  auto pj = json::parse(probe.out);
  CHECK(pj[0]["verdict"] == "discrepancy-with-paper");
  CHECK(pj[0]["observed"]["basis_coeffs"] == json::array({"4", "8", "1"}));
}

TEST_CASE("scan output is independent of job count") {
  auto one = run_cli({"scan", "all", "--max", "2", "--jobs", "1"});
  auto four = run_cli({"scan", "all", "--max", "2", "--jobs", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  auto planar = run_cli({"scan", "conjmain", "conjbuild", "--max", "2", "--mode", "planar", "--format", "csv"});
  CHECK(planar.code == 0);
  CHECK(planar.out.rfind("check,params,verdict,expected,observed,witness,note\n", 0) == 0);
  auto timed = run_cli({"scan", "conj10", "--max-len", "4", "--timing"});
  CHECK(json::parse(timed.out)[0].contains("runtime_us"));
  CHECK_FALSE(json::parse(one.out)[0].contains("runtime_us"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"enumerate", "--bogus"}).code == 1);
  auto bad_path = run_cli({"enumerate", "--vpath", "NX", "--hpath", "E"});
  CHECK(bad_path.code == 1);
  CHECK(bad_path.err.find("error") != std::string::npos);
  CHECK(run_cli({"enumerate", "--loops", "3"}).code == 1);
  CHECK(run_cli({"gf", "--class", "1,1,1"}).code == 1);
  CHECK(run_cli({"verify", "nothing"}).code == 1);
  CHECK(run_cli({"scan", "conjmain", "--jobs", "0"}).code == 1);
  CHECK(run_cli({"enumerate", "--vpath", "NS", "--hpath", "EE", "--format", "xml"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "cli_out_test.json";
  auto r = run_cli({"gf", "--poly", "4,2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str())["shifted"] == json::array({"2", "2"}));
  std::remove(path.c_str());
}

TEST_CASE("empty reports") {
  CHECK(emit(std::vector<VerdictReport>{}, Format::Json) == "[]\n");
  CHECK(emit(std::vector<VerdictReport>{}, Format::Csv) == "check,params,verdict,expected,observed,witness,note\n");
  Distribution d;
  d.add(0, 3);
  d.add(-1, 3);
  CHECK(emit(d, Format::Csv) == "value,count\n-1,3\n0,3\n");
  CHECK(emit(IntPoly{4, 2}, Format::Json) == "{\"coeffs\":[\"4\",\"2\"],\"shifted\":[\"2\",\"2\"]}\n");
}
