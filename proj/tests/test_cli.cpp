#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "c14/closure.hpp"
#include "c14/io.hpp"
#include "cli.hpp"

using namespace c14;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "c14");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::current_path() / "cli_scratch" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("generate with zero parameters") {
  auto dir = scratch("gen_zero");
  auto params = write(dir / "zero.json", "{}");
  auto r = run({"generate", "--order", "4", "--params", params, "--out", dir.string(), "--mode", "rational"});
  REQUIRE(r.code == 0);
  auto doc = load(dir / "closure_tensors.json");
  CHECK(doc["grades"].size() == 5);
  for (const auto& g : doc["grades"])
    for (const auto& v : g["delta_flux_antisym_F"]["values"]) CHECK(v == "0");
  auto theta = load(dir / "theta_table.json");
  CHECK(theta["entries"].empty());
}

TEST_CASE("generate reproduces the delta flux oracle") {
  auto dir = scratch("gen_beta1");
  auto params = write(dir / "beta1.json", R"({"beta": {"1": "1"}, "F": "G1"})");
  auto r = run({"generate", "--order", "3", "--params", params, "--out", dir.string(), "--mode", "rational"});
  REQUIRE(r.code == 0);
  auto doc = load(dir / "closure_tensors.json");
  auto g3 = doc["grades"][3];
  // flat index 9k + 3i + j with (k,i,j) = (0,1,1)
  CHECK(g3["antisym_F"]["values"][4] == "-9/2");
  CHECK(g3["delta_flux_antisym_F"]["values"][4] == "-9/2");
  for (int n = 0; n < 3; ++n)
    for (const auto& v : doc["grades"][n]["antisym_F"]["values"]) CHECK(v == "0");

  auto first = slurp(dir / "closure_tensors.json");
  REQUIRE(run({"generate", "--order", "3", "--params", params, "--out", dir.string(), "--mode", "rational"}).code == 0);
  CHECK(slurp(dir / "closure_tensors.json") == first);
}

TEST_CASE("generate input errors") {
  auto dir = scratch("gen_err");
  auto params = write(dir / "p.json", "{}");
  CHECK(run({"generate", "--order", "-1", "--params", params, "--out", dir.string()}).code == 2);
  CHECK(run({"generate", "--order", "2", "--out", dir.string()}).code == 2);
  CHECK(run({"generate", "--params", write(dir / "bad.json", "{not json"), "--out", dir.string()}).code == 2);
  CHECK(run({"generate", "--params", write(dir / "key.json", R"({"betta": {}})"), "--out", dir.string()}).code == 2);
  CHECK(run({"generate", "--params", write(dir / "b0.json", R"({"beta": {"0": "1"}})"), "--out", dir.string()}).code == 2);
  CHECK(run({"generate", "--params", params, "--mode", "quad", "--out", dir.string()}).code == 2);
  auto seeds = write(dir / "seed.json", R"({"max_order": 5, "entries": [{"p": 0, "q": 1, "r": 2, "s": 0, "value": "1"}]})");
  CHECK(run({"generate", "--params", params, "--seed-table", seeds, "--out", dir.string()}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify full suite passes") {
  auto dir = scratch("verify_ok");
  auto r = run({"verify", "--order", "4", "--tol", "1e-9", "--out", dir.string()});
  CHECK(r.code == 0);
  auto doc = load(dir / "verify_report.json");
  CHECK(doc["pass"] == true);
  CHECK(doc["checks"].size() > 10);
  auto first = slurp(dir / "verify_report.json");
  REQUIRE(run({"verify", "--order", "4", "--tol", "1e-9", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "verify_report.json") == first);
}

TEST_CASE("verify flags a forced beta_0") {
  auto dir = scratch("verify_beta0");
  auto params = write(dir / "b0.json", R"({"beta": {"1": "1"}, "beta0_injection": "1"})");
  auto r = run({"verify", "--order", "3", "--points", "20", "--params", params, "--out", dir.string()});
  CHECK(r.code == 1);
  auto doc = load(dir / "verify_report.json");
  bool named = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "beta0_vanishes") named = c["pass"] == false;
  CHECK(named);
  CHECK(r.out.find("FAIL beta0_vanishes") != std::string::npos);
}

TEST_CASE("verify with a missing params file") {
  auto dir = scratch("verify_missing");
  CHECK(run({"verify", "--params", (dir / "nope.json").string(), "--out", dir.string()}).code == 2);
}

TEST_CASE("profile") {
  auto dir = scratch("profile");
  auto zero = write(dir / "zero.json", "{}");
  auto r = run({"profile", "--order", "4", "--params", zero, "--out", dir.string(), "--mode", "rational"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "order,antisym_F,antisym_G\n0,0,0\n1,0,0\n2,0,0\n3,0,0\n4,0,0\n");
  CHECK(slurp(dir / "profile.csv") == r.out);

  auto b1 = write(dir / "b1.json", R"({"beta": {"1": "1"}, "F": "G1"})");
  r = run({"profile", "--order", "4", "--params", b1, "--out", dir.string(), "--mode", "rational"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "order,antisym_F,antisym_G\n0,0,0\n1,0,0\n2,0,0\n3,9/2,0\n4,5/4,0\n");

  r = run({"profile", "--order", "2", "--params", b1, "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "order,antisym_F,antisym_G\n0,0,0\n1,0,0\n2,0,0\n");
}

TEST_CASE("xmat") {
  auto dir = scratch("xmat");
  auto r = run({"xmat", "--velocity", "1,2,0", "--out", dir.string()});
  REQUIRE(r.code == 0);
  auto doc = load(dir / "xmatrix.json");
  CHECK(doc["X"][4][0] == "1");
  CHECK(doc["X"][5][0] == "2");
  CHECK(run({"xmat", "--velocity", "1,2", "--out", dir.string()}).code == 2);
  CHECK(run({"xmat", "--velocity", "a,b,c", "--out", dir.string()}).code == 2);
}

TEST_CASE("appendix2") {
  auto dir = scratch("appendix2");
  std::vector<double> rho{0.5, 0.8, 1.1, 1.4, 1.7}, T{1, 1.25, 1.5, 1.75, 2};
  auto write_table = [&](const std::string& name, std::function<double(double, double)> f) {
    std::ofstream out(dir / name);
    write_thermo_csv(out, synthetic_thermo_table(rho, T, f));
    return (dir / name).string();
  };
  auto r = run({"appendix2", "--thermo", write_table("seven.csv", [](double, double t) { return 7 / t; }),
                "--out", dir.string()});
  CHECK(r.code == 0);
  auto doc = load(dir / "appendix2_report.json");
  CHECK(doc["constant"].get<double>() == doctest::Approx(7));
  CHECK(doc["constant_zero"] == false);

  r = run({"appendix2", "--thermo", write_table("zero.csv", [](double, double) { return 0.0; }), "--out",
           dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("first-order symmetry holds") != std::string::npos);

  r = run({"appendix2", "--thermo", write_table("lin.csv", [](double, double t) { return t; }), "--out",
           dir.string()});
  CHECK(r.code == 1);

  CHECK(run({"appendix2", "--thermo", (dir / "absent.csv").string(), "--out", dir.string()}).code == 2);
  CHECK(run({"appendix2", "--out", dir.string()}).code == 2);
}
