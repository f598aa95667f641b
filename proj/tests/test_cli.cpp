#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// runs the installed binary with stderr dropped; stdout is the contract
RunResult run(const std::string& args) {
  const char* bin = std::getenv("GFP_LAB_BIN");
#ifdef GFP_LAB_BIN
  if (bin == nullptr) bin = GFP_LAB_BIN;
#endif
  REQUIRE_MESSAGE(bin != nullptr, "GFP_LAB_BIN must point at the gfp-lab binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

json run_json(const std::string& args) {
  const RunResult res = run(args);
  REQUIRE(res.exit_code == 0);
  return json::parse(res.out);
}

}  // namespace

TEST_CASE("registry lists the classical families") {
  const json arr = run_json("registry");
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 13);
  CHECK(arr[0]["name"] == "fibonacci");
  CHECK(arr[0]["kind"] == "fibonacci");
  CHECK(arr[1]["name"] == "lucas");
  CHECK(arr[1]["kind"] == "lucas");
  CHECK(arr[1]["p0"] == "2");
  CHECK(arr[12]["name"] == "vieta-lucas");
}

TEST_CASE("generate emits exact coefficient strings") {
  const json j = run_json("generate --family fibonacci --n 5");
  REQUIRE(j["terms"].size() == 6);
  CHECK(j["terms"][5] == json::array({"1", "0", "3", "0", "1"}));
  CHECK(j["pretty"][5] == "x^4 + 3x^2 + 1");
  CHECK(j["terms"][0] == json::array());
  CHECK(j["family"]["name"] == "fibonacci");
}

TEST_CASE("expand uses the closed form") {
  const json j = run_json("expand --family fermat --n 3");
  CHECK(j["coefficients"] == json::array({"-2", "0", "9"}));
  CHECK(j["pretty"] == "9x^2 - 2");

  const json l = run_json("expand --family lucas --n 3");
  CHECK(l["coefficients"] == json::array({"0", "3", "0", "1"}));
}

TEST_CASE("binet agrees with the recurrence off the real line") {
  const json j = run_json("binet --family pell --n 6 --re 0.4 --im 0.3");
  CHECK(j["abs_error"].get<double>() < 1e-9);
  CHECK(j["binet"]["re"].get<double>() ==
        doctest::Approx(j["recurrence"]["re"].get<double>()).epsilon(1e-9));
}

TEST_CASE("roots come back sorted with residuals") {
  const json j = run_json("roots --family chebyshev-second-kind --n 4");
  REQUIRE(j["roots"].size() == 3);
  CHECK(std::fabs(j["roots"][1]["re"].get<double>()) < 1e-12);
  for (const auto& r : j["roots"]) {
    CHECK(r["residual"].get<double>() <= j["tolerance"].get<double>());
  }
}

TEST_CASE("classify renders both verdict flavors") {
  const json no = run_json("classify --family fibonacci");
  CHECK(no["verdict"] == "NotOrthogonal");
  CHECK(!no.contains("weight"));

  const json yes = run_json("classify --family chebyshev-second-kind");
  CHECK(yes["verdict"] == "Orthogonal");
  REQUIRE(yes.contains("weight"));
  CHECK(yes["weight"]["kind"] == "fibonacci");
  CHECK(yes["weight"]["mass"].get<double>() == doctest::Approx(2 * 3.14159265358979).epsilon(1e-9));
  CHECK(yes["max_offdiag"].get<double>() <= 1e-8);
}

TEST_CASE("gram csv carries one row per entry") {
  const RunResult res = run("gram --family chebyshev-first-kind --nmax 3 --format csv");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.out.rfind("i,j,value\n", 0) == 0);
  int lines = 0;
  for (char ch : res.out) lines += ch == '\n';
  CHECK(lines == 1 + 16);  // header + 4x4 block, subscripts 0..3
  // the (0,0) entry is the T_0 mass, pi
  const size_t first = res.out.find('\n') + 1;
  const std::string row = res.out.substr(first, res.out.find('\n', first) - first);
  REQUIRE(row.rfind("0,0,", 0) == 0);
  CHECK(std::stod(row.substr(4)) == doctest::Approx(3.14159265358979).epsilon(1e-12));
}

TEST_CASE("walk prints chain, potential, and verdict together") {
  const json j = run_json("walk --c 16 --h -14");
  CHECK(j["chain"]["p"] == "1/16");
  CHECK(j["chain"]["r0"] == "7/8");
  CHECK(j["chain"]["stochastic"] == true);
  CHECK(j["chain"]["rows"][0]["p"] == "1/8");
  CHECK(j["chain"]["rows"][2]["q"] == "1/16");
  CHECK(j["potential"]["pi"][3] == "2");
  CHECK(j["potential"]["convergent"] == false);
  CHECK(j["ergodicity"]["verdict"] == "NotErgodic");
  CHECK(j["ergodicity"]["series_value"] == "Divergent");

  const json erg = run_json("walk --c 8 --h -3");
  CHECK(erg["ergodicity"]["verdict"] == "Ergodic");
  CHECK(erg["ergodicity"]["series_value"] == "5/3");
  CHECK(erg["ergodicity"]["in_strict_window"] == true);
}

TEST_CASE("generator mirrors the walk output") {
  const json j = run_json("generator --c -1 --k 8");
  CHECK(j["generator"]["mu"] == "2");
  CHECK(j["generator"]["conservative"] == false);
  CHECK(j["generator"]["rows"][1]["beta"] == "-3");
  CHECK(j["ergodicity"]["chain_kind"] == "Continuous");
}

TEST_CASE("ergodicity stands alone as a subcommand") {
  const json j = run_json("ergodicity --c 8 --h -3");
  CHECK(j["verdict"] == "Ergodic");
  CHECK(j["ratio"] == "1/4");
  const json c = run_json("ergodicity --c -1 --k 16 --continuous");
  CHECK(c["series_value"] == "5/3");
}

TEST_CASE("km pairs the spectral value with its oracle") {
  const json j = run_json("km --c 2 --h 0 --i 0 --j 0 --n 8 --oracle power --size 60");
  REQUIRE(j.size() == 2);
  CHECK(j[0]["method"] == "KarlinMcGregor");
  CHECK(j[1]["method"] == "MatrixPower");
  CHECK(std::fabs(j[0]["value"].get<double>() - j[1]["value"].get<double>()) < 1e-8);

  const json c = run_json("km --c -2 --k 4 --continuous --i 0 --j 1 --t 0.5 --oracle expm --size 150");
  REQUIRE(c.size() == 2);
  CHECK(c[1]["method"] == "MatrixExponential");
  CHECK(std::fabs(c[0]["value"].get<double>() - c[1]["value"].get<double>()) < 1e-6);

  const json mc = run_json("km --c 2 --h 0 --i 0 --j 0 --n 6 --oracle mc --trials 200000 --seed 9");
  REQUIRE(mc.size() == 2);
  CHECK(mc[1]["method"] == "MonteCarlo");
  REQUIRE(mc[1].contains("error_bar"));
  CHECK(std::fabs(mc[0]["value"].get<double>() - mc[1]["value"].get<double>()) <=
        4.0 * std::max(mc[1]["error_bar"].get<double>(), 1e-9));
}

TEST_CASE("simulate emits a deterministic csv") {
  const std::string cmd = "simulate --c 2 --h 0 --i 0 --n 1 --trials 1000 --seed 7";
  const RunResult res = run(cmd);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out ==
        "state,count,frequency,std_error\n"
        "0,0,0,0\n"
        "1,1000,1,0\n"
        "absorbed,0,0,0\n");
  const RunResult again = run(cmd);
  CHECK(res.out == again.out);

  const json j = run_json("simulate --c 3 --h 0 --i 0 --n 4 --trials 5000 --seed 3 --format json");
  CHECK(j["trials"] == 5000);
  long long total = j["absorbed"]["count"].get<long long>();
  for (const auto& s : j["states"]) total += s["count"].get<long long>();
  CHECK(total == 5000);
}

TEST_CASE("families parse from inline json and from files") {
  const json inl = run_json(
      "generate --family '{\"kind\":\"fibonacci\",\"d\":[0,1],\"g\":[1]}' --n 3");
  CHECK(inl["terms"][3] == json::array({"1", "0", "1"}));

  const std::string path = "/tmp/gfp_cli_family.json";
  {
    std::ofstream f(path);
    f << "{\"kind\":\"lucas\",\"p0\":\"2\",\"d\":[0,3],\"g\":[-2],\"name\":\"fl\"}";
  }
  const json file = run_json("expand --family-file " + path + " --n 3");
  CHECK(file["coefficients"] == json::array({"0", "-18", "0", "27"}));
  std::remove(path.c_str());
}

TEST_CASE("failures map to exit codes") {
  CHECK(run("walk --c 8/5 --h -1/2").exit_code == 2);   // violated hypothesis
  CHECK(run("walk --c 16").exit_code == 2);             // missing required flag
  CHECK(run("generate --family tribonacci").exit_code == 2);
  CHECK(run("generate --family fibonacci --bogus 3").exit_code == 2);
  CHECK(run("").exit_code == 2);                        // a subcommand is required
  CHECK(run("km --c 2 --h 0 --oracle expm").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("registry --help").exit_code == 0);
}
