#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "berezin/cli.hpp"
#include "berezin/run_record.hpp"

using berezin::cli::Json;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = berezin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json record(const Output& o) { return Json::parse(o.out); }

struct PinnedClock {
  PinnedClock() { setenv("SOURCE_DATE_EPOCH", "1700000000", 1); }
  ~PinnedClock() { unsetenv("SOURCE_DATE_EPOCH"); }
};

}  // namespace

TEST_CASE("transform") {
  const Output o = call({"transform", "--n", "1", "--lambda", "1", "--alpha", "1"});
  REQUIRE(o.code == 0);
  const Json r = record(o);
  CHECK(r["command"] == "transform");
  CHECK(r["results"]["compression"].get<double>() == 0.5);
  CHECK(r["results"]["amplitude"].get<double>() == doctest::Approx(0.70710678118654752).epsilon(1e-15));

  const Json trivial = record(call({"transform", "--n", "1", "--lambda", "0", "--alpha", "5"}));
  CHECK(trivial["results"]["compression"].get<double>() == 0.0);
  CHECK(trivial["results"]["amplitude"].get<double>() == 1.0);

  const Output numeric = call({"transform", "--n", "1", "--lambda", "2", "--alpha", "3", "--numeric", "80", "--at", "0.4,0.1"});
  REQUIRE(numeric.code == 0);
  const Json nr = record(numeric);
  CHECK(nr["results"]["deviation"].get<double>() < 1e-9);
  CHECK(nr["results"]["closed_value"].get<double>() == doctest::Approx(0.6392799514357761).epsilon(1e-14));

  const Json two = record(call({"transform", "--n", "2", "--lambda", "1", "--alpha", "2", "--numeric", "24", "--at", "0.1,0;0.2,0.3"}));
  CHECK(two["results"]["deviation"].get<double>() < 1e-9);
}

TEST_CASE("transform contract violation") {
  // A 2-point rule cannot resolve a narrow Gaussian.
  const Output o = call({"transform", "--n", "1", "--lambda", "50", "--alpha", "1", "--numeric", "2", "--at", "1,0"});
  CHECK(o.code == 3);
  CHECK(record(o)["results"]["within_tolerance"] == false);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"transform", "--lambda", "1"}).code == 2);
  CHECK(call({"transform", "--lambda", "x", "--alpha", "1"}).code == 2);
  CHECK(call({"transform", "--lambda", "-1", "--alpha", "1"}).code == 2);
  CHECK(call({"transform", "--lambda", "1", "--alpha", "0"}).code == 2);
  CHECK(call({"transform", "--lambda", "1", "--alpha", "1", "--numeric", "20", "--at", "0.1"}).code == 2);
  CHECK(call({"transform", "--n", "2", "--lambda", "1", "--alpha", "1", "--numeric", "20", "--at", "0.1,0"}).code == 2);
  CHECK(call({"uncertainty", "--lambda", "-1"}).code == 2);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
  CHECK(call({"sweep", "--quantity", "normalized_trace"}).code == 2);
  CHECK(call({"sweep", "--quantity", "bogus", "--values", "1"}).code == 2);
  CHECK(call({"sweep", "--quantity", "amplitude", "--values", "1", "--linspace", "0:1:3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("rule order outside the supported range") {
  CHECK(call({"transform", "--lambda", "1", "--alpha", "1", "--numeric", "2000"}).code == 2);
  CHECK(call({"transform", "--lambda", "1", "--alpha", "1", "--numeric", "0"}).code == 2);
}

TEST_CASE("trace") {
  const Json r = record(call({"trace", "--n", "1", "--lambda", "1", "--alpha", "1"}));
  CHECK(r["results"]["normalized_trace"].get<double>() == 0.5);
  CHECK(r["results"]["quadrature"]["deviation"].get<double>() < 1e-9);

  const Json big = record(call({"trace", "--n", "1", "--lambda", "1", "--alpha", "1e6"}));
  CHECK(big["results"]["normalized_trace"].get<double>() == doctest::Approx(0.9999985).epsilon(1e-6));

  const Json three = record(call({"trace", "--n", "3", "--lambda", "1", "--alpha", "1"}));
  CHECK(three["results"]["normalized_trace"].get<double>() == 0.125);
  CHECK(three["results"]["quadrature"].is_null());

  const Json two = record(call({"trace", "--n", "2", "--lambda", "1", "--alpha", "1"}));
  CHECK(two["results"]["normalized_trace"].get<double>() == 0.25);
  CHECK(two["results"]["quadrature"]["deviation"].get<double>() < 1e-9);
}

TEST_CASE("uncertainty") {
  const Output o = call({"uncertainty", "--lambda", "1"});
  REQUIRE(o.code == 0);
  const Json r = record(o);
  CHECK(r["results"]["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r["results"]["var_x"].get<double>() == doctest::Approx(2.5066282746310005).epsilon(1e-14));

  const Json k = record(call({"uncertainty", "--lambda", "0.1", "--K", "2"}));
  CHECK(k["results"]["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k["results"]["quadrature"]["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sweep") {
  const Output o = call({"sweep", "--quantity", "normalized_trace", "--over", "alpha", "--lambda", "1", "--logspace", "0:6:13", "--csv"});
  REQUIRE(o.code == 0);
  std::istringstream is(o.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);
  REQUIRE(lines.size() == 14);
  CHECK(lines[0] == "n,lambda,alpha,normalized_trace");
  CHECK(lines[1] == "1,1,1,0.5");
  const double last = std::stod(lines.back().substr(lines.back().rfind(',') + 1));
  CHECK(last == doctest::Approx(1.0).epsilon(2e-6));

  // Rows follow grid order even when the grid is not sorted.
  const Json unsorted = record(call({"sweep", "--quantity", "amplitude", "--values", "5,1,3"}));
  CHECK(unsorted["results"]["rows"][0][2].get<double>() == 5.0);
  CHECK(unsorted["results"]["rows"][1][2].get<double>() == 1.0);
  CHECK(unsorted["results"]["rows"][2][2].get<double>() == 3.0);

  const Json zero = record(call({"sweep", "--quantity", "compression", "--over", "lambda", "--values", "0"}));
  CHECK(zero["results"]["rows"][0][3].get<double>() == 0.0);

  const Json exp = record(call({"sweep", "--quantity", "expansion_residual", "--values", "10,100,1000"}));
  CHECK(exp["results"]["slope"].get<double>() == doctest::Approx(-1.0).epsilon(0.1));

  const Json tay = record(call({"sweep", "--quantity", "taylor_remainder", "--values", "10,100,1000"}));
  CHECK(tay["results"]["slope"].get<double>() == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("sweep writes CSV to a file") {
  const auto path = std::filesystem::temp_directory_path() / "berezin_sweep_test.csv";
  const Output o = call({"sweep", "--quantity", "amplitude", "--linspace", "1:3:3", "--out", path.string()});
  REQUIRE(o.code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "n,lambda,alpha,amplitude\n1,1,1,0.70710678118654757\n1,1,2,0.81649658092772603\n1,1,3,0.8660254037844386\n");
  std::filesystem::remove(path);
}

TEST_CASE("records round-trip through JSON") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"transform", "--lambda", "2", "--alpha", "3", "--numeric", "40", "--at", "0.4,0.1"},
           {"trace", "--lambda", "0.3", "--alpha", "7"},
           {"uncertainty", "--lambda", "0.7", "--K", "3"},
           {"verify", "--suite", "star", "--seed", "3"}}) {
    const Output o = call(args);
    const berezin::cli::RunRecord rec = berezin::cli::record_from_json(Json::parse(o.out));
    CHECK(berezin::cli::serialize(rec) + "\n" == o.out);
    CHECK(berezin::cli::record_from_json(berezin::cli::to_json(rec)) == rec);
  }
}

TEST_CASE("verify is deterministic") {
  PinnedClock clock;
  const Output a = call({"verify", "--suite", "star", "--seed", "7"});
  const Output b = call({"verify", "--suite", "star", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(record(a)["timestamp"] == "2023-11-14T22:13:20Z");
  CHECK(record(a)["seed"] == 7);

  setenv("BEREZIN_SEED", "7", 1);
  const Output c = call({"verify", "--suite", "star"});
  unsetenv("BEREZIN_SEED");
  CHECK(c.out == a.out);

  const Output d = call({"verify", "--suite", "star", "--seed", "8"});
  CHECK(record(d)["results"] != record(a)["results"]);
}
