#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace modknot::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "modknot");
  std::ostringstream out, err;
  const ParseResult parsed = parse_args(static_cast<int>(args.size()), args.data(), out, err);
  if (!parsed.config) return {parsed.exit_code, out.str(), err.str()};
  const int code = run(*parsed.config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("enumerate csv") {
  const Outcome o = invoke({"enumerate", "--trace-bound", "5", "--format", "csv", "--workers", "1"});
  CHECK(o.code == 0);
  CHECK(o.err.empty());
  const auto ls = lines(o.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "necklace,a,b,c,d,trace,length");
  CHECK(ls[1] == "LR,1,1,1,2,3,1.9248473002384139");
  CHECK(ls[2].rfind("LLR,1,1,2,3,4,", 0) == 0);
  CHECK(ls[3].rfind("LRR,1,2,1,3,4,", 0) == 0);
}

TEST_CASE("symbols csv columns") {
  const Outcome o = invoke({"symbols", "--trace-bound", "5", "--workers", "2"});
  CHECK(o.code == 0);
  const auto ls = lines(o.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "necklace,a,b,c,d,trace,length,phi,psi,psi_word");
  CHECK(ls[1].ends_with(",3,0,0"));
  CHECK(ls[2].ends_with(",2,-1,-1"));
  CHECK(ls[3].ends_with(",4,1,1"));
}

TEST_CASE("density json") {
  const Outcome o = invoke({"density", "--trace-bound", "5", "--mod", "3", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["command"] == "density");
  CHECK(doc["counts"] == nlohmann::json::array({1, 1, 1}));
  for (const auto& d : doc["densities"]) CHECK(d.get<double>() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("enumerate json records") {
  const Outcome o = invoke({"enumerate", "--trace-bound", "6", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["trace_bound"] == 6);
  const auto& rs = doc["records"];
  REQUIRE(rs.size() == 5);
  CHECK(rs[0]["necklace"] == "LR");
  CHECK(rs[0]["a"] == 1);
  CHECK(rs[0]["d"] == 2);
  CHECK(rs[4]["trace"] == 5);
}

TEST_CASE("cauchy csv and json") {
  const Outcome csv = invoke({"cauchy", "--length-bound", "8", "--bins", "-1,0,1"});
  CHECK(csv.code == 0);
  const auto ls = lines(csv.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "lo,hi,empirical,theoretical");
  CHECK(ls[1].rfind("-inf,-1,", 0) == 0);
  CHECK(ls[4].rfind("1,inf,", 0) == 0);

  const Outcome js = invoke({"cauchy", "--length-bound", "8", "--format", "json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["bins"][0]["lo"].is_null());
  CHECK(doc["ks_distance"].get<double>() >= 0.0);
  double mass = 0.0;
  for (const auto& b : doc["bins"]) mass += b["theoretical"].get<double>();
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("winding command") {
  const Outcome o = invoke({"winding", "--trace-bound", "8"});
  CHECK(o.code == 0);
  const auto ls = lines(o.out);
  REQUIRE(ls.size() > 3);
  CHECK(ls[0] == "necklace,trace,psi,winding,residual,samples,match");
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].ends_with(",true"));
}

TEST_CASE("verify exits 0 at bound 20") {
  const Outcome o = invoke({"verify", "--trace-bound", "20", "--workers", "2"});
  CHECK(o.code == 0);
  for (const auto& l : lines(o.out)) CHECK(l.rfind("PASS ", 0) == 0);
  const Outcome js = invoke({"verify", "--trace-bound", "12", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out)["passed"] == true);
}

TEST_CASE("identical configs give identical bytes") {
  const Outcome a = invoke({"symbols", "--trace-bound", "60", "--workers", "1", "--format", "json"});
  const Outcome b = invoke({"symbols", "--trace-bound", "60", "--workers", "8", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config errors exit with 2 and keep stdout clean") {
  for (const auto& args : std::vector<std::vector<const char*>>{
           {"enumerate"},
           {"enumerate", "--trace-bound", "2"},
           {"enumerate", "--trace-bound", "5", "--format", "xml"},
           {"density", "--trace-bound", "5"},
           {"density", "--trace-bound", "5", "--mod", "1"},
           {"cauchy", "--trace-bound", "5"},
           {"cauchy", "--length-bound", "5", "--bins", "1,0"},
           {"bogus"},
           {}}) {
    const Outcome o = invoke(args);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("worker count from the environment") {
  ::setenv(kWorkersEnv, "3", 1);
  std::vector<const char*> args{"modknot", "enumerate", "--trace-bound", "5"};
  std::ostringstream out, err;
  auto parsed = parse_args(static_cast<int>(args.size()), args.data(), out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->worker_count == 3);

  std::vector<const char*> explicit_args{"modknot", "enumerate", "--trace-bound", "5", "--workers", "2"};
  parsed = parse_args(static_cast<int>(explicit_args.size()), explicit_args.data(), out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->worker_count == 2);

  ::setenv(kWorkersEnv, "zero", 1);
  parsed = parse_args(static_cast<int>(args.size()), args.data(), out, err);
  CHECK_FALSE(parsed.config);
  CHECK(parsed.exit_code == 2);
  ::unsetenv(kWorkersEnv);
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  const double x = 2.633915793849633;
  CHECK(std::stod(format_double(x)) == x);
}
