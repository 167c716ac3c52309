#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"

#include "magma/laws.hpp"

using namespace magma;

TEST_CASE("the law registry") {
  const std::vector<std::string>& names = law_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "unitality");
  CHECK(names.back() == "rigidity");
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
}

TEST_CASE("unknown laws and bad sizes are rejected") {
  VerifyConfig cfg;
  cfg.law = "associativity";
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
  cfg.law = "finv";
  cfg.degree = 0;
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
  cfg.degree = 4;
  cfg.samples = 0;
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
}

TEST_CASE("a single law report carries the config and passes") {
  VerifyConfig cfg;
  cfg.law = "corolla-reduced";
  cfg.degree = 4;
  cfg.bound = ArityBound(3);
  LawReport rep = run_law(cfg);
  CHECK(rep.law == "corolla-reduced");
  CHECK(rep.arity_bound == "3");
  CHECK(rep.degree == 4);
  CHECK(rep.pass);
  CHECK_FALSE(rep.paper_ref.empty());
  CHECK_FALSE(rep.cases.empty());
  std::set<std::string> ids;
  for (const CaseResult& c : rep.cases) {
    CHECK(c.pass);
    CHECK(ids.insert(c.id).second);
  }
}

TEST_CASE("the all suite runs every law in order") {
  VerifyConfig cfg;
  cfg.law = "all";
  cfg.degree = 2;
  cfg.samples = 2;
  std::vector<LawReport> reps = run_verify(cfg);
  REQUIRE(reps.size() == law_names().size());
  for (std::size_t i = 0; i < reps.size(); ++i) CHECK(reps[i].law == law_names()[i]);
  CHECK(all_pass(reps));
}

TEST_CASE("reports are schedule independent") {
  VerifyConfig cfg;
  cfg.law = "compat";
  cfg.degree = 4;
  cfg.workers = 1;
  std::string serial = reports_json(run_verify(cfg));
  cfg.workers = 4;
  std::string fanned = reports_json(run_verify(cfg));
  CHECK(serial == fanned);
}

TEST_CASE("json reports follow the schema") {
  VerifyConfig cfg;
  cfg.law = "finv";
  cfg.degree = 3;
  std::vector<LawReport> reps = run_verify(cfg);
  nlohmann::json parsed = nlohmann::json::parse(reports_json(reps));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const nlohmann::json& rep = parsed[0];
  for (const char* key : {"law", "arity_bound", "degree", "cases", "pass", "paper_ref"})
    CHECK(rep.contains(key));
  CHECK(rep["law"] == "finv");
  CHECK(rep["arity_bound"] == "inf");
  CHECK(rep["pass"] == true);
  for (const nlohmann::json& c : rep["cases"])
    for (const char* key : {"id", "input", "expected", "got", "pass"})
      CHECK(c.contains(key));
}

TEST_CASE("failing cases render with their counterexample") {
  LawReport rep;
  rep.law = "demo";
  rep.arity_bound = "inf";
  rep.degree = 1;
  rep.paper_ref = "demo statement";
  rep.cases.push_back({"demo/ok", "in", "1", "1", true});
  rep.cases.push_back({"demo/broken", "in", "1", "2", false});
  rep.pass = false;
  std::string text = reports_text({rep});
  CHECK(text.find("FAIL demo/broken") != std::string::npos);
  CHECK(text.find("demo/ok") == std::string::npos);
  CHECK(text.rfind("FAIL\n") == text.size() - 5);
  CHECK_FALSE(all_pass({rep}));
}
