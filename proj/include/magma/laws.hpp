#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magma/tree.hpp"

namespace magma {

// Law identifiers accepted by run_verify, in report order.
const std::vector<std::string>& law_names();

struct VerifyConfig {
  std::string law = "all";
  ArityBound bound = ArityBound::infinity();
  int degree = 5;
  std::uint64_t seed = 1;
  int samples = 50;
  int workers = 1;
};

struct CaseResult {
  std::string id;
  std::string input;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct LawReport {
  std::string law;
  std::string arity_bound;
  int degree = 0;
  std::vector<CaseResult> cases;
  bool pass = false;
  std::string paper_ref;  // one-line statement of the verified law
};

// Runs one named law.  Case lists are built serially from the seed, then
// evaluated (possibly fanned out over cfg.workers) into fixed slots, so
// the report bytes never depend on scheduling.
LawReport run_law(const VerifyConfig& cfg);

// Dispatch on cfg.law, where "all" runs every law in law_names() order.
// Throws std::invalid_argument for an unknown identifier.
std::vector<LawReport> run_verify(const VerifyConfig& cfg);

bool all_pass(const std::vector<LawReport>& reports);

// Stable renderings of the reports: a JSON array (two-space indent) or a
// human-oriented text listing.  Both end in a newline.
std::string reports_json(const std::vector<LawReport>& reports);
std::string reports_text(const std::vector<LawReport>& reports);

}  // namespace magma
