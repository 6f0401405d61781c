#pragma once

#include <json.hpp>

#include "pweyl/noether.hpp"

namespace pweyl {

// Machine-checkable certificate: everything a third party needs to re-run
// the checks (group generators, the 2n functions, the recorded witness).
// Schema version 1.
nlohmann::json solution_to_json(const NoetherSolution& sol, bool reduce = false);

std::string solution_to_text(const NoetherSolution& sol);
std::string solution_to_latex(const NoetherSolution& sol);

nlohmann::json invariant_data_to_json(const InvariantSystem& sys, const JacobianData& jd);

struct ParsedCertificate {
  GroupAction action;
  std::vector<RatFn> xprime, yprime;
  std::size_t recorded_order = 0;
  std::vector<TableEntry> recorded_table;
  std::vector<InvarianceEntry> recorded_invariance;
  IndependenceWitness recorded_independence;
};

ParsedCertificate parse_certificate(const nlohmann::json& j,
                                    unsigned bound = GroupAction::kDefaultBound);

struct ReverifyResult {
  bool ok = false;
  std::vector<std::string> failures;
  VerificationReport report;
};

// Recompute every certificate property from the parsed data alone; the
// independence witness is re-evaluated at the recorded point.
ReverifyResult reverify_certificate(const ParsedCertificate& cert, const VerifyOptions& opts = {});

}  // namespace pweyl
