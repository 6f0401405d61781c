#pragma once

#include "pweyl/verification.hpp"

namespace pweyl {

// One invariant canonical pair for a rank-1 block: {u, v} = 1 exactly and
// both functions invariant under the block's group.
struct DarbouxPair {
  RatFn u, v;
  GroupAction action;
  std::vector<std::string> conventions;
};

// The constructed generators plus their verification report.
struct NoetherSolution {
  GroupAction action;
  std::vector<RatFn> xprime, yprime;
  VerificationReport report;
};

struct BlockFamily {
  enum class Kind { Cyclic, BinaryDihedral };
  Kind kind = Kind::Cyclic;
  unsigned param = 1;  // m for cyclic, n for binary dihedral

  std::string spec() const {
    return kind == Kind::Cyclic ? "Cyc(m=" + std::to_string(param) + ")"
                                : "BD(n=" + std::to_string(param) + ")";
  }
};

struct PresentationSearchResult {
  std::vector<BDConvention> passing;
  std::vector<std::string> reasons;  // one line per tried convention
};

// Invariant Darboux generators for a reflection catalog action:
// y'_i = e_i and x'_i = (row i of M^{-1}) . (x_1..x_n). Throws
// verification_error naming the first failing check if certification fails.
NoetherSolution darboux_primes(const InvariantSystem& sys, const JacobianData& jd,
                               const VerifyOptions& opts = {});

// Canonical invariant pair for a rank-1 SL2 block. Cyclic(m) uses
// (x^m, x^(1-m) y / m); the binary dihedral pair comes from the classical
// closed form, with the embedding convention fixed by presentation_search
// and any scalar normalization recorded in the conventions.
DarbouxPair sl2_block(BlockFamily family, const VerifyOptions& opts = {});

// Exhaustive search over the standard binary dihedral presentations; returns
// every convention under which (u_1, v_1) are invariant (with the group order
// equal to 4n). `pair_override` supports negative controls.
PresentationSearchResult presentation_search(
    unsigned n, const std::optional<std::pair<RatFn, RatFn>>& pair_override = std::nullopt);

// Wreath composition: instantiate the block pair on each coordinate pair,
// push them through the symmetric-group construction, and certify the result
// in the original variables under the full wreath action.
NoetherSolution wreath_compose(BlockFamily family, unsigned n, const VerifyOptions& opts = {});

// Direct product of verified solutions on disjoint variable blocks plus
// `fixed_rank` untouched pairs.
NoetherSolution product_decompose(const std::vector<NoetherSolution>& solutions,
                                  unsigned fixed_rank, const VerifyOptions& opts = {});

// Construct the solution named by a CLI group spec string.
NoetherSolution construct_for_spec(const std::string& spec, const VerifyOptions& opts = {},
                                   unsigned bound = GroupAction::kDefaultBound);

}  // namespace pweyl
