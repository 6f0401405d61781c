#pragma once

#include <cstdint>
#include <optional>

#include "pweyl/group.hpp"

namespace pweyl {

// Fundamental invariants e_1..e_n of a reflection-group action, polynomials
// in the y-variables only.
struct InvariantSystem {
  GroupAction action;
  std::vector<Poly> invs;
  std::vector<unsigned> degrees;
};

// The Jacobian matrix M_ij = d(e_j)/d(y_i), its determinant J, the invariant
// power exponent from the classical statement (2 for the symmetric group,
// |G| for the irreducible reflection groups) and the minimal exponent that
// actually makes J^k invariant (the order of the determinant character).
struct JacobianData {
  std::vector<std::vector<Poly>> M;
  Poly J;
  std::uint64_t sigma_exponent = 1;
  unsigned sigma_min_exponent = 1;
};

// Catalog invariants: S_n -> e_k(y); G(m,p,n) -> e_1(y^m)..e_{n-1}(y^m),
// (y_1..y_n)^(m/p). Validates invariance, degrees and independence.
InvariantSystem fundamental_invariants(const GroupAction& action);

// Caller-supplied invariants; runs the same validation.
InvariantSystem make_invariant_system(const GroupAction& action, std::vector<Poly> invs);

JacobianData jacobian(const InvariantSystem& sys);

// Fraction-free determinant of a polynomial matrix (Bareiss elimination).
Poly bareiss_determinant(std::vector<std::vector<Poly>> m, unsigned rank);
// Adjugate via cofactor determinants; M * adj(M) = det(M) * I.
std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& m, unsigned rank);

// Rewrite a G-invariant y-polynomial as a polynomial in the fundamental
// invariants. The result uses y_i as the placeholder for e_i; substituting
// the e_j back reproduces the input exactly (verified before returning).
Poly express_in_invariants(const Poly& f, const InvariantSystem& sys);

// Algebraic-independence witness: a rational point where the full Jacobian
// of the 2n functions has nonzero determinant. Deterministic given the seed;
// failure after the retry budget is reported as inconclusive, never success.
struct IndependenceWitness {
  enum class Status { Success, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<Cyc> point;
  Cyc det;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  bool ok() const { return status == Status::Success; }
};

IndependenceWitness independence_certificate(const std::vector<RatFn>& fns,
                                             std::uint64_t seed = 0x5eed, unsigned retries = 32);

// Re-evaluate a witness at its recorded point.
bool recheck_independence(const std::vector<RatFn>& fns, const IndependenceWitness& w);

}  // namespace pweyl
