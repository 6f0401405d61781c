#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pweyl/group.hpp"
#include "pweyl/invariants.hpp"
#include "pweyl/poisson.hpp"

namespace pweyl {

struct VerifyOptions {
  bool parallel = true;
  std::uint64_t seed = 0x5eed;
  unsigned independence_retries = 32;
  // When set, independence is re-evaluated at this point instead of sampling
  // (certificate re-checks are deterministic).
  std::optional<std::vector<Cyc>> independence_point;
};

// One bracket-table check; row/col index the generator list (x'_1..x'_n,
// y'_1..y'_n), expected is the canonical constant.
struct TableEntry {
  unsigned row = 0, col = 0;
  int expected = 0;
  bool pass = false;
  std::string computed;  // filled only on failure
};

struct InvarianceEntry {
  unsigned generator = 0;
  unsigned function = 0;  // index into (x'_1..x'_n, y'_1..y'_n)
  bool pass = false;
};

struct VerificationReport {
  unsigned rank = 0;
  std::vector<TableEntry> table;  // strict upper triangle, row-major
  std::vector<InvarianceEntry> invariance;
  IndependenceWitness independence;
  std::vector<std::string> conventions;
  std::vector<std::string> discrepancies;
  std::vector<std::string> unverified;

  bool brackets_pass() const;
  bool invariance_pass() const;
  bool all_pass() const;
  const TableEntry* first_failed_entry() const;
  std::string summary() const;
};

std::string function_name(unsigned index, unsigned rank);

// Re-derives every certificate property of the candidate generators:
// canonical bracket table (symbolic, exact), invariance under every group
// generator, and an algebraic-independence witness. Table entries and
// invariance checks are independent pure computations; with opts.parallel
// they are evaluated concurrently with deterministic aggregation. The serial
// path is kept as the reference implementation for testing.
VerificationReport verify_functions(const GroupAction& action, const std::vector<RatFn>& xprime,
                                    const std::vector<RatFn>& yprime, const VerifyOptions& opts);

VerificationReport verify_functions_serial(const GroupAction& action,
                                           const std::vector<RatFn>& xprime,
                                           const std::vector<RatFn>& yprime, VerifyOptions opts);

}  // namespace pweyl
