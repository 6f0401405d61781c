#include "pweyl/verification.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pweyl {

std::string function_name(unsigned index, unsigned rank) {
  return index < rank ? "x'" + std::to_string(index + 1)
                      : "y'" + std::to_string(index - rank + 1);
}

bool VerificationReport::brackets_pass() const {
  for (const auto& e : table)
    if (!e.pass) return false;
  return true;
}

bool VerificationReport::invariance_pass() const {
  for (const auto& e : invariance)
    if (!e.pass) return false;
  return true;
}

bool VerificationReport::all_pass() const {
  return brackets_pass() && invariance_pass() && independence.ok();
}

const TableEntry* VerificationReport::first_failed_entry() const {
  for (const auto& e : table)
    if (!e.pass) return &e;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  unsigned tfail = 0, ifail = 0;
  for (const auto& e : table) tfail += !e.pass;
  for (const auto& e : invariance) ifail += !e.pass;
  os << "bracket table: " << (table.size() - tfail) << "/" << table.size() << " ok";
  if (tfail) {
    const TableEntry* f = first_failed_entry();
    os << " (first failure {" << function_name(f->row, rank) << ", " << function_name(f->col, rank)
       << "})";
  }
  os << "; invariance: " << (invariance.size() - ifail) << "/" << invariance.size() << " ok";
  os << "; independence: "
     << (independence.ok() ? "witness found" : "INCONCLUSIVE");
  return os.str();
}

namespace {

VerificationReport run_verification(const GroupAction& action, const std::vector<RatFn>& xprime,
                                    const std::vector<RatFn>& yprime, const VerifyOptions& opts,
                                    bool parallel) {
  const unsigned n = action.rank();
  if (xprime.size() != n || yprime.size() != n)
    throw input_error("verification expects n candidate pairs");
  std::vector<const RatFn*> fns;
  fns.reserve(2 * n);
  for (const auto& f : xprime) fns.push_back(&f);
  for (const auto& f : yprime) fns.push_back(&f);
  for (const auto* f : fns)
    if (f->rank() != n) throw rank_mismatch("candidate generator has wrong rank");

  VerificationReport rep;
  rep.rank = n;

  // Brackets first (cheapest failures), then invariance, then independence.
  std::vector<TableEntry> table;
  for (unsigned a = 0; a < 2 * n; ++a)
    for (unsigned b = a + 1; b < 2 * n; ++b) {
      TableEntry e;
      e.row = a;
      e.col = b;
      e.expected = (a < n && b == a + n) ? 1 : 0;
      table.push_back(e);
    }

  const auto check_entry = [&](TableEntry& e) {
    const RatFn& f = *fns[e.row];
    const RatFn& g = *fns[e.col];
    if (bracket_equals_const(f, g, Cyc(e.expected))) {
      e.pass = true;
    } else {
      e.pass = false;
      e.computed = bracket(f, g).to_string();
    }
  };

  std::vector<CycMat> gens;
  gens.reserve(action.generators().size());
  for (std::size_t i = 0; i < action.generators().size(); ++i)
    gens.push_back(action.symplectic_generator(i));

  std::vector<InvarianceEntry> inv;
  for (unsigned g = 0; g < gens.size(); ++g)
    for (unsigned k = 0; k < 2 * n; ++k) inv.push_back({g, k, false});

  const auto check_invariance = [&](InvarianceEntry& e) {
    e.pass = ratfn_equal(act(gens[e.generator], *fns[e.function]), *fns[e.function]);
  };

#ifndef _OPENMP
  parallel = false;
#endif
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(table.size()); ++i)
      check_entry(table[static_cast<std::size_t>(i)]);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inv.size()); ++i)
      check_invariance(inv[static_cast<std::size_t>(i)]);
#endif
  } else {
    for (auto& e : table) check_entry(e);
    for (auto& e : inv) check_invariance(e);
  }

  rep.table = std::move(table);
  rep.invariance = std::move(inv);

  std::vector<RatFn> all;
  all.reserve(2 * n);
  for (const auto* f : fns) all.push_back(*f);
  if (opts.independence_point) {
    IndependenceWitness w;
    w.seed = opts.seed;
    w.point = *opts.independence_point;
    w.attempts = 1;
    try {
      const unsigned nv = 2 * n;
      CycMat Jm(nv);
      for (unsigned i = 0; i < nv; ++i) {
        Cyc qv = all[i].den().eval(w.point);
        if (qv.is_zero()) throw division_by_zero("denominator vanishes");
        Cyc pv = all[i].num().eval(w.point);
        Cyc q2 = qv * qv;
        for (unsigned j = 0; j < nv; ++j) {
          Cyc dp = all[i].num().derivative_flat(j).eval(w.point);
          Cyc dq = all[i].den().derivative_flat(j).eval(w.point);
          Jm.at(i, j) = (dp * qv - pv * dq) / q2;
        }
      }
      Cyc d = Jm.det();
      if (!d.is_zero()) {
        w.status = IndependenceWitness::Status::Success;
        w.det = d;
      }
    } catch (const division_by_zero&) {
      w.status = IndependenceWitness::Status::Inconclusive;
    }
    rep.independence = std::move(w);
  } else {
    rep.independence = independence_certificate(all, opts.seed, opts.independence_retries);
  }

  rep.unverified.push_back(
      "subfield generation: that x'_i, y'_i generate the full invariant field is not mechanized; "
      "certified properties are the bracket table, invariance, and algebraic independence");
  return rep;
}

}  // namespace

VerificationReport verify_functions(const GroupAction& action, const std::vector<RatFn>& xprime,
                                    const std::vector<RatFn>& yprime, const VerifyOptions& opts) {
  return run_verification(action, xprime, yprime, opts, opts.parallel);
}

VerificationReport verify_functions_serial(const GroupAction& action,
                                           const std::vector<RatFn>& xprime,
                                           const std::vector<RatFn>& yprime, VerifyOptions opts) {
  return run_verification(action, xprime, yprime, opts, false);
}

}  // namespace pweyl
