#pragma once

#include <map>
#include <string>

#include "pweyl/polynomial.hpp"

namespace pweyl {

// Element of the Poisson field K_n as a quotient of two Poly values.
// Normal form: nonzero denominator with graded-lex leading coefficient 1,
// common monomial factor cancelled. Full gcd reduction is optional (reduce()),
// equality never depends on it.
class RatFn {
 public:
  RatFn() : num_(Poly::zero(0)), den_(Poly::constant(0, Cyc(1))) {}
  explicit RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.rank(), Cyc(1))) {}
  RatFn(Poly num, Poly den);

  static RatFn zero(unsigned rank) { return RatFn(Poly::zero(rank)); }
  static RatFn constant(unsigned rank, Cyc c) { return RatFn(Poly::constant(rank, std::move(c))); }
  static RatFn variable(unsigned rank, VarIndex v) { return RatFn(Poly::variable(rank, v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  unsigned rank() const { return den_.rank(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyc constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

  RatFn pow(long long e) const;
  RatFn inverse() const;

  // Quotient-rule partial derivative.
  RatFn derivative(VarIndex v) const;
  RatFn derivative_flat(unsigned flat_var) const;

  // Exact evaluation; throws division_by_zero when the denominator vanishes.
  Cyc eval(std::span<const Cyc> point) const;

  // Full gcd reduction to lowest terms (canonical but potentially costly).
  RatFn reduced() const;

  std::string to_string() const;

 private:
  void normalize();

  Poly num_, den_;
};

// Exact equality in K_n by cross-multiplication; independent of reduction state.
bool ratfn_equal(const RatFn& f, const RatFn& g);

enum class RatOp { Add, Sub, Mul, Div };
RatFn ratfn_arith(const RatFn& f, const RatFn& g, RatOp op);
RatFn ratfn_partial(const RatFn& f, VarIndex v);

// Substitute variables of `p` by rational functions; assignment must cover
// every variable that occurs in `p`. Produces a single fraction directly
// (per-variable maximal-degree denominator fill), no gcd involved.
RatFn substitute(const Poly& p, const std::map<VarIndex, RatFn>& assignment);
RatFn substitute(const RatFn& f, const std::map<VarIndex, RatFn>& assignment);

// Same-pair variable relabeling for block embeddings.
RatFn remap_pairs(const RatFn& f, unsigned pair_offset, unsigned new_rank);

}  // namespace pweyl
