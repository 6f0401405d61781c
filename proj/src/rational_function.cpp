#include "pweyl/rational_function.hpp"

#include <algorithm>

namespace pweyl {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (num_.rank() != den_.rank()) {
    if (num_.is_zero())
      num_ = Poly::zero(den_.rank());
    else if (den_.is_constant())
      den_ = Poly::constant(num_.rank(), den_.constant_value());
    else
      throw rank_mismatch("rational function num/den rank mismatch");
  }
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.rank(), Cyc(1));
    return;
  }
  // cancel common monomial factor
  Monomial cn = num_.monomial_content();
  Monomial cd = den_.monomial_content();
  Monomial common;
  common.deg = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    common.e[i] = std::min(cn.e[i], cd.e[i]);
    common.deg += common.e[i];
  }
  if (common.deg) {
    num_ = num_.shift_down(common);
    den_ = den_.shift_down(common);
  }
  // denominator monic in graded-lex
  const Cyc& lc = den_.leading_term().coeff;
  if (!lc.is_one()) {
    Cyc inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFn& RatFn::operator*=(const RatFn& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw division_by_zero("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero rational function");
  return RatFn(den_, num_);
}

RatFn RatFn::pow(long long e) const {
  if (e == 0) return RatFn::constant(rank(), Cyc(1));
  const RatFn base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  return RatFn(base.num_.pow(static_cast<unsigned>(k)), base.den_.pow(static_cast<unsigned>(k)));
}

RatFn RatFn::derivative_flat(unsigned v) const {
  // (num' den - num den') / den^2
  Poly dn = num_.derivative_flat(v);
  Poly dd = den_.derivative_flat(v);
  if (dd.is_zero()) return RatFn(std::move(dn), den_);
  return RatFn(dn * den_ - num_ * dd, den_ * den_);
}

RatFn RatFn::derivative(VarIndex v) const { return derivative_flat(v.flat(rank())); }

Cyc RatFn::eval(std::span<const Cyc> point) const {
  Cyc d = den_.eval(point);
  if (d.is_zero()) throw division_by_zero("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

RatFn RatFn::reduced() const {
  if (num_.is_zero() || den_.is_one()) return *this;
  Poly g = poly_gcd(num_, den_);
  if (g.is_constant()) return *this;
  return RatFn(num_.divide_exact(g), den_.divide_exact(g));
}

std::string RatFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + " / (" + den_.to_string() + ")";
}

bool ratfn_equal(const RatFn& f, const RatFn& g) {
  if (f.den() == g.den()) return f.num() == g.num();
  return f.num() * g.den() == g.num() * f.den();
}

RatFn ratfn_arith(const RatFn& f, const RatFn& g, RatOp op) {
  switch (op) {
    case RatOp::Add: return f + g;
    case RatOp::Sub: return f - g;
    case RatOp::Mul: return f * g;
    case RatOp::Div: return f / g;
  }
  throw std::logic_error("unreachable");
}

RatFn ratfn_partial(const RatFn& f, VarIndex v) { return f.derivative(v); }

namespace {

struct SubstContext {
  unsigned out_rank = 0;
  std::vector<const RatFn*> image;       // per flat variable, may be null
  std::vector<std::vector<Poly>> npow;   // image numerator powers
  std::vector<std::vector<Poly>> dpow;   // image denominator powers
};

SubstContext make_context(unsigned rank, unsigned nv, const std::map<VarIndex, RatFn>& assignment,
                          const std::vector<unsigned>& need) {
  SubstContext ctx;
  ctx.image.assign(nv, nullptr);
  bool have_rank = false;
  for (const auto& [v, r] : assignment) {
    if (v.index == 0 || v.index > rank) throw input_error("substitute: variable out of range");
    ctx.image[v.flat(rank)] = &r;
    if (have_rank && r.rank() != ctx.out_rank) throw rank_mismatch("substitute: mixed image ranks");
    ctx.out_rank = r.rank();
    have_rank = true;
  }
  for (unsigned v = 0; v < nv; ++v)
    if (need[v] > 0 && !ctx.image[v])
      throw input_error("substitute: assignment not total on variables of the input");
  if (!have_rank) ctx.out_rank = 0;
  ctx.npow.resize(nv);
  ctx.dpow.resize(nv);
  for (unsigned v = 0; v < nv; ++v) {
    if (!need[v]) continue;
    ctx.npow[v].push_back(Poly::constant(ctx.out_rank, Cyc(1)));
    ctx.dpow[v].push_back(Poly::constant(ctx.out_rank, Cyc(1)));
    for (unsigned k = 1; k <= need[v]; ++k) {
      ctx.npow[v].push_back(ctx.npow[v].back() * ctx.image[v]->num());
      ctx.dpow[v].push_back(ctx.dpow[v].back() * ctx.image[v]->den());
    }
  }
  return ctx;
}

// Expanded numerator of p after substitution over the denominator fill
// prod_v den_v^(degs[v]): each term is filled up to the per-variable maximum.
Poly subst_numerator(const Poly& p, const std::vector<unsigned>& degs, const SubstContext& ctx) {
  Poly acc = Poly::zero(ctx.out_rank);
  for (const auto& t : p.terms()) {
    Poly prod = Poly::constant(ctx.out_rank, t.coeff);
    for (unsigned v = 0; v < p.num_vars(); ++v) {
      if (!degs[v]) continue;
      unsigned e = t.mono.e[v];
      if (e) prod = prod * ctx.npow[v][e];
      if (degs[v] > e) prod = prod * ctx.dpow[v][degs[v] - e];
    }
    acc += prod;
  }
  return acc;
}

RatFn substitute_fraction(const Poly& pnum, const Poly& pden,
                          const std::map<VarIndex, RatFn>& assignment) {
  const unsigned rank = pden.rank();
  const unsigned nv = pden.num_vars();
  std::vector<unsigned> dn(nv, 0), dd(nv, 0), need(nv, 0);
  for (unsigned v = 0; v < nv; ++v) {
    dn[v] = pnum.degree_in(v);
    dd[v] = pden.degree_in(v);
    need[v] = std::max(dn[v], dd[v]);
  }
  if (pnum.is_zero()) {
    SubstContext ctx = make_context(rank, nv, assignment, need);
    return RatFn::zero(ctx.out_rank);
  }
  SubstContext ctx = make_context(rank, nv, assignment, need);
  if (ctx.image.empty() || std::all_of(need.begin(), need.end(), [](unsigned d) { return d == 0; }))
    return RatFn(Poly::constant(ctx.out_rank, pnum.constant_value() / pden.constant_value()));

  Poly nhat = subst_numerator(pnum, dn, ctx);
  Poly dhat = subst_numerator(pden, dd, ctx);
  if (dhat.is_zero()) throw division_by_zero("substitution produced a zero denominator");
  // f(subst) = nhat * prod den^(dd-dn)+ / (dhat * prod den^(dn-dd)+): the
  // shared per-variable fill powers cancel without any gcd.
  for (unsigned v = 0; v < nv; ++v) {
    if (dd[v] > dn[v]) nhat = nhat * ctx.dpow[v][dd[v] - dn[v]];
    if (dn[v] > dd[v]) dhat = dhat * ctx.dpow[v][dn[v] - dd[v]];
  }
  return RatFn(std::move(nhat), std::move(dhat));
}

}  // namespace

RatFn substitute(const Poly& p, const std::map<VarIndex, RatFn>& assignment) {
  return substitute_fraction(p, Poly::constant(p.rank(), Cyc(1)), assignment);
}

RatFn substitute(const RatFn& f, const std::map<VarIndex, RatFn>& assignment) {
  return substitute_fraction(f.num(), f.den(), assignment);
}

RatFn remap_pairs(const RatFn& f, unsigned pair_offset, unsigned new_rank) {
  return RatFn(remap_pairs(f.num(), pair_offset, new_rank),
               remap_pairs(f.den(), pair_offset, new_rank));
}

}  // namespace pweyl
