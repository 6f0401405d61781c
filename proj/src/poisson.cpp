#include "pweyl/poisson.hpp"

namespace pweyl {

Poly poly_bracket(const Poly& f, const Poly& g) {
  if (f.rank() != g.rank() && !f.is_zero() && !g.is_zero())
    throw rank_mismatch("bracket rank mismatch");
  const unsigned n = std::max(f.rank(), g.rank());
  Poly acc = Poly::zero(n);
  for (unsigned i = 0; i < n; ++i) {
    Poly fx = f.derivative_flat(i);
    Poly gy = g.derivative_flat(n + i);
    if (!fx.is_zero() && !gy.is_zero()) acc += fx * gy;
    Poly fy = f.derivative_flat(n + i);
    Poly gx = g.derivative_flat(i);
    if (!fy.is_zero() && !gx.is_zero()) acc -= fy * gx;
  }
  return acc;
}

BracketRaw bracket_raw(const RatFn& f, const RatFn& g) {
  if (f.rank() != g.rank()) throw rank_mismatch("bracket rank mismatch");
  const Poly& P = f.num();
  const Poly& Q = f.den();
  const Poly& R = g.num();
  const Poly& E = g.den();
  Poly num = Poly::zero(f.rank());
  const bool same_den = (Q == E);
  if (same_den) {
    // {P/Q, R/Q} = [{P,R}Q - {P,Q}R - {Q,R}P] / Q^3
    num = poly_bracket(P, R) * Q;
    Poly pq = poly_bracket(P, Q);
    if (!pq.is_zero()) num -= pq * R;
    Poly qr = poly_bracket(Q, R);
    if (!qr.is_zero()) num -= qr * P;
    Poly q2 = Q * Q;
    return {std::move(num), std::move(q2), Q};
  }
  num = poly_bracket(P, R) * (Q * E);
  Poly pe = poly_bracket(P, E);
  if (!pe.is_zero()) num -= pe * (Q * R);
  Poly qr = poly_bracket(Q, R);
  if (!qr.is_zero()) num -= qr * (P * E);
  Poly qe = poly_bracket(Q, E);
  if (!qe.is_zero()) num += qe * (P * R);
  return {std::move(num), Q * Q, E * E};
}

RatFn bracket(const RatFn& f, const RatFn& g) {
  BracketRaw raw = bracket_raw(f, g);
  return RatFn(std::move(raw.num), raw.den_left * raw.den_right);
}

bool bracket_equals_const(const RatFn& f, const RatFn& g, const Cyc& c) {
  BracketRaw raw = bracket_raw(f, g);
  if (c.is_zero()) return raw.num.is_zero();
  return raw.num == (raw.den_left * raw.den_right).scaled(c);
}

bool localization_consistency(const Poly& a, const Poly& s, const Poly& b, const Poly& t) {
  if (s.is_zero() || t.is_zero()) throw division_by_zero("localization by zero");
  RatFn lhs = bracket(RatFn(a, s), RatFn(b, t));
  RatFn sf(s), tf(t);
  RatFn rhs = RatFn(poly_bracket(a, b)) / (sf * tf);
  rhs -= RatFn(poly_bracket(a, t) * b) / (sf * tf * tf);
  rhs -= RatFn(poly_bracket(s, b) * a) / (sf * sf * tf);
  rhs += RatFn(poly_bracket(s, t) * (a * b)) / (sf * sf * tf * tf);
  return ratfn_equal(lhs, rhs);
}

}  // namespace pweyl
