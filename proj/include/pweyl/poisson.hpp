#pragma once

#include "pweyl/rational_function.hpp"

namespace pweyl {

// Canonical bracket on polynomials: sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i).
Poly poly_bracket(const Poly& f, const Poly& g);

// The unique extension to K_n. For f = P/Q, g = R/E the result is
//   [{P,R}QE - {P,E}QR - {Q,R}PE + {Q,E}PR] / (Q^2 E^2),
// which avoids expanding quotient-rule partials pairwise.
RatFn bracket(const RatFn& f, const RatFn& g);

// Numerator/denominator of the bracket without RatFn normalization; the
// verification engine uses this to zero-test entries cheaply.
struct BracketRaw {
  Poly num;
  Poly den_left;   // Q^2
  Poly den_right;  // E^2
};
BracketRaw bracket_raw(const RatFn& f, const RatFn& g);

// True iff bracket(f, g) equals the constant c, decided symbolically.
bool bracket_equals_const(const RatFn& f, const RatFn& g, const Cyc& c);

// Self-test of the bracket against the four-term localization formula
// for the quotients a/s and b/t.
bool localization_consistency(const Poly& a, const Poly& s, const Poly& b, const Poly& t);

}  // namespace pweyl
