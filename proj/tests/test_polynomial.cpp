#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pweyl/expr.hpp"
#include "pweyl/polynomial.hpp"

using namespace pweyl;

namespace {

Poly P(const std::string& s, unsigned rank) {
  RatFn f = parse_ratfn(s, rank);
  REQUIRE(f.is_polynomial());
  return f.num();
}

Poly random_poly(unsigned rank, std::mt19937_64& rng, unsigned maxdeg = 3, unsigned nterms = 5) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> expo(0, maxdeg);
  std::vector<Poly::Term> terms;
  for (unsigned t = 0; t < nterms; ++t) {
    Monomial m;
    for (unsigned v = 0; v < 2 * rank; ++v) {
      m.e[v] = static_cast<std::uint16_t>(expo(rng));
      m.deg += m.e[v];
    }
    int c = coeff(rng);
    if (c) terms.push_back({m, Cyc(c)});
  }
  return Poly::from_terms(rank, std::move(terms));
}

}  // namespace

TEST_CASE("difference of squares") {
  CHECK(P("(y1+y2)*(y1-y2)", 2) == P("y1^2 - y2^2", 2));
}

TEST_CASE("product of elementary symmetric polynomials, n=2") {
  std::vector<VarIndex> ys = {VarIndex::y(1), VarIndex::y(2)};
  Poly e1 = elementary_symmetric(2, 1, ys);
  Poly e2 = elementary_symmetric(2, 2, ys);
  CHECK(e1 * e2 == P("y1^2*y2 + y1*y2^2", 2));
}

TEST_CASE("zero is absorbing") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Poly p = random_poly(2, rng);
    CHECK((Poly::zero(2) * p).is_zero());
    CHECK((p * Poly::zero(2)).is_zero());
  }
}

TEST_CASE("poly_arith dispatch and rank mismatch") {
  CHECK(poly_arith(P("y1", 1), P("x1", 1), PolyOp::Add) == P("x1 + y1", 1));
  CHECK(poly_arith(P("y1", 1), P("x1", 1), PolyOp::Sub) == P("y1 - x1", 1));
  CHECK(poly_arith(P("y1", 1), P("x1", 1), PolyOp::Mul) == P("x1*y1", 1));
  CHECK_THROWS_AS(poly_arith(P("y1", 1), P("y2", 2), PolyOp::Add), rank_mismatch);
  CHECK_THROWS_AS(poly_arith(P("y1", 1), P("y2", 2), PolyOp::Mul), rank_mismatch);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("y1*y2", 2), VarIndex::y(1)) == P("y2", 2));
  // e_2 in three variables
  std::vector<VarIndex> ys = {VarIndex::y(1), VarIndex::y(2), VarIndex::y(3)};
  Poly e2 = elementary_symmetric(3, 2, ys);
  CHECK(partial_derivative(e2, VarIndex::y(1)) == P("y2 + y3", 3));
}

TEST_CASE("jacobian entries for n=2 elementary symmetric") {
  std::vector<VarIndex> ys = {VarIndex::y(1), VarIndex::y(2)};
  Poly e1 = elementary_symmetric(2, 1, ys);
  Poly e2 = elementary_symmetric(2, 2, ys);
  CHECK(e1.derivative(VarIndex::y(1)) == P("1", 2));
  CHECK(e2.derivative(VarIndex::y(1)) == P("y2", 2));
  CHECK(e1.derivative(VarIndex::y(2)) == P("1", 2));
  CHECK(e2.derivative(VarIndex::y(2)) == P("y1", 2));
}

TEST_CASE("ring axioms and Leibniz on randomized data") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(2, rng), q = random_poly(2, rng), r = random_poly(2, rng);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    // Leibniz
    VarIndex v = (i % 2) ? VarIndex::y(1) : VarIndex::x(2);
    CHECK((p * q).derivative(v) == p.derivative(v) * q + q.derivative(v) * p);
    // mixed partials commute
    CHECK(p.derivative(VarIndex::x(1)).derivative(VarIndex::y(2)) ==
          p.derivative(VarIndex::y(2)).derivative(VarIndex::x(1)));
  }
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(3, rng);
    CHECK(P(p.to_string(), 3) == p);
  }
  // with cyclotomic coefficients
  Poly z = P("zeta(8)*x1 - (1/2 + zeta(8)^3)*y2^3", 2);
  CHECK(P(z.to_string(), 2) == z);
}

TEST_CASE("graded-lex leading term") {
  Poly p = P("y1 + y1^2*y2 + y2^3", 2);
  // deg-3 tie: y1^2*y2 vs y2^3 -> lex on (x1,x2,y1,y2): y1^2*y2 wins
  CHECK(p.leading_term().mono.e[2] == 2);
  CHECK(p.leading_term().mono.e[3] == 1);
  CHECK(p.total_degree() == 3);
}

TEST_CASE("exact division") {
  Poly a = P("(y1 - y2)*(y1 + 2*y2)*(x1*y1 - 3)", 2);
  Poly b = P("(y1 - y2)*(x1*y1 - 3)", 2);
  CHECK(a.divide_exact(b) == P("y1 + 2*y2", 2));
  CHECK(!P("y1^2 + y2", 2).try_divide(P("y1 + 1", 2)).has_value());
  CHECK_THROWS_AS(P("y1", 1).divide_exact(P("0", 1)), division_by_zero);
}

TEST_CASE("monomial content and shift") {
  Poly p = P("x1^2*y1^3 + 2*x1^3*y1^2*y2", 2);
  Monomial c = p.monomial_content();
  CHECK(c.e[0] == 2);   // x1
  CHECK(c.e[2] == 2);   // y1
  CHECK(c.e[3] == 0);   // y2
  CHECK(p.shift_down(c) == P("y1 + 2*x1*y2", 2));
}

TEST_CASE("compose") {
  Poly p = P("y1^2 + y2", 2);
  std::vector<Poly> images = {P("x1", 2), P("x2", 2), P("y2", 2), P("y1*y2", 2)};
  CHECK(p.compose(images) == P("y2^2 + y1*y2", 2));
}

TEST_CASE("evaluation") {
  Poly p = P("x1*y1^2 - 3*y2", 2);
  std::vector<Cyc> pt = {Cyc(2), Cyc(0), Cyc(3), Cyc(5)};  // x1,x2,y1,y2
  CHECK(p.eval(pt) == Cyc(2 * 9 - 15));
}

TEST_CASE("gcd on structured inputs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    Poly w = random_poly(2, rng, 2, 3);
    Poly a = random_poly(2, rng, 2, 3);
    Poly b = random_poly(2, rng, 2, 3);
    if (w.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly g = poly_gcd(a * w, b * w);
    // gcd must contain w (up to the gcd of a and b, it is a multiple of w)
    CHECK((a * w).try_divide(g).has_value());
    CHECK((b * w).try_divide(g).has_value());
    CHECK(g.try_divide(poly_gcd(g, w)).has_value());
    CHECK(!g.is_constant());
  }
  CHECK(poly_gcd(P("y1^2 - y2^2", 2), P("y1 + y2", 2)) == P("y1 + y2", 2));
  CHECK(poly_gcd(P("y1", 2), P("y2", 2)).is_one());
}

TEST_CASE("rank bound is enforced") {
  CHECK_THROWS_AS(Poly::zero(9), input_error);
  CHECK_NOTHROW(Poly::zero(8));
}

TEST_CASE("remap_pairs embeds blocks") {
  Poly p = P("x1*y1^2", 1);
  Poly q = remap_pairs(p, 2, 3);
  CHECK(q == P("x3*y3^2", 3));
}
