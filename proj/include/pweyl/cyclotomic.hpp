#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pweyl/errors.hpp"

namespace pweyl {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

// An exact element of Q(zeta_m), stored in the power basis 1, z, ..., z^{phi(m)-1}
// modulo the m-th cyclotomic polynomial. Values are canonical: the conductor is
// always reduced to the minimal cyclotomic field containing the element, so
// equality is plain structural comparison. Conductor 1 means a plain rational.
class Cyc {
 public:
  Cyc() : m_(1), c_(1, Rational(0)) {}
  Cyc(int v) : m_(1), c_(1, Rational(v)) {}  // NOLINT: implicit by design
  Cyc(const Rational& v) : m_(1), c_(1, v) {}
  Cyc(long long num, long long den);

  // zeta_m; a primitive m-th root of unity. m = 1 gives 1, m = 2 gives -1.
  static Cyc root_of_unity(unsigned m);

  // Raw constructor from power-basis coordinates; canonicalizes.
  static Cyc from_coords(unsigned m, std::vector<Rational> coords);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == Cyc(1); }
  bool is_rational() const { return m_ == 1; }
  const Rational& rational_value() const;  // requires is_rational()

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

  Cyc inverse() const;
  Cyc pow(long long e) const;

  bool operator==(const Cyc& o) const { return m_ == o.m_ && c_ == o.c_; }
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // If the value is a root of unity, its multiplicative order.
  std::optional<unsigned> root_of_unity_order() const;

  // Grammar-compatible form: "3/2", "zeta(8)", "1/2 - 3*zeta(8)^2", ...
  std::string to_string() const;
  // True when to_string() would contain '+'/'-' between terms or a leading
  // minus, i.e. when a printing context must parenthesize the value.
  bool needs_parens() const;

  std::size_t hash() const;

 private:
  void canonicalize();

  unsigned m_;
  std::vector<Rational> c_;  // size euler_phi(m_)
};

// Resource bound for conductor growth (spec default 1024).
unsigned conductor_limit();
void set_conductor_limit(unsigned limit);

// Arithmetic helpers for field operations per the CLI op names.
enum class FieldOp { Add, Sub, Mul, Div };
Cyc field_arith(const Cyc& a, const Cyc& b, FieldOp op);

std::string rational_to_string(const Rational& q);

struct CycHash {
  std::size_t operator()(const Cyc& c) const { return c.hash(); }
};

}  // namespace pweyl
