#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pweyl/cyclotomic.hpp"
#include "pweyl/errors.hpp"

namespace pweyl {

// A variable of P_n: x_i or y_i, 1-based index.
struct VarIndex {
  enum class Kind : std::uint8_t { X, Y };
  Kind kind;
  unsigned index;

  static VarIndex x(unsigned i) { return {Kind::X, i}; }
  static VarIndex y(unsigned i) { return {Kind::Y, i}; }

  // Flat position in the variable vector (x_1..x_n, y_1..y_n).
  unsigned flat(unsigned rank) const {
    return (kind == Kind::X ? 0u : rank) + index - 1;
  }
  bool operator==(const VarIndex& o) const = default;
  bool operator<(const VarIndex& o) const {
    return kind != o.kind ? kind < o.kind : index < o.index;
  }
  std::string to_string() const {
    return (kind == Kind::X ? "x" : "y") + std::to_string(index);
  }
};

inline constexpr unsigned kMaxVars = 16;  // rank <= 8

// Exponent vector with cached total degree; graded-lex ordered.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  // Graded lex, x1 most significant.
  bool less_than(const Monomial& o) const {
    if (deg != o.deg) return deg < o.deg;
    for (unsigned i = 0; i < kMaxVars; ++i)
      if (e[i] != o.e[i]) return e[i] < o.e[i];
    return false;
  }
  bool divides(const Monomial& o) const {
    for (unsigned i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    const auto* p = reinterpret_cast<const std::uint64_t*>(m.e.data());
    for (unsigned i = 0; i < kMaxVars * sizeof(std::uint16_t) / 8; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse multivariate polynomial over Cyc in 2n variables, terms stored in
// descending graded-lex order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Cyc coeff;
  };

  Poly() : rank_(0) {}
  explicit Poly(unsigned rank) : rank_(rank) { check_rank(rank); }

  static Poly zero(unsigned rank) { return Poly(rank); }
  static Poly constant(unsigned rank, Cyc c);
  static Poly variable(unsigned rank, VarIndex v);
  static Poly monomial(unsigned rank, const Monomial& m, Cyc c);

  unsigned rank() const { return rank_; }
  unsigned num_vars() const { return 2 * rank_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyc constant_value() const;  // requires is_constant()
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.deg; }
  unsigned degree_in(unsigned flat_var) const;
  const Term& leading_term() const;  // graded-lex max; requires nonzero

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Cyc& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return rank_ == o.rank_ && equal_terms(o); }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(VarIndex v) const;
  Poly derivative_flat(unsigned flat_var) const;

  // Exact evaluation at a rational/cyclotomic point (size 2n).
  Cyc eval(std::span<const Cyc> point) const;

  // Substitute each variable by the given polynomial (same target rank).
  Poly compose(const std::vector<Poly>& images) const;

  // Exact division; throws input_error when the division is not exact.
  Poly divide_exact(const Poly& divisor) const;
  // Quotient if division is exact, nullopt otherwise.
  std::optional<Poly> try_divide(const Poly& divisor) const;

  // Per-variable minimum exponents over all terms (the monomial content).
  Monomial monomial_content() const;
  Poly shift_down(const Monomial& m) const;  // divide by a monomial

  std::string to_string() const;

  // Construction from unsorted term data; sorts and strips zeros.
  static Poly from_terms(unsigned rank, std::vector<Term> terms);

 private:
  static void check_rank(unsigned rank);
  bool equal_terms(const Poly& o) const;
  void normalize();

  unsigned rank_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);
Poly partial_derivative(const Poly& p, VarIndex v);

// Elementary symmetric polynomial e_k of the given variables.
Poly elementary_symmetric(unsigned rank, unsigned k, const std::vector<VarIndex>& vars);

// Map a rank-r polynomial into rank `new_rank`, sending pair i to pair
// i + pair_offset (both x and y). Used for block embeddings.
Poly remap_pairs(const Poly& p, unsigned pair_offset, unsigned new_rank);

// Multivariate GCD over the coefficient field (monic-normalized), via monomial
// content extraction plus primitive PRS on the least present variable.
Poly poly_gcd(const Poly& a, const Poly& b);

// Serial and OpenMP product kernels. operator* dispatches on the global
// execution policy; both produce identical canonical results.
Poly mul_serial(const Poly& a, const Poly& b);
Poly mul_parallel(const Poly& a, const Poly& b);

bool parallel_enabled();
void set_parallel_enabled(bool on);

}  // namespace pweyl
