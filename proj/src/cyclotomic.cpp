#include "pweyl/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>

namespace pweyl {

namespace {

std::atomic<unsigned> g_conductor_limit{1024};

// --- dense univariate polynomials over Q, ascending coefficients -----------

using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

// Exact division; asserts the remainder vanishes (used for products of
// cyclotomic polynomials, where it always does).
UPoly udiv_exact(UPoly num, const UPoly& den) {
  UPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    utrim(num);
  }
  if (!num.empty()) throw std::logic_error("udiv_exact: nonzero remainder");
  utrim(q);
  return q;
}

UPoly umod(UPoly num, const UPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    utrim(num);
  }
  return num;
}

// Extended Euclid: returns s with s*a = gcd(a, b) mod b, gcd normalized to 1.
UPoly uinv_mod(const UPoly& a, const UPoly& b) {
  UPoly r0 = b, r1 = a;
  UPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    // quotient of r0 by r1
    UPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    UPoly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      utrim(rem);
    }
    utrim(q);
    UPoly s2 = s0;
    {
      UPoly qs = umul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      utrim(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw division_by_zero("element not invertible modulo cyclotomic polynomial");
  for (auto& c : s0) c /= r0[0];
  return s0;
}

struct FieldTable {
  unsigned phi = 1;
  UPoly minpoly;                  // Phi_m
  std::vector<UPoly> high_power;  // t^(phi+j) mod Phi_m for j = 0 .. phi-2
};

// Per-thread caches: verification tasks run concurrently and share nothing.
thread_local std::map<unsigned, UPoly> t_cyclo_cache;
thread_local std::map<unsigned, FieldTable> t_table_cache;

const UPoly& cyclo_upoly(unsigned m) {
  auto it = t_cyclo_cache.find(m);
  if (it != t_cyclo_cache.end()) return it->second;
  UPoly result;
  if (m == 1) {
    result = {Rational(-1), Rational(1)};  // t - 1
  } else {
    UPoly num(m + 1, Rational(0));  // t^m - 1
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0) num = udiv_exact(std::move(num), cyclo_upoly(d));
    result = std::move(num);
  }
  return t_cyclo_cache.emplace(m, std::move(result)).first->second;
}

const FieldTable& field_table(unsigned m) {
  auto it = t_table_cache.find(m);
  if (it != t_table_cache.end()) return it->second;
  FieldTable t;
  t.minpoly = cyclo_upoly(m);
  t.phi = static_cast<unsigned>(t.minpoly.size() - 1);
  if (t.phi >= 2) {
    UPoly cur(t.phi + 1, Rational(0));  // t^phi
    cur[t.phi] = 1;
    cur = umod(std::move(cur), t.minpoly);
    cur.resize(t.phi, Rational(0));
    for (unsigned j = 0; j + 1 < t.phi; ++j) {
      t.high_power.push_back(cur);
      // multiply by t, reduce
      UPoly next(t.phi + 1, Rational(0));
      for (unsigned i = 0; i < t.phi; ++i) next[i + 1] = cur[i];
      next = umod(std::move(next), t.minpoly);
      next.resize(t.phi, Rational(0));
      cur = std::move(next);
    }
  }
  return t_table_cache.emplace(m, std::move(t)).first->second;
}

std::vector<unsigned> prime_divisors(unsigned m) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) ps.push_back(m);
  return ps;
}

// Solve A x = b exactly, A given column-major; returns coords or nullopt.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> cols,
                                                 std::vector<Rational> b) {
  const std::size_t rows = b.size(), ncols = cols.size();
  std::vector<std::size_t> pivot_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && cols[c][pr] == 0) ++pr;
    if (pr == rows) {
      pivot_row.push_back(rows);  // free column
      continue;
    }
    if (pr != r) {
      for (std::size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][pr], cols[cc][r]);
      std::swap(b[pr], b[r]);
    }
    Rational inv = Rational(1) / cols[c][r];
    for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][r] *= inv;
    b[r] *= inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || cols[c][rr] == 0) continue;
      Rational f = cols[c][rr];
      for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][rr] -= f * cols[cc][r];
      b[rr] -= f * b[r];
    }
    pivot_row.push_back(r);
    ++r;
  }
  // consistency: remaining rows of b must be zero
  for (std::size_t rr = r; rr < rows; ++rr)
    if (b[rr] != 0) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t c = 0; c < ncols; ++c)
    if (c < pivot_row.size() && pivot_row[c] < rows) x[c] = b[pivot_row[c]];
  return x;
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p : prime_divisors(m)) result -= result / p;
  return m == 0 ? 0 : result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw input_error("cyclotomic_polynomial: m = 0");
  return cyclo_upoly(m);
}

unsigned conductor_limit() { return g_conductor_limit.load(); }
void set_conductor_limit(unsigned limit) { g_conductor_limit.store(limit); }

Cyc::Cyc(long long num, long long den) : m_(1), c_(1) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  c_[0] = Rational(num, den);
}

Cyc Cyc::root_of_unity(unsigned m) {
  if (m == 0) throw input_error("root_of_unity: m = 0");
  if (m == 1) return Cyc(1);
  if (m == 2) return Cyc(-1);
  const unsigned phi = euler_phi(m);
  std::vector<Rational> coords(phi, Rational(0));
  coords[1] = 1;
  return from_coords(m, std::move(coords));
}

Cyc Cyc::from_coords(unsigned m, std::vector<Rational> coords) {
  if (m == 0) throw input_error("conductor must be positive");
  if (m > conductor_limit())
    throw conductor_limit_error("conductor " + std::to_string(m) + " exceeds limit " +
                                std::to_string(conductor_limit()));
  Cyc v;
  v.m_ = m;
  coords.resize(euler_phi(m), Rational(0));
  v.c_ = std::move(coords);
  v.canonicalize();
  return v;
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

const Rational& Cyc::rational_value() const {
  if (m_ != 1) throw std::logic_error("rational_value on non-rational cyclotomic");
  return c_[0];
}

namespace {

// Coordinates of the image of `v` (conductor d) inside Q(zeta_m), d | m.
std::vector<Rational> embed_coords(unsigned d, const std::vector<Rational>& coords, unsigned m) {
  const FieldTable& t = field_table(m);
  const unsigned phi = t.phi;
  const unsigned step = m / d;
  // Accumulate sum coords[k] * t^(k*step) reduced mod Phi_m.
  UPoly acc(phi, Rational(0));
  UPoly pw(phi, Rational(0));  // current power t^(k*step) in basis
  pw[0] = 1;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] != 0)
      for (unsigned i = 0; i < phi; ++i) acc[i] += coords[k] * pw[i];
    if (k + 1 < coords.size()) {
      // pw *= t^step, one t at a time through the reduction table
      for (unsigned s = 0; s < step; ++s) {
        UPoly next(phi, Rational(0));
        for (unsigned i = 0; i < phi; ++i) {
          if (pw[i] == 0) continue;
          if (i + 1 < phi) {
            next[i + 1] += pw[i];
          } else {
            const UPoly& row = t.high_power[0];
            for (unsigned j = 0; j < phi; ++j) next[j] += pw[i] * row[j];
          }
        }
        pw = std::move(next);
      }
    }
  }
  return acc;
}

}  // namespace

void Cyc::canonicalize() {
  if (m_ == 1) return;
  bool higher = false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) {
      higher = true;
      break;
    }
  if (!higher) {
    Rational v = c_.empty() ? Rational(0) : c_[0];
    m_ = 1;
    c_.assign(1, v);
    return;
  }
  // Greedy descent: try to land in Q(zeta_{m/q}) for each prime q | m.
  bool reduced = true;
  while (reduced && m_ > 1) {
    reduced = false;
    for (unsigned q : prime_divisors(m_)) {
      unsigned d = m_ / q;
      if (d == 0) continue;
      unsigned phid = euler_phi(d);
      std::vector<std::vector<Rational>> cols;
      cols.reserve(phid);
      std::vector<Rational> unit(phid, Rational(0));
      for (unsigned k = 0; k < phid; ++k) {
        std::fill(unit.begin(), unit.end(), Rational(0));
        unit[k] = 1;
        cols.push_back(embed_coords(d, unit, m_));
      }
      auto sol = solve_exact(std::move(cols), c_);
      if (sol) {
        m_ = d;
        c_ = std::move(*sol);
        c_.resize(euler_phi(d), Rational(0));
        if (m_ == 1) return;
        reduced = true;
        break;
      }
    }
  }
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  unsigned m = std::lcm(m_, o.m_);
  if (m > conductor_limit())
    throw conductor_limit_error("conductor " + std::to_string(m) + " exceeds limit " +
                                std::to_string(conductor_limit()));
  std::vector<Rational> a = (m_ == m) ? c_ : embed_coords(m_, c_, m);
  std::vector<Rational> b = (o.m_ == m) ? o.c_ : embed_coords(o.m_, o.c_, m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  m_ = m;
  c_ = std::move(a);
  canonicalize();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  return *this += (-o);
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (m_ == 1) {  // rational scalar times cyclotomic
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    if (s == 0) canonicalize();
    return *this;
  }
  if (o.m_ == 1) {
    const Rational& s = o.c_[0];
    for (auto& c : c_) c *= s;
    if (s == 0) canonicalize();
    return *this;
  }
  unsigned m = std::lcm(m_, o.m_);
  if (m > conductor_limit())
    throw conductor_limit_error("conductor " + std::to_string(m) + " exceeds limit " +
                                std::to_string(conductor_limit()));
  std::vector<Rational> a = (m_ == m) ? c_ : embed_coords(m_, c_, m);
  std::vector<Rational> b = (o.m_ == m) ? o.c_ : embed_coords(o.m_, o.c_, m);
  const FieldTable& t = field_table(m);
  const unsigned phi = t.phi;
  // convolution
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  std::vector<Rational> res(conv.begin(), conv.begin() + phi);
  for (unsigned j = phi; j < 2 * phi - 1; ++j) {
    if (conv[j] == 0) continue;
    const UPoly& row = t.high_power[j - phi];
    for (unsigned i = 0; i < phi; ++i) res[i] += conv[j] * row[i];
  }
  m_ = m;
  c_ = std::move(res);
  canonicalize();
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero");
  if (m_ == 1) {
    Cyc r;
    r.c_[0] = Rational(1) / c_[0];
    return r;
  }
  const FieldTable& t = field_table(m_);
  UPoly a = c_;
  utrim(a);
  UPoly s = uinv_mod(a, t.minpoly);
  s.resize(t.phi, Rational(0));
  Cyc r;
  r.m_ = m_;
  r.c_ = std::move(s);
  r.canonicalize();
  return r;
}

Cyc& Cyc::operator/=(const Cyc& o) {
  if (o.is_zero()) throw division_by_zero("division by zero");
  if (m_ == 1 && o.m_ == 1) {
    c_[0] /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

Cyc Cyc::pow(long long e) const {
  if (e == 0) return Cyc(1);
  Cyc base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  Cyc acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::optional<unsigned> Cyc::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
  unsigned bound = std::lcm(2u, m_);
  Cyc p(1);
  for (unsigned k = 1; k <= bound; ++k) {
    p *= *this;
    if (p.is_one()) return k;
  }
  return std::nullopt;
}

Cyc field_arith(const Cyc& a, const Cyc& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw std::logic_error("unreachable");
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

std::string Cyc::to_string() const {
  if (m_ == 1) return rational_to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << "*";
      os << "zeta(" << m_ << ")";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

bool Cyc::needs_parens() const {
  if (m_ == 1) return c_[0] < 0;
  unsigned nonzero = 0;
  for (const auto& c : c_)
    if (c != 0) ++nonzero;
  if (nonzero != 1) return true;
  // single basis term: negative coefficient still needs parens
  for (const auto& c : c_)
    if (c < 0) return true;
  return false;
}

std::size_t Cyc::hash() const {
  std::size_t h = 1469598103934665603ULL ^ m_;
  for (const auto& c : c_) {
    std::hash<std::string> sh;
    h ^= sh(rational_to_string(c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace pweyl
