#include "pweyl/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pweyl {

namespace {

std::atomic<bool> g_parallel{true};

using TermMap = std::unordered_map<Monomial, Cyc, MonomialHash>;

std::vector<Poly::Term> map_to_terms(TermMap&& m) {
  std::vector<Poly::Term> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m)
    if (!c.is_zero()) out.push_back({mono, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return b.mono.less_than(a.mono); });
  return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.deg = a.deg + b.deg;
  if (r.deg > 0xFFFF) throw std::overflow_error("monomial degree overflow");
  for (unsigned i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return r;
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel_enabled(bool on) { g_parallel.store(on); }

void Poly::check_rank(unsigned rank) {
  if (2 * rank > kMaxVars)
    throw input_error("rank " + std::to_string(rank) + " exceeds supported maximum " +
                      std::to_string(kMaxVars / 2));
}

Poly Poly::constant(unsigned rank, Cyc c) {
  Poly p(rank);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, std::move(c)});
  return p;
}

Poly Poly::variable(unsigned rank, VarIndex v) {
  if (v.index == 0 || v.index > rank)
    throw input_error("variable " + v.to_string() + " out of range for rank " +
                      std::to_string(rank));
  Monomial m;
  m.e[v.flat(rank)] = 1;
  m.deg = 1;
  return monomial(rank, m, Cyc(1));
}

Poly Poly::monomial(unsigned rank, const Monomial& m, Cyc c) {
  Poly p(rank);
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(unsigned rank, std::vector<Term> terms) {
  Poly p(rank);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return b.mono.less_than(a.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0);
}

Cyc Poly::constant_value() const {
  if (terms_.empty()) return Cyc(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_[0].coeff;
}

unsigned Poly::degree_in(unsigned flat_var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[flat_var]);
  return d;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

bool Poly::equal_terms(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two descending term streams, with b scaled by `sign`.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    bool take_a;
    if (i == a.size()) {
      take_a = false;
    } else if (j == b.size()) {
      take_a = true;
    } else if (a[i].mono == b[j].mono) {
      Cyc c = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
      continue;
    } else {
      take_a = b[j].mono.less_than(a[i].mono);
    }
    if (take_a) {
      out.push_back(a[i]);
      ++i;
    } else {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (rank_ != o.rank_) {
    if (is_zero() && terms_.empty() && rank_ == 0) rank_ = o.rank_;
    else if (o.is_zero()) return *this;
    else throw rank_mismatch("polynomial rank mismatch in addition");
  }
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (rank_ != o.rank_) {
    if (is_zero() && terms_.empty() && rank_ == 0) rank_ = o.rank_;
    else if (o.is_zero()) return *this;
    else throw rank_mismatch("polynomial rank mismatch in subtraction");
  }
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly mul_serial(const Poly& a, const Poly& b) {
  if (a.rank() != b.rank() && !a.is_zero() && !b.is_zero())
    throw rank_mismatch("polynomial rank mismatch in multiplication");
  unsigned rank = std::max(a.rank(), b.rank());
  if (a.is_zero() || b.is_zero()) return Poly::zero(rank);
  TermMap acc;
  acc.reserve(a.terms().size() + b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      Monomial m = mono_mul(ta.mono, tb.mono);
      auto [it, fresh] = acc.try_emplace(m, Cyc(0));
      if (fresh)
        it->second = ta.coeff * tb.coeff;
      else
        it->second += ta.coeff * tb.coeff;
    }
  return Poly::from_terms(rank, map_to_terms(std::move(acc)));
}

Poly mul_parallel(const Poly& a, const Poly& b) {
#ifdef _OPENMP
  if (a.rank() != b.rank() && !a.is_zero() && !b.is_zero())
    throw rank_mismatch("polynomial rank mismatch in multiplication");
  unsigned rank = std::max(a.rank(), b.rank());
  if (a.is_zero() || b.is_zero()) return Poly::zero(rank);
  const auto& big = a.terms().size() >= b.terms().size() ? a : b;
  const auto& small = a.terms().size() >= b.terms().size() ? b : a;
  const std::size_t n = big.terms().size();
  int nthreads = omp_get_max_threads();
  std::vector<TermMap> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    TermMap& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
    local.reserve(small.terms().size() * 4);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      const auto& ta = big.terms()[static_cast<std::size_t>(i)];
      for (const auto& tb : small.terms()) {
        Monomial m = mono_mul(ta.mono, tb.mono);
        auto [it, fresh] = local.try_emplace(m, Cyc(0));
        if (fresh)
          it->second = ta.coeff * tb.coeff;
        else
          it->second += ta.coeff * tb.coeff;
      }
    }
  }
  TermMap acc = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t)
    for (auto& [m, c] : partial[t]) {
      auto [it, fresh] = acc.try_emplace(m, Cyc(0));
      if (fresh)
        it->second = std::move(c);
      else
        it->second += c;
    }
  return Poly::from_terms(rank, map_to_terms(std::move(acc)));
#else
  return mul_serial(a, b);
#endif
}

Poly operator*(const Poly& a, const Poly& b) {
#ifdef _OPENMP
  // Parallel pays off only on large products; stay serial inside parallel
  // regions (table entries are already running concurrently there).
  constexpr std::size_t kParallelThreshold = 200000;
  if (parallel_enabled() && !omp_in_parallel() && omp_get_max_threads() > 1 &&
      a.terms().size() * b.terms().size() >= kParallelThreshold)
    return mul_parallel(a, b);
#endif
  return mul_serial(a, b);
}

Poly Poly::scaled(const Cyc& c) const {
  if (c.is_zero()) return Poly::zero(rank_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(rank_, Cyc(1));
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

Poly Poly::derivative_flat(unsigned flat_var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono.e[flat_var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.e[flat_var] = static_cast<std::uint16_t>(e - 1);
    m.deg -= 1;
    out.push_back({m, t.coeff * Cyc(static_cast<int>(e))});
  }
  return from_terms(rank_, std::move(out));
}

Poly Poly::derivative(VarIndex v) const { return derivative_flat(v.flat(rank_)); }

Cyc Poly::eval(std::span<const Cyc> point) const {
  if (point.size() < num_vars()) throw input_error("evaluation point has wrong dimension");
  // Cache powers per variable up to the needed degree.
  std::vector<std::vector<Cyc>> powers(num_vars());
  for (unsigned v = 0; v < num_vars(); ++v) {
    unsigned d = degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].push_back(Cyc(1));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  Cyc acc(0);
  for (const auto& t : terms_) {
    Cyc prod = t.coeff;
    for (unsigned v = 0; v < num_vars(); ++v)
      if (t.mono.e[v]) prod *= powers[v][t.mono.e[v]];
    acc += prod;
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (images.size() < num_vars()) throw input_error("compose: missing variable images");
  unsigned out_rank = terms_.empty() ? rank_ : images.empty() ? rank_ : images[0].rank();
  for (const auto& im : images) out_rank = std::max(out_rank, im.rank());
  std::vector<std::vector<Poly>> powers(num_vars());
  for (unsigned v = 0; v < num_vars(); ++v) {
    unsigned d = degree_in(v);
    powers[v].push_back(Poly::constant(out_rank, Cyc(1)));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  Poly acc = Poly::zero(out_rank);
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(out_rank, t.coeff);
    for (unsigned v = 0; v < num_vars(); ++v)
      if (t.mono.e[v]) prod = prod * powers[v][t.mono.e[v]];
    acc += prod;
  }
  return acc;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
  if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
  if (is_zero()) return Poly::zero(rank_);
  if (rank_ != divisor.rank_) throw rank_mismatch("polynomial rank mismatch in division");
  Poly rem = *this;
  std::vector<Term> quot;
  const Term& dl = divisor.leading_term();
  while (!rem.is_zero()) {
    const Term& rl = rem.leading_term();
    if (!dl.mono.divides(rl.mono)) return std::nullopt;
    Monomial q;
    q.deg = rl.mono.deg - dl.mono.deg;
    for (unsigned i = 0; i < kMaxVars; ++i)
      q.e[i] = static_cast<std::uint16_t>(rl.mono.e[i] - dl.mono.e[i]);
    Cyc c = rl.coeff / dl.coeff;
    quot.push_back({q, c});
    rem -= Poly::monomial(rank_, q, c) * divisor;
  }
  return from_terms(rank_, std::move(quot));
}

Poly Poly::divide_exact(const Poly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw input_error("polynomial division is not exact");
  return *q;
}

Monomial Poly::monomial_content() const {
  Monomial m;
  if (terms_.empty()) return m;
  for (unsigned i = 0; i < kMaxVars; ++i) m.e[i] = 0xFFFF;
  for (const auto& t : terms_)
    for (unsigned i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.mono.e[i]);
  m.deg = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) m.deg += m.e[i];
  return m;
}

Poly Poly::shift_down(const Monomial& m) const {
  if (m.deg == 0) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) {
    for (unsigned i = 0; i < kMaxVars; ++i) {
      if (t.mono.e[i] < m.e[i]) throw input_error("shift_down: monomial does not divide");
      t.mono.e[i] = static_cast<std::uint16_t>(t.mono.e[i] - m.e[i]);
    }
    t.mono.deg -= m.deg;
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.coeff.to_string();
    bool neg = false;
    if (!t.coeff.needs_parens() && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    for (unsigned i = 0; i < num_vars(); ++i) {
      if (!t.mono.e[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += (i < rank_) ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - rank_ + 1);
      if (t.mono.e[i] > 1) vars += "^" + std::to_string(t.mono.e[i]);
    }
    bool coeff_is_unit = (cs == "1");
    if (vars.empty()) {
      os << (t.coeff.needs_parens() ? "(" + cs + ")" : cs);
    } else if (coeff_is_unit) {
      os << vars;
    } else if (t.coeff.needs_parens()) {
      os << "(" << cs << ")*" << vars;
    } else {
      os << cs << "*" << vars;
    }
  }
  return os.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  throw std::logic_error("unreachable");
}

Poly partial_derivative(const Poly& p, VarIndex v) { return p.derivative(v); }

Poly elementary_symmetric(unsigned rank, unsigned k, const std::vector<VarIndex>& vars) {
  if (k > vars.size()) return Poly::zero(rank);
  // e_k via the product recurrence on prefixes: e[j] over first i variables.
  std::vector<Poly> e(k + 1, Poly::zero(rank));
  e[0] = Poly::constant(rank, Cyc(1));
  for (const auto& v : vars) {
    Poly xv = Poly::variable(rank, v);
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * xv;
  }
  return e[k];
}

Poly remap_pairs(const Poly& p, unsigned pair_offset, unsigned new_rank) {
  if (p.rank() + pair_offset > new_rank) throw input_error("remap_pairs: target rank too small");
  std::vector<Poly::Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m;
    m.deg = t.mono.deg;
    for (unsigned i = 0; i < p.rank(); ++i) {
      m.e[i + pair_offset] = t.mono.e[i];                            // x block
      m.e[new_rank + i + pair_offset] = t.mono.e[p.rank() + i];      // y block
    }
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(new_rank, std::move(out));
}

// ---------------------------------------------------------------------------
// multivariate gcd: monomial content + primitive PRS in the least variable
// ---------------------------------------------------------------------------

namespace {

// View of p as univariate in flat variable v with Poly coefficients.
std::map<unsigned, Poly> univariate_view(const Poly& p, unsigned v) {
  std::map<unsigned, Poly> coeffs;
  for (const auto& t : p.terms()) {
    unsigned d = t.mono.e[v];
    Monomial m = t.mono;
    m.e[v] = 0;
    m.deg -= d;
    auto it = coeffs.find(d);
    if (it == coeffs.end()) it = coeffs.emplace(d, Poly::zero(p.rank())).first;
    it->second += Poly::monomial(p.rank(), m, t.coeff);
  }
  return coeffs;
}

Poly from_univariate_view(unsigned rank, unsigned v, const std::map<unsigned, Poly>& coeffs) {
  Poly acc = Poly::zero(rank);
  for (const auto& [d, c] : coeffs) {
    Monomial m;
    m.e[v] = static_cast<std::uint16_t>(d);
    m.deg = d;
    acc += c * Poly::monomial(rank, m, Cyc(1));
  }
  return acc;
}

Poly gcd_inner(const Poly& a, const Poly& b);

// Content of p w.r.t. variable v: gcd of the univariate coefficients.
Poly content_wrt(const std::map<unsigned, Poly>& view, unsigned rank) {
  Poly g = Poly::zero(rank);
  for (const auto& [d, c] : view) {
    g = g.is_zero() ? c : gcd_inner(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly::constant(rank, Cyc(1));
  }
  return g;
}

// Pseudo-remainder of u by w (views in the same variable).
std::map<unsigned, Poly> pseudo_rem(std::map<unsigned, Poly> u, const std::map<unsigned, Poly>& w,
                                    unsigned rank) {
  const unsigned dw = w.rbegin()->first;
  const Poly& lw = w.rbegin()->second;
  while (!u.empty() && u.rbegin()->first >= dw) {
    unsigned du = u.rbegin()->first;
    Poly lu = u.rbegin()->second;
    // u = lw*u - lu * w * t^(du-dw)
    std::map<unsigned, Poly> next;
    for (const auto& [d, c] : u) {
      if (d == du) continue;
      next[d] = c * lw;
    }
    for (const auto& [d, c] : w) {
      if (d == dw) continue;
      unsigned nd = d + du - dw;
      auto it = next.find(nd);
      if (it == next.end())
        next[nd] = -(c * lu);
      else {
        it->second -= c * lu;
        if (it->second.is_zero()) next.erase(it);
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    u = std::move(next);
    (void)rank;
  }
  return u;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_term().coeff.inverse());
}

Poly gcd_inner(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const unsigned rank = a.rank();
  // split off monomial content
  Monomial ca = a.monomial_content(), cb = b.monomial_content();
  Monomial cg;
  cg.deg = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    cg.e[i] = std::min(ca.e[i], cb.e[i]);
    cg.deg += cg.e[i];
  }
  Poly pa = a.shift_down(ca), pb = b.shift_down(cb);
  if (pa.is_constant() || pb.is_constant())
    return Poly::monomial(rank, cg, Cyc(1));
  // pick the least flat variable present in both
  std::optional<unsigned> var;
  for (unsigned v = 0; v < 2 * rank && !var; ++v)
    if (pa.degree_in(v) > 0 && pb.degree_in(v) > 0) var = v;
  if (!var) return Poly::monomial(rank, cg, Cyc(1));

  auto va = univariate_view(pa, *var);
  auto vb = univariate_view(pb, *var);
  Poly cont_a = content_wrt(va, rank);
  Poly cont_b = content_wrt(vb, rank);
  Poly cont_g = gcd_inner(cont_a, cont_b);

  // primitive parts
  auto primitive = [&](std::map<unsigned, Poly>& view, const Poly& cont) {
    if (cont.is_constant()) return;
    for (auto& [d, c] : view) c = c.divide_exact(cont);
  };
  primitive(va, cont_a);
  primitive(vb, cont_b);

  auto* u = &va;
  auto* w = &vb;
  if (u->rbegin()->first < w->rbegin()->first) std::swap(u, w);
  std::map<unsigned, Poly> r0 = *u, r1 = *w;
  while (!r1.empty()) {
    auto r2 = pseudo_rem(r0, r1, rank);
    if (!r2.empty()) {
      Poly c2 = content_wrt(r2, rank);
      if (!c2.is_constant())
        for (auto& [d, c] : r2) c = c.divide_exact(c2);
      // scalar-normalize to keep coefficients tame
      Poly whole = from_univariate_view(rank, *var, r2);
      Cyc lc = whole.leading_term().coeff;
      for (auto& [d, c] : r2) c = c.scaled(lc.inverse());
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  Poly g = from_univariate_view(rank, *var, r0);
  Monomial mc = g.monomial_content();
  g = g.shift_down(mc);
  g = g * cont_g;
  g = g * Poly::monomial(rank, cg, Cyc(1));
  return make_monic(g);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (!a.is_zero() && !b.is_zero() && a.rank() != b.rank())
    throw rank_mismatch("gcd rank mismatch");
  return gcd_inner(a, b);
}

}  // namespace pweyl
