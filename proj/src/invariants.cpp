#include "pweyl/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace pweyl {

Poly bareiss_determinant(std::vector<std::vector<Poly>> m, unsigned rank) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(rank, Cyc(1));
  int sign = 1;
  Poly prev = Poly::constant(rank, Cyc(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly::zero(rank);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t.divide_exact(prev);
      }
      m[i][k] = Poly::zero(rank);
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& m, unsigned rank) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n, Poly::zero(rank)));
  if (n == 1) {
    adj[0][0] = Poly::constant(rank, Cyc(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Poly>> minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Poly> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Poly cof = bareiss_determinant(std::move(minor), rank);
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = std::move(cof);  // adjugate is the transposed cofactor matrix
    }
  return adj;
}

namespace {

std::vector<VarIndex> y_vars(unsigned n) {
  std::vector<VarIndex> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back(VarIndex::y(i));
  return v;
}

Poly power_of_var(unsigned rank, VarIndex v, unsigned e) {
  Monomial m;
  m.e[v.flat(rank)] = static_cast<std::uint16_t>(e);
  m.deg = e;
  return Poly::monomial(rank, m, Cyc(1));
}

std::vector<std::vector<Poly>> jacobian_matrix(const std::vector<Poly>& invs, unsigned rank) {
  const std::size_t n = invs.size();
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly::zero(rank)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M[i][j] = invs[j].derivative(VarIndex::y(static_cast<unsigned>(i) + 1));
  return M;
}

void validate_system(const InvariantSystem& sys) {
  const unsigned n = sys.action.rank();
  if (sys.invs.size() != n) throw input_error("invariant system must have exactly n entries");
  for (unsigned j = 0; j < n; ++j) {
    const Poly& e = sys.invs[j];
    for (unsigned v = 0; v < n; ++v)
      if (e.degree_in(v) > 0) throw input_error("fundamental invariants must involve only y-variables");
    if (e.total_degree() != sys.degrees[j]) throw input_error("invariant degree mismatch");
    if (!is_invariant(e, sys.action))
      throw input_error("supplied polynomial is not invariant under the action");
  }
  Poly J = bareiss_determinant(jacobian_matrix(sys.invs, n), n);
  if (J.is_zero()) throw input_error("invariants are algebraically dependent (J = 0)");
  // Chevalley-Shephard-Todd numerology for the reflection catalogs.
  auto kind = sys.action.catalog().kind;
  if (kind == Catalog::Kind::Trivial || kind == Catalog::Kind::Symmetric ||
      kind == Catalog::Kind::GMPN) {
    std::uint64_t prod = 1;
    for (unsigned d : sys.degrees) prod *= d;
    if (prod != sys.action.order())
      throw input_error("product of invariant degrees does not match the group order");
  }
}

}  // namespace

InvariantSystem fundamental_invariants(const GroupAction& action) {
  if (action.mode() != ActionMode::DiagonalLinear)
    throw input_error("fundamental invariants are only cataloged for diagonally linear actions");
  const unsigned n = action.rank();
  InvariantSystem sys;
  sys.action = action;
  switch (action.catalog().kind) {
    case Catalog::Kind::Trivial: {
      for (unsigned k = 1; k <= n; ++k) {
        sys.invs.push_back(Poly::variable(n, VarIndex::y(k)));
        sys.degrees.push_back(1);
      }
      break;
    }
    case Catalog::Kind::Symmetric: {
      for (unsigned k = 1; k <= n; ++k) {
        sys.invs.push_back(elementary_symmetric(n, k, y_vars(n)));
        sys.degrees.push_back(k);
      }
      break;
    }
    case Catalog::Kind::GMPN: {
      const unsigned m = action.catalog().m, p = action.catalog().p;
      // e_1(y^m), ..., e_{n-1}(y^m), (y_1...y_n)^(m/p)
      std::vector<Poly> ypows;
      for (unsigned i = 1; i <= n; ++i) ypows.push_back(power_of_var(n, VarIndex::y(i), m));
      for (unsigned k = 1; k + 1 <= n; ++k) {
        // e_k of the m-th powers via compose on elementary symmetric
        Poly ek = elementary_symmetric(n, k, y_vars(n));
        std::vector<Poly> images(2 * n, Poly::zero(n));
        for (unsigned i = 0; i < n; ++i) {
          images[i] = Poly::variable(n, VarIndex::x(i + 1));
          images[n + i] = ypows[i];
        }
        sys.invs.push_back(ek.compose(images));
        sys.degrees.push_back(k * m);
      }
      Monomial mono;
      for (unsigned i = 0; i < n; ++i) mono.e[n + i] = static_cast<std::uint16_t>(m / p);
      mono.deg = n * (m / p);
      sys.invs.push_back(Poly::monomial(n, mono, Cyc(1)));
      sys.degrees.push_back(n * (m / p));
      break;
    }
    default:
      throw input_error(
          "no invariant catalog for this group; supply custom invariants instead");
  }
  validate_system(sys);
  return sys;
}

InvariantSystem make_invariant_system(const GroupAction& action, std::vector<Poly> invs) {
  InvariantSystem sys;
  sys.action = action;
  sys.invs = std::move(invs);
  for (const auto& e : sys.invs) sys.degrees.push_back(e.total_degree());
  validate_system(sys);
  return sys;
}

JacobianData jacobian(const InvariantSystem& sys) {
  const unsigned n = sys.action.rank();
  JacobianData jd;
  jd.M = jacobian_matrix(sys.invs, n);
  jd.J = bareiss_determinant(jd.M, n);
  if (jd.J.is_zero()) throw input_error("dependent invariants: J = 0");

  // paper exponent: 2 for the symmetric group, |G| otherwise
  switch (sys.action.catalog().kind) {
    case Catalog::Kind::Trivial: jd.sigma_exponent = 1; break;
    case Catalog::Kind::Symmetric: jd.sigma_exponent = sys.action.order() <= 1 ? 1 : 2; break;
    default: jd.sigma_exponent = sys.action.order(); break;
  }

  // minimal exponent = order of the character g -> act(g, J)/J
  unsigned lcm_order = 1;
  for (std::size_t i = 0; i < sys.action.generators().size(); ++i) {
    Poly gJ = act(sys.action, i, jd.J);
    // gJ must be a constant multiple of J
    const Cyc c = gJ.leading_term().coeff / jd.J.leading_term().coeff;
    if (gJ != jd.J.scaled(c))
      throw input_error("Jacobian does not transform by a character under the action");
    auto ord = c.root_of_unity_order();
    if (!ord) throw input_error("Jacobian character value is not a root of unity");
    lcm_order = static_cast<unsigned>(std::lcm<std::uint64_t>(lcm_order, *ord));
  }
  jd.sigma_min_exponent = lcm_order;
  return jd;
}

// --- express in invariants ---------------------------------------------------

namespace {

// All exponent tuples a with sum a_j * deg_j == target.
void weighted_tuples(const std::vector<unsigned>& degs, unsigned target, unsigned pos,
                     std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (pos == degs.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (unsigned a = 0; a * degs[pos] <= target; ++a) {
    cur[pos] = a;
    weighted_tuples(degs, target - a * degs[pos], pos + 1, cur, out);
  }
  cur[pos] = 0;
}

Poly homogeneous_component(const Poly& f, unsigned d) {
  std::vector<Poly::Term> terms;
  for (const auto& t : f.terms())
    if (t.mono.deg == d) terms.push_back(t);
  return Poly::from_terms(f.rank(), std::move(terms));
}

}  // namespace

Poly express_in_invariants(const Poly& f, const InvariantSystem& sys) {
  const unsigned n = sys.action.rank();
  for (unsigned v = 0; v < n; ++v)
    if (f.degree_in(v) > 0) throw input_error("express_in_invariants: input must be y-only");
  if (!is_invariant(f, sys.action))
    throw input_error("express_in_invariants: input is not invariant");
  if (f.is_zero()) return Poly::zero(n);

  // power cache for e_j
  std::vector<std::vector<Poly>> epow(n);
  auto e_power = [&](unsigned j, unsigned k) -> const Poly& {
    auto& cache = epow[j];
    if (cache.empty()) cache.push_back(Poly::constant(n, Cyc(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * sys.invs[j]);
    return cache[k];
  };

  Poly result = Poly::zero(n);
  std::vector<unsigned> degrees_present;
  for (const auto& t : f.terms())
    if (std::find(degrees_present.begin(), degrees_present.end(), t.mono.deg) ==
        degrees_present.end())
      degrees_present.push_back(t.mono.deg);

  for (unsigned d : degrees_present) {
    Poly comp = homogeneous_component(f, d);
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur(n, 0);
    weighted_tuples(sys.degrees, d, 0, cur, tuples);
    if (tuples.empty())
      throw input_error("express_in_invariants: no invariant monomials at degree " +
                        std::to_string(d));
    // expand each candidate e^alpha
    std::vector<Poly> expanded;
    expanded.reserve(tuples.size());
    for (const auto& alpha : tuples) {
      Poly prod = Poly::constant(n, Cyc(1));
      for (unsigned j = 0; j < n; ++j)
        if (alpha[j]) prod = prod * e_power(j, alpha[j]);
      expanded.push_back(std::move(prod));
    }
    // linear system on y-monomials
    std::vector<Monomial> rows;
    for (const auto& p : expanded)
      for (const auto& t : p.terms()) rows.push_back(t.mono);
    for (const auto& t : comp.terms()) rows.push_back(t.mono);
    std::sort(rows.begin(), rows.end(), [](const Monomial& a, const Monomial& b) {
      return a.less_than(b);
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    auto row_of = [&](const Monomial& m) {
      return static_cast<std::size_t>(
          std::lower_bound(rows.begin(), rows.end(), m,
                           [](const Monomial& a, const Monomial& b) { return a.less_than(b); }) -
          rows.begin());
    };
    const std::size_t nrows = rows.size(), ncols = tuples.size();
    std::vector<std::vector<Cyc>> A(nrows, std::vector<Cyc>(ncols, Cyc(0)));
    std::vector<Cyc> b(nrows, Cyc(0));
    for (std::size_t c = 0; c < ncols; ++c)
      for (const auto& t : expanded[c].terms()) A[row_of(t.mono)][c] = t.coeff;
    for (const auto& t : comp.terms()) b[row_of(t.mono)] = t.coeff;

    // exact Gaussian elimination
    std::vector<std::optional<std::size_t>> pivot_of_col(ncols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
      std::size_t p = r;
      while (p < nrows && A[p][c].is_zero()) ++p;
      if (p == nrows) continue;
      std::swap(A[p], A[r]);
      std::swap(b[p], b[r]);
      Cyc inv = A[r][c].inverse();
      for (std::size_t cc = c; cc < ncols; ++cc) A[r][cc] *= inv;
      b[r] *= inv;
      for (std::size_t rr = 0; rr < nrows; ++rr) {
        if (rr == r || A[rr][c].is_zero()) continue;
        Cyc fcoef = A[rr][c];
        for (std::size_t cc = c; cc < ncols; ++cc) A[rr][cc] -= fcoef * A[r][cc];
        b[rr] -= fcoef * b[r];
      }
      pivot_of_col[c] = r;
      ++r;
    }
    for (std::size_t rr = r; rr < nrows; ++rr)
      if (!b[rr].is_zero())
        throw input_error("express_in_invariants: input is not in the invariant ring");
    // assemble this component's solution as a polynomial in placeholders y_j
    for (std::size_t c = 0; c < ncols; ++c) {
      Cyc coef = pivot_of_col[c] ? b[*pivot_of_col[c]] : Cyc(0);
      if (coef.is_zero()) continue;
      Monomial m;
      for (unsigned j = 0; j < n; ++j) {
        m.e[n + j] = static_cast<std::uint16_t>(tuples[c][j]);
        m.deg += tuples[c][j];
      }
      result += Poly::monomial(n, m, coef);
    }
  }

  // round-trip verification: substitute e_j back for y_j
  std::vector<Poly> images(2 * n, Poly::zero(n));
  for (unsigned i = 0; i < n; ++i) {
    images[i] = Poly::variable(n, VarIndex::x(i + 1));
    images[n + i] = sys.invs[i];
  }
  if (result.compose(images) != f)
    throw input_error("express_in_invariants: verification failed (no exact representation)");
  return result;
}

// --- independence certificate -------------------------------------------------

IndependenceWitness independence_certificate(const std::vector<RatFn>& fns, std::uint64_t seed,
                                             unsigned retries) {
  IndependenceWitness w;
  w.seed = seed;
  if (fns.empty()) return w;
  const unsigned rank = fns[0].rank();
  const unsigned nv = 2 * rank;
  if (fns.size() != nv) throw input_error("independence certificate expects 2n functions");

  // partials evaluated numerically: d(P/Q) = (dP Q - P dQ)/Q^2 at the point
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (unsigned attempt = 1; attempt <= retries; ++attempt) {
    std::vector<Cyc> point;
    point.reserve(nv);
    for (unsigned i = 0; i < nv; ++i) {
      int v = dist(rng);
      if (v == 0) v = 1;
      point.push_back(Cyc(v));
    }
    try {
      CycMat Jm(nv);
      for (unsigned i = 0; i < nv; ++i) {
        Cyc qv = fns[i].den().eval(point);
        if (qv.is_zero()) throw division_by_zero("denominator vanishes");
        Cyc pv = fns[i].num().eval(point);
        Cyc q2 = qv * qv;
        for (unsigned j = 0; j < nv; ++j) {
          Cyc dp = fns[i].num().derivative_flat(j).eval(point);
          Cyc dq = fns[i].den().derivative_flat(j).eval(point);
          Jm.at(i, j) = (dp * qv - pv * dq) / q2;
        }
      }
      Cyc d = Jm.det();
      if (!d.is_zero()) {
        w.status = IndependenceWitness::Status::Success;
        w.point = std::move(point);
        w.det = d;
        w.attempts = attempt;
        return w;
      }
    } catch (const division_by_zero&) {
      // unlucky point; retry
    }
    w.attempts = attempt;
  }
  return w;
}

bool recheck_independence(const std::vector<RatFn>& fns, const IndependenceWitness& w) {
  if (!w.ok()) return false;
  const unsigned nv = static_cast<unsigned>(fns.size());
  if (w.point.size() != nv) return false;
  try {
    CycMat Jm(nv);
    for (unsigned i = 0; i < nv; ++i) {
      Cyc qv = fns[i].den().eval(w.point);
      if (qv.is_zero()) return false;
      Cyc pv = fns[i].num().eval(w.point);
      Cyc q2 = qv * qv;
      for (unsigned j = 0; j < nv; ++j) {
        Cyc dp = fns[i].num().derivative_flat(j).eval(w.point);
        Cyc dq = fns[i].den().derivative_flat(j).eval(w.point);
        Jm.at(i, j) = (dp * qv - pv * dq) / q2;
      }
    }
    return Jm.det() == w.det && !w.det.is_zero();
  } catch (const division_by_zero&) {
    return false;
  }
}

}  // namespace pweyl
