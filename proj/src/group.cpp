#include "pweyl/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace pweyl {

std::string BDConvention::describe() const {
  std::string s = "zeta = primitive ";
  s += zeta_4n ? "4n-th" : "2n-th";
  s += " root; second generator ";
  s += offdiag_zeta4 ? "[[0, zeta(4)], [zeta(4), 0]]" : "[[0, 1], [-1, 0]]";
  return s;
}

CycMat GroupAction::symplectic_matrix(const CycMat& g) const {
  if (mode_ == ActionMode::Symplectic2n) return g;
  const unsigned n = rank_;
  CycMat rho(2 * n);
  CycMat xblock = g.inverse().transpose();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      rho.at(i, j) = xblock.at(i, j);
      rho.at(n + i, n + j) = g.at(i, j);
    }
  return rho;
}

bool preserves_symplectic_form(const CycMat& rho) {
  const unsigned d = rho.dim();
  if (d % 2) return false;
  const unsigned n = d / 2;
  auto omega = [&](unsigned i, unsigned j) -> int {
    if (i < n && j == i + n) return 1;
    if (j < n && i == j + n) return -1;
    return 0;
  };
  // (rho Omega rho^T)_{ab} == Omega_{ab}
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = a + 1; b < d; ++b) {
      Cyc s(0);
      for (unsigned i = 0; i < d; ++i) {
        if (rho.at(a, i).is_zero()) continue;
        unsigned j = i < n ? i + n : i - n;
        int w = omega(i, j);
        if (!rho.at(b, j).is_zero()) s += rho.at(a, i) * rho.at(b, j) * Cyc(w);
      }
      if (s != Cyc(omega(a, b))) return false;
    }
  return true;
}

bool GroupAction::is_symplectic() const {
  for (const auto& g : generators_)
    if (!preserves_symplectic_form(symplectic_matrix(g))) return false;
  return true;
}

bool GroupAction::contains(const CycMat& g) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const CycMat& e) { return e == g; });
}

GroupAction GroupAction::close_group(std::vector<CycMat> generators, ActionMode mode,
                                     unsigned rank, unsigned bound, std::string name,
                                     Catalog catalog) {
  const unsigned dim = mode == ActionMode::DiagonalLinear ? rank : 2 * rank;
  for (const auto& g : generators) {
    if (g.dim() != dim) throw input_error("generator has wrong dimension for action mode");
    if (!g.is_invertible()) throw input_error("generator is not invertible");
  }
  GroupAction a;
  a.rank_ = rank;
  a.mode_ = mode;
  a.generators_ = std::move(generators);
  a.name_ = std::move(name);
  a.catalog_ = std::move(catalog);
  for (const auto& g : a.generators_)
    if (!preserves_symplectic_form(a.symplectic_matrix(g)))
      throw input_error("generator does not preserve the canonical bracket");

  std::unordered_set<std::string> seen;
  std::deque<CycMat> work;
  CycMat id = CycMat::identity(dim);
  seen.insert(id.key());
  a.elements_.push_back(id);
  work.push_back(id);
  while (!work.empty()) {
    CycMat cur = std::move(work.front());
    work.pop_front();
    for (const auto& g : a.generators_) {
      CycMat next = cur * g;
      if (seen.insert(next.key()).second) {
        if (a.elements_.size() >= bound)
          throw group_bound_exceeded("group closure exceeds bound " + std::to_string(bound));
        a.elements_.push_back(next);
        work.push_back(std::move(next));
      }
    }
  }
  return a;
}

GroupAction GroupAction::unclosed(std::vector<CycMat> generators, ActionMode mode, unsigned rank,
                                  std::string name) {
  GroupAction a;
  a.rank_ = rank;
  a.mode_ = mode;
  a.generators_ = std::move(generators);
  a.elements_ = a.generators_;
  a.name_ = std::move(name);
  return a;
}

GroupAction GroupAction::trivial(unsigned n) {
  Catalog c;
  c.kind = Catalog::Kind::Trivial;
  c.n = n;
  return close_group({}, ActionMode::DiagonalLinear, n, kDefaultBound, "Id(n=" + std::to_string(n) + ")", c);
}

namespace {

CycMat permutation_matrix(unsigned n, unsigned i, unsigned j) {
  CycMat m = CycMat::identity(n);
  m.at(i, i) = Cyc(0);
  m.at(j, j) = Cyc(0);
  m.at(i, j) = Cyc(1);
  m.at(j, i) = Cyc(1);
  return m;
}

}  // namespace

GroupAction GroupAction::symmetric(unsigned n, unsigned bound) {
  Catalog c;
  c.kind = Catalog::Kind::Symmetric;
  c.n = n;
  std::vector<CycMat> gens;
  for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(permutation_matrix(n, i, i + 1));
  return close_group(std::move(gens), ActionMode::DiagonalLinear, n, bound,
                     "Sn(n=" + std::to_string(n) + ")", c);
}

GroupAction GroupAction::reflection_gmpn(unsigned m, unsigned p, unsigned n, unsigned bound) {
  if (m == 0 || p == 0 || n == 0 || m % p != 0)
    throw input_error("G(m,p,n) requires positive m, n and p | m");
  Catalog c;
  c.kind = Catalog::Kind::GMPN;
  c.m = m;
  c.p = p;
  c.n = n;
  std::vector<CycMat> gens;
  for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(permutation_matrix(n, i, i + 1));
  if (m > 1 && n >= 2) {
    CycMat d = CycMat::identity(n);
    d.at(0, 0) = Cyc::root_of_unity(m);
    d.at(1, 1) = Cyc::root_of_unity(m).inverse();
    gens.push_back(std::move(d));
  }
  if (m / p > 1) {
    CycMat d = CycMat::identity(n);
    d.at(0, 0) = Cyc::root_of_unity(m / p);
    gens.push_back(std::move(d));
  }
  std::ostringstream name;
  name << "G(m=" << m << ",p=" << p << ",n=" << n << ")";
  return close_group(std::move(gens), ActionMode::DiagonalLinear, n, bound, name.str(), c);
}

GroupAction GroupAction::cyclic_sl2(unsigned m, unsigned bound) {
  if (m == 0) throw input_error("Cyc(m) requires m >= 1");
  Catalog c;
  c.kind = Catalog::Kind::CyclicSL2;
  c.m = m;
  c.n = 1;
  std::vector<CycMat> gens;
  if (m > 1) {
    CycMat d(2);
    d.at(0, 0) = Cyc::root_of_unity(m);
    d.at(1, 1) = Cyc::root_of_unity(m).inverse();
    gens.push_back(std::move(d));
  }
  return close_group(std::move(gens), ActionMode::Symplectic2n, 1, bound,
                     "Cyc(m=" + std::to_string(m) + ")", c);
}

GroupAction GroupAction::binary_dihedral(unsigned n, const BDConvention& conv, unsigned bound) {
  if (n == 0) throw input_error("BD(n) requires n >= 1");
  Catalog c;
  c.kind = Catalog::Kind::BinaryDihedral;
  c.n = n;
  std::vector<CycMat> gens;
  Cyc zeta = Cyc::root_of_unity(conv.zeta_4n ? 4 * n : 2 * n);
  CycMat a(2);
  a.at(0, 0) = zeta;
  a.at(1, 1) = zeta.inverse();
  gens.push_back(std::move(a));
  CycMat s(2);
  if (conv.offdiag_zeta4) {
    s.at(0, 1) = Cyc::root_of_unity(4);
    s.at(1, 0) = Cyc::root_of_unity(4);
  } else {
    s.at(0, 1) = Cyc(1);
    s.at(1, 0) = Cyc(-1);
  }
  gens.push_back(std::move(s));
  return close_group(std::move(gens), ActionMode::Symplectic2n, 1, bound,
                     "BD(n=" + std::to_string(n) + ")", c);
}

GroupAction GroupAction::wreath(const GroupAction& block, unsigned n, unsigned bound) {
  if (block.rank() != 1) throw input_error("wreath block must have rank 1");
  Catalog c;
  c.kind = Catalog::Kind::Wreath;
  c.n = n;
  c.block = block.name();
  std::vector<CycMat> gens;
  // block generators acting on the first pair
  for (const auto& g : block.generators()) {
    CycMat b = block.symplectic_matrix(g);  // 2x2 on (x_1, y_1)
    CycMat m = CycMat::identity(2 * n);
    m.at(0, 0) = b.at(0, 0);
    m.at(0, n) = b.at(0, 1);
    m.at(n, 0) = b.at(1, 0);
    m.at(n, n) = b.at(1, 1);
    gens.push_back(std::move(m));
  }
  // adjacent pair transpositions
  for (unsigned i = 0; i + 1 < n; ++i) {
    CycMat m = CycMat::identity(2 * n);
    for (unsigned blockrow : {0u, n}) {
      unsigned a = blockrow + i, b = blockrow + i + 1;
      m.at(a, a) = Cyc(0);
      m.at(b, b) = Cyc(0);
      m.at(a, b) = Cyc(1);
      m.at(b, a) = Cyc(1);
    }
    gens.push_back(std::move(m));
  }
  std::string name = "wreath(" + block.name() + "," + std::to_string(n) + ")";
  return close_group(std::move(gens), ActionMode::Symplectic2n, n, bound, name, c);
}

// --- action on polynomials and rational functions ---------------------------

Poly act(const CycMat& rho, const Poly& f) {
  const unsigned nv = f.num_vars();
  if (rho.dim() != nv) throw input_error("action matrix dimension mismatch");
  if (f.is_zero() || f.is_constant()) return f;
  // images L_i = sum_j rho_ji w_j
  std::vector<Poly> images;
  images.reserve(nv);
  bool monomial_action = true;
  for (unsigned i = 0; i < nv; ++i) {
    std::vector<Poly::Term> terms;
    for (unsigned j = 0; j < nv; ++j) {
      if (rho.at(j, i).is_zero()) continue;
      Monomial m;
      m.e[j] = 1;
      m.deg = 1;
      terms.push_back({m, rho.at(j, i)});
    }
    if (terms.size() != 1) monomial_action = false;
    images.push_back(Poly::from_terms(f.rank(), std::move(terms)));
  }
  if (monomial_action) {
    // each input term maps to a single term: remap exponents, scale coefficient
    std::vector<unsigned> target(nv);
    std::vector<Cyc> scale(nv);
    for (unsigned i = 0; i < nv; ++i) {
      const auto& t = images[i].terms()[0];
      for (unsigned j = 0; j < nv; ++j)
        if (t.mono.e[j]) target[i] = j;
      scale[i] = t.coeff;
    }
    std::vector<Poly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      Monomial m;
      m.deg = t.mono.deg;
      Cyc c = t.coeff;
      for (unsigned i = 0; i < nv; ++i) {
        unsigned e = t.mono.e[i];
        if (!e) continue;
        m.e[target[i]] = static_cast<std::uint16_t>(m.e[target[i]] + e);
        if (!scale[i].is_one()) c *= scale[i].pow(static_cast<long long>(e));
      }
      out.push_back({m, std::move(c)});
    }
    return Poly::from_terms(f.rank(), std::move(out));
  }
  return f.compose(images);
}

RatFn act(const CycMat& rho, const RatFn& f) {
  return RatFn(act(rho, f.num()), act(rho, f.den()));
}

Poly act(const GroupAction& action, std::size_t generator, const Poly& f) {
  return act(action.symplectic_generator(generator), f);
}

RatFn act(const GroupAction& action, std::size_t generator, const RatFn& f) {
  return act(action.symplectic_generator(generator), f);
}

bool is_invariant(const RatFn& f, const GroupAction& action) {
  for (std::size_t i = 0; i < action.generators().size(); ++i)
    if (!ratfn_equal(act(action, i, f), f)) return false;
  return true;
}

bool is_invariant(const Poly& f, const GroupAction& action) {
  for (std::size_t i = 0; i < action.generators().size(); ++i)
    if (act(action, i, f) != f) return false;
  return true;
}

// --- group spec parsing ------------------------------------------------------

namespace {

struct SpecCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw input_error("group spec: expected '" + std::string(1, c) + "' in '" + s + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    return s.substr(start, pos - start);
  }
  unsigned number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw input_error("group spec: expected number in '" + s + "'");
    return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
  }
  // parses "key=value" entries like (m=4,p=2,n=2)
  std::vector<std::pair<std::string, unsigned>> kv_list() {
    std::vector<std::pair<std::string, unsigned>> out;
    expect('(');
    if (eat(')')) return out;
    while (true) {
      std::string k = ident();
      expect('=');
      out.emplace_back(k, number());
      if (eat(')')) break;
      expect(',');
    }
    return out;
  }
};

unsigned require_key(const std::vector<std::pair<std::string, unsigned>>& kv,
                     const std::string& key, const std::string& ctx) {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  throw input_error("group spec " + ctx + ": missing parameter '" + key + "'");
}

GroupAction parse_spec_cursor(SpecCursor& cur, unsigned bound);

GroupAction parse_named(SpecCursor& cur, const std::string& head, unsigned bound) {
  if (head == "Sn") {
    auto kv = cur.kv_list();
    return GroupAction::symmetric(require_key(kv, "n", "Sn"), bound);
  }
  if (head == "G") {
    auto kv = cur.kv_list();
    return GroupAction::reflection_gmpn(require_key(kv, "m", "G"), require_key(kv, "p", "G"),
                                        require_key(kv, "n", "G"), bound);
  }
  if (head == "BD") {
    auto kv = cur.kv_list();
    // The convention below is the one the presentation search validates for
    // every n (see sl2_block); even n additionally admits [[0,1],[-1,0]].
    return GroupAction::binary_dihedral(require_key(kv, "n", "BD"), BDConvention{false, true},
                                        bound);
  }
  if (head == "Cyc") {
    auto kv = cur.kv_list();
    return GroupAction::cyclic_sl2(require_key(kv, "m", "Cyc"), bound);
  }
  if (head == "Id") {
    auto kv = cur.kv_list();
    return GroupAction::trivial(require_key(kv, "n", "Id"));
  }
  if (head == "wreath") {
    cur.expect('(');
    GroupAction block = parse_spec_cursor(cur, bound);
    cur.expect(',');
    unsigned n = cur.number();
    cur.expect(')');
    return GroupAction::wreath(block, n, bound);
  }
  throw input_error("unknown group spec head '" + head + "'");
}

GroupAction parse_spec_cursor(SpecCursor& cur, unsigned bound) {
  std::string head = cur.ident();
  return parse_named(cur, head, bound);
}

}  // namespace

GroupAction parse_group_spec(const std::string& spec, unsigned bound) {
  SpecCursor cur{spec};
  GroupAction a = parse_spec_cursor(cur, bound);
  cur.skip_ws();
  if (cur.pos != spec.size()) throw input_error("trailing characters in group spec '" + spec + "'");
  return a;
}

}  // namespace pweyl
