#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pweyl/matrix.hpp"
#include "pweyl/rational_function.hpp"

namespace pweyl {

enum class ActionMode {
  // g stored as an n x n matrix A acting on the y-span; the x-span transforms
  // by the inverse transpose, so the pairing {x_i, y_j} is preserved.
  DiagonalLinear,
  // g stored as a full 2n x 2n matrix on (x_1..x_n, y_1..y_n).
  Symplectic2n,
};

// Catalog identity of a group, used by the invariant machinery.
struct Catalog {
  enum class Kind { Trivial, Symmetric, GMPN, CyclicSL2, BinaryDihedral, Wreath, Custom };
  Kind kind = Kind::Custom;
  unsigned m = 1, p = 1, n = 1;
  std::string block;  // wreath: spec string of the SL2 block
};

// Convention choice for the binary dihedral SL2 embedding.
struct BDConvention {
  bool zeta_4n = false;        // primitive 4n-th root instead of 2n-th
  bool offdiag_zeta4 = false;  // second generator (0, i; i, 0) instead of (0, 1; -1, 0)
  std::string describe() const;
};

// A finite linear group acting on P_n, with materialized closure.
class GroupAction {
 public:
  GroupAction() = default;  // empty placeholder; real instances come from the constructors below

  unsigned rank() const { return rank_; }
  ActionMode mode() const { return mode_; }
  const std::string& name() const { return name_; }
  const Catalog& catalog() const { return catalog_; }
  const std::vector<CycMat>& generators() const { return generators_; }
  const std::vector<CycMat>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  // 2n x 2n symplectic form of a stored element or generator.
  CycMat symplectic_matrix(const CycMat& g) const;
  CycMat symplectic_generator(std::size_t i) const { return symplectic_matrix(generators_.at(i)); }

  bool is_symplectic() const;
  bool contains(const CycMat& g) const;

  // --- catalog constructors -------------------------------------------------
  static GroupAction trivial(unsigned n);
  static GroupAction symmetric(unsigned n, unsigned bound = kDefaultBound);
  static GroupAction reflection_gmpn(unsigned m, unsigned p, unsigned n,
                                     unsigned bound = kDefaultBound);
  static GroupAction cyclic_sl2(unsigned m, unsigned bound = kDefaultBound);
  static GroupAction binary_dihedral(unsigned n, const BDConvention& conv,
                                     unsigned bound = kDefaultBound);
  // n copies of a rank-1 symplectic block permuted by S_n.
  static GroupAction wreath(const GroupAction& block, unsigned n,
                            unsigned bound = kDefaultBound);

  // General closure from generators.
  static GroupAction close_group(std::vector<CycMat> generators, ActionMode mode, unsigned rank,
                                 unsigned bound = kDefaultBound, std::string name = "custom",
                                 Catalog catalog = {});

  // No closure, no checks; for predicates on would-be groups in tests.
  static GroupAction unclosed(std::vector<CycMat> generators, ActionMode mode, unsigned rank,
                              std::string name = "unclosed");

  static constexpr unsigned kDefaultBound = 10000;

 private:
  unsigned rank_ = 0;
  ActionMode mode_ = ActionMode::Symplectic2n;
  std::vector<CycMat> generators_;
  std::vector<CycMat> elements_;
  std::string name_;
  Catalog catalog_;
};

// Substitution action w_i -> sum_j rho_ji w_j (a left action on functions);
// rho is the 2n x 2n symplectic matrix of the group element.
Poly act(const CycMat& rho2n, const Poly& f);
RatFn act(const CycMat& rho2n, const RatFn& f);
Poly act(const GroupAction& action, std::size_t generator, const Poly& f);
RatFn act(const GroupAction& action, std::size_t generator, const RatFn& f);

// True iff the matrix preserves the canonical symplectic form.
bool preserves_symplectic_form(const CycMat& rho2n);

// Invariance under every generator (generators generate the group).
bool is_invariant(const RatFn& f, const GroupAction& action);
bool is_invariant(const Poly& f, const GroupAction& action);

// Parse a CLI group spec: Sn(n=3), G(m=4,p=2,n=2), BD(n=2), Cyc(m=3),
// wreath(BD(n=2),3).
GroupAction parse_group_spec(const std::string& spec, unsigned bound = GroupAction::kDefaultBound);

}  // namespace pweyl
