#pragma once

#include <string>
#include <vector>

#include "pweyl/cyclotomic.hpp"

namespace pweyl {

// Small dense matrix over the cyclotomic field; dimensions stay tiny
// (group elements and Jacobian evaluations), so plain Gauss is exact and fast.
class CycMat {
 public:
  CycMat() : n_(0) {}
  explicit CycMat(unsigned n) : n_(n), a_(std::size_t{n} * n, Cyc(0)) {}

  static CycMat identity(unsigned n);
  static CycMat from_rows(const std::vector<std::vector<Cyc>>& rows);

  unsigned dim() const { return n_; }
  Cyc& at(unsigned i, unsigned j) { return a_[std::size_t{i} * n_ + j]; }
  const Cyc& at(unsigned i, unsigned j) const { return a_[std::size_t{i} * n_ + j]; }

  CycMat operator*(const CycMat& o) const;
  CycMat transpose() const;
  CycMat inverse() const;  // throws division_by_zero when singular
  Cyc det() const;
  bool is_invertible() const { return !det().is_zero(); }

  bool operator==(const CycMat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const CycMat& o) const { return !(*this == o); }

  // Canonical serialization, usable as a closure-set key.
  std::string key() const;
  std::string to_string() const;

 private:
  unsigned n_;
  std::vector<Cyc> a_;
};

}  // namespace pweyl
