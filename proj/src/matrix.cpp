#include "pweyl/matrix.hpp"

#include <sstream>

#include "pweyl/errors.hpp"

namespace pweyl {

CycMat CycMat::identity(unsigned n) {
  CycMat m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
  return m;
}

CycMat CycMat::from_rows(const std::vector<std::vector<Cyc>>& rows) {
  CycMat m(static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.n_; ++i) {
    if (rows[i].size() != m.n_) throw input_error("matrix rows must be square");
    for (unsigned j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (n_ != o.n_) throw input_error("matrix dimension mismatch");
  CycMat r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const Cyc& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) {
        const Cyc& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += aik * b;
      }
    }
  return r;
}

CycMat CycMat::transpose() const {
  CycMat r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Cyc CycMat::det() const {
  CycMat m = *this;
  Cyc d(1);
  for (unsigned c = 0; c < n_; ++c) {
    unsigned p = c;
    while (p < n_ && m.at(p, c).is_zero()) ++p;
    if (p == n_) return Cyc(0);
    if (p != c) {
      for (unsigned j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Cyc inv = m.at(c, c).inverse();
    for (unsigned r = c + 1; r < n_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Cyc f = m.at(r, c) * inv;
      for (unsigned j = c; j < n_; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

CycMat CycMat::inverse() const {
  CycMat m = *this;
  CycMat inv = identity(n_);
  for (unsigned c = 0; c < n_; ++c) {
    unsigned p = c;
    while (p < n_ && m.at(p, c).is_zero()) ++p;
    if (p == n_) throw division_by_zero("matrix is singular");
    if (p != c)
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Cyc f = m.at(c, c).inverse();
    for (unsigned j = 0; j < n_; ++j) {
      m.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      Cyc g = m.at(r, c);
      for (unsigned j = 0; j < n_; ++j) {
        m.at(r, j) -= g * m.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::string CycMat::key() const {
  std::ostringstream os;
  os << n_ << ";";
  for (const auto& c : a_) os << c.to_string() << ",";
  return os.str();
}

std::string CycMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < n_; ++i) {
    os << "[";
    for (unsigned j = 0; j < n_; ++j) {
      os << at(i, j).to_string();
      if (j + 1 < n_) os << ", ";
    }
    os << "]";
    if (i + 1 < n_) os << ", ";
  }
  os << "]";
  return os.str();
}

}  // namespace pweyl
