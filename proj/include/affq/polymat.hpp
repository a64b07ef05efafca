#pragma once

#include "affq/ringmap.hpp"

namespace affq {

// Matrix with entries in a presented algebra.  Entries are kept in normal
// form; arithmetic re-reduces so growth stays bounded by the staircase.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(PresentedAlgebra a, std::size_t rows, std::size_t cols);
  static PolyMat identity(const PresentedAlgebra& a, std::size_t n);

  const PresentedAlgebra& algebra() const { return a_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  PolyMat mul(const PolyMat& o, Budget bud = {}) const;
  PolyMat add(const PolyMat& o, Budget bud = {}) const;
  PolyMat sub(const PolyMat& o, Budget bud = {}) const;
  PolyMat transpose() const;
  bool is_zero() const;
  bool operator==(const PolyMat& o) const;

  Poly trace(Budget bud = {}) const;
  // Characteristic polynomial of a square matrix by the Berkowitz vector
  // recurrence (division free): coefficients c with
  //   det(lambda*I - M) = sum c[k] * lambda^(n-k),  c[0] = 1.
  std::vector<Poly> charpoly(Budget bud = {}) const;
  Poly det(Budget bud = {}) const;  // (-1)^n * charpoly constant term

  // Entry-wise image under a ring map (result lives in the map's target).
  PolyMat mapped(const RingMap& m, Budget bud = {}) const;

  std::string str() const;

 private:
  PresentedAlgebra a_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

}  // namespace affq
