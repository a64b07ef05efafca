#include "affq/polymat.hpp"

#include <sstream>

namespace affq {

PolyMat::PolyMat(PresentedAlgebra a, std::size_t rows, std::size_t cols)
    : a_(std::move(a)), rows_(rows), cols_(cols), e_(rows * cols, a_.zero()) {}

PolyMat PolyMat::identity(const PresentedAlgebra& a, std::size_t n) {
  PolyMat m(a, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = a.one();
  return m;
}

PolyMat PolyMat::mul(const PolyMat& o, Budget bud) const {
  if (cols_ != o.rows_) throw invariant_error("matrix product shape mismatch");
  PolyMat r(a_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Poly s = a_.zero();
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = a_.nf(s, bud);
    }
  return r;
}

PolyMat PolyMat::add(const PolyMat& o, Budget bud) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix sum shape mismatch");
  PolyMat r(a_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = a_.nf(e_[i] + o.e_[i], bud);
  return r;
}

PolyMat PolyMat::sub(const PolyMat& o, Budget bud) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix sum shape mismatch");
  PolyMat r(a_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = a_.nf(e_[i] - o.e_[i], bud);
  return r;
}

PolyMat PolyMat::transpose() const {
  PolyMat r(a_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool PolyMat::is_zero() const {
  for (auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMat::operator==(const PolyMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Poly PolyMat::trace(Budget bud) const {
  if (rows_ != cols_) throw invariant_error("trace of a non-square matrix");
  Poly s = a_.zero();
  for (std::size_t i = 0; i < rows_; ++i) s = s + at(i, i);
  return a_.nf(s, bud);
}

std::vector<Poly> PolyMat::charpoly(Budget bud) const {
  if (rows_ != cols_) throw invariant_error("charpoly of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return {a_.one()};
  // Berkowitz: grow one principal minor at a time.  V holds the coefficient
  // vector of the r x r leading block; the Toeplitz factor built from
  //   c = (1, -a_rr, -R S, -R M S, -R M^2 S, ...)
  // lifts it to the (r+1) x (r+1) block.
  std::vector<Poly> V{a_.one(), a_.nf(-at(0, 0), bud)};
  for (std::size_t r = 2; r <= n; ++r) {
    std::vector<Poly> c(r + 1, a_.zero());
    c[0] = a_.one();
    c[1] = a_.nf(-at(r - 1, r - 1), bud);
    std::vector<Poly> S(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) S[i] = at(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      Poly dot = a_.zero();
      for (std::size_t i = 0; i < r - 1; ++i) dot = dot + at(r - 1, i) * S[i];
      c[k] = a_.nf(-dot, bud);
      if (k == r) break;
      std::vector<Poly> S2(r - 1, a_.zero());
      for (std::size_t i = 0; i < r - 1; ++i) {
        Poly s = a_.zero();
        for (std::size_t j = 0; j < r - 1; ++j) s = s + at(i, j) * S[j];
        S2[i] = a_.nf(s, bud);
      }
      S = std::move(S2);
    }
    std::vector<Poly> W(r + 1, a_.zero());
    for (std::size_t i = 0; i <= r; ++i) {
      Poly s = a_.zero();
      for (std::size_t j = 0; j < V.size(); ++j)
        if (i >= j && i - j <= r) s = s + c[i - j] * V[j];
      W[i] = a_.nf(s, bud);
    }
    V = std::move(W);
  }
  return V;
}

Poly PolyMat::det(Budget bud) const {
  std::vector<Poly> cp = charpoly(bud);
  Poly d = cp.back();
  if (rows_ % 2) d = -d;
  return a_.nf(d, bud);
}

PolyMat PolyMat::mapped(const RingMap& m, Budget bud) const {
  if (!m.source().same(a_)) throw invariant_error("matrix entries not in map source");
  PolyMat r(m.target(), rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = m.apply(e_[i], bud);
  return r;
}

std::string PolyMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << a_.str(at(i, j));
    os << ']';
  }
  return os.str();
}

}  // namespace affq
