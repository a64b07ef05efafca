#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "affq/polymat.hpp"

namespace affq {

// An algebra presented as finite free module over a base: total = ⊕ base·e_i.
// Construction certifies spanning exactly (the unit, every generator of the
// total ring, and every basis product expand in the basis) and uniqueness of
// every expansion it ever computes (the homogeneous system has trivial
// kernel); a nontrivial dependency among the e_i is reported as basis-not-free
// the moment it is seen.
class FiniteFreeAlgebra {
 public:
  FiniteFreeAlgebra() = default;

  static FiniteFreeAlgebra make(RingMap structural, std::vector<Poly> basis,
                                Budget bud = {});

  const PresentedAlgebra& base() const { return im_->str.source(); }
  const PresentedAlgebra& total() const { return im_->str.target(); }
  const RingMap& structural() const { return im_->str; }
  const std::vector<Poly>& basis() const { return im_->basis; }
  std::size_t rank() const { return im_->basis.size(); }

  // coefficients c over the base with  b = sum c_i * e_i  in the total algebra
  std::vector<Poly> expand(const Poly& b, Budget bud = {}) const;
  // lift a coefficient vector back: sum c_i * e_i, reduced in total
  Poly assemble(const std::vector<Poly>& c, Budget bud = {}) const;

  // S[i][j] = expand(e_i * e_j), computed once and cached
  const std::vector<std::vector<std::vector<Poly>>>& structure_constants(
      Budget bud = {}) const;

  // matrix of multiplication by b in the basis, over the base
  PolyMat mult_matrix(const Poly& b, Budget bud = {}) const;
  // characteristic polynomial coefficients over the base, leading first
  // (c[0] = 1); it annihilates b in the total algebra
  std::vector<Poly> charpoly(const Poly& b, Budget bud = {}) const;
  Poly norm(const Poly& b, Budget bud = {}) const;
  Poly trace(const Poly& b, Budget bud = {}) const;

  // (is_unit(b) in total, is_unit(norm b) in base); the two always agree, and
  // disagreement is surfaced as an invariant failure
  std::pair<bool, bool> norm_unit_criterion(const Poly& b, Budget bud = {}) const;

  // Compare { base-points under total-points where b vanishes } with
  // { base-points where norm(b) vanishes } over F_q.
  bool zero_locus_image_check(const Poly& b, unsigned long q,
                              std::uint64_t cap = 2'000'000, Budget bud = {}) const;

 private:
  struct Impl {
    RingMap str;
    std::vector<Poly> basis;
    mutable std::mutex mu;
    // (basis index, base-monomial key) -> normal form of str(mono)*e_i
    mutable std::map<std::pair<std::size_t, std::string>, Poly> wcache;
    mutable std::vector<std::vector<std::vector<Poly>>> sc;  // filled once
  };
  std::shared_ptr<Impl> im_;

  Poly column_vector(std::size_t i, const Mono& mu, Budget& bud) const;
};

}  // namespace affq
