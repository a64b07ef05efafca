#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "affq/error.hpp"

namespace affq {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // dense, row-major

ZMat zmat(std::size_t rows, std::size_t cols);
ZMat zmat_identity(std::size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZVec zmat_apply(const ZMat& a, const ZVec& x);

// m = U * D * V with U, V unimodular and D diagonal, diagonal entries
// nonnegative with d_1 | d_2 | ... (ones first, zeros last).  The inverses
// satisfy Uinv * m * Vinv = D.
struct SmithForm {
  ZMat U, Uinv, D, V, Vinv;
  std::vector<mpz_class> diag() const;
};
SmithForm smith_normal_form(const ZMat& m);

// One integer solution of A x = b, or nullopt.
std::optional<ZVec> int_solve(const ZMat& a, const ZVec& b);
// Basis of the integer kernel lattice {x : A x = 0}, as columns.
std::vector<ZVec> int_kernel(const ZMat& a);

// Finitely generated abelian group in canonical form: Z^free_rank plus cyclic
// factors of orders n_1 | n_2 | ..., each at least 2.  Elements are integer
// coordinate vectors (free coordinates first), torsion coordinates reduced to
// [0, n_j).
class FgAbGroup {
 public:
  using El = ZVec;

  FgAbGroup() = default;  // trivial group
  static FgAbGroup make(std::size_t free_rank, std::vector<mpz_class> torsion);
  static FgAbGroup trivial() { return {}; }
  // Normalization of an arbitrary finite-orders presentation (0 = infinite
  // order).  Second component: matrix taking original-generator coordinates
  // to canonical coordinates.
  static std::pair<FgAbGroup, ZMat> from_orders(const std::vector<mpz_class>& orders);
  // Quotient of Z^rank by the column lattice of rels; second component maps
  // ambient coordinates to canonical coordinates.
  static std::pair<FgAbGroup, ZMat> cokernel(std::size_t rank, const ZMat& rels);

  std::size_t free_rank() const { return free_; }
  const std::vector<mpz_class>& torsion() const { return tors_; }
  std::size_t ngens() const { return free_ + tors_.size(); }
  bool is_trivial() const { return ngens() == 0; }
  std::optional<mpz_class> order() const;  // nullopt when infinite

  El zero() const { return El(ngens(), 0); }
  El gen(std::size_t i) const;
  El reduce(El e) const;
  El add(const El& a, const El& b) const;
  El sub(const El& a, const El& b) const;
  El neg(const El& a) const;
  El scale(const mpz_class& k, const El& a) const;
  bool is_zero(const El& a) const;
  // additive order of an element (nullopt when infinite)
  std::optional<mpz_class> element_order(const El& a) const;

  // all elements, in mixed-radix enumeration order; requires a finite group
  std::vector<El> elements() const;

  bool operator==(const FgAbGroup& o) const {
    return free_ == o.free_ && tors_ == o.tors_;
  }

  std::string str() const;                     // "Z^2 + Z/2 + Z/4", "0"
  static FgAbGroup parse(const std::string&);  // strict: canonical form only
  std::string el_str(const El& e) const;       // "(1, 0, 3)"

 private:
  std::size_t free_ = 0;
  std::vector<mpz_class> tors_;
};

// Homomorphism given by an integer matrix: column j is the image of the j-th
// canonical generator of src in dst coordinates.  Construction verifies that
// torsion is respected.
class GroupHom {
 public:
  GroupHom() = default;
  static GroupHom make(FgAbGroup src, FgAbGroup dst, ZMat mat);
  static GroupHom identity(const FgAbGroup& g);
  static GroupHom zero(FgAbGroup src, FgAbGroup dst);

  const FgAbGroup& source() const { return src_; }
  const FgAbGroup& target() const { return dst_; }
  const ZMat& matrix() const { return mat_; }

  FgAbGroup::El apply(const FgAbGroup::El& e) const;
  GroupHom after(const GroupHom& g) const;  // this . g
  bool is_zero_map() const;

 private:
  FgAbGroup src_, dst_;
  ZMat mat_;
};

// Kernel subgroup in canonical form together with its inclusion.
struct KernelResult {
  FgAbGroup group;
  GroupHom incl;
};
KernelResult kernel(const GroupHom& h);

// Membership predicate for the subgroup generated by a list of elements.
class SubgroupMembership {
 public:
  SubgroupMembership(FgAbGroup g, std::vector<FgAbGroup::El> gens);
  const FgAbGroup& group() const { return g_; }
  const std::vector<FgAbGroup::El>& gens() const { return gens_; }
  bool contains(const FgAbGroup::El& e) const;

 private:
  FgAbGroup g_;
  std::vector<FgAbGroup::El> gens_;
  ZMat sys_;  // [generator columns | relation lattice of g]
};

}  // namespace affq
