#pragma once

#include "affq/algebra.hpp"

namespace affq {

// Column vector with entries in a presented algebra; the index is the module
// position.
using PolyVec = std::vector<Poly>;

PolyVec vec_zero(const PresentedAlgebra& a, std::size_t positions);
PolyVec vec_unit(const PresentedAlgebra& a, std::size_t positions, std::size_t i);
bool vec_is_zero(const PolyVec& v);

// Groebner basis of a submodule of owner^positions under position-over-term
// order (position 0 strongest, degrevlex within a position).  The owner's
// relation ideal is folded in as h*e_i generators, so normal forms and spans
// are taken over the quotient ring.  Module S-pairs are processed without the
// coprime shortcut: it is unsound at module level.
class ModuleGB {
 public:
  ModuleGB() = default;
  ModuleGB(PresentedAlgebra owner, std::size_t positions, std::vector<PolyVec> gens,
           Budget bud = {});

  const PresentedAlgebra& owner() const { return a_; }
  std::size_t positions() const { return width_; }
  const std::vector<PolyVec>& basis() const { return basis_; }

  PolyVec nf(const PolyVec& v, Budget bud = {}) const;
  bool contains(const PolyVec& v, Budget bud = {}) const;

 private:
  PresentedAlgebra a_;
  std::size_t width_ = 0;
  std::vector<PolyVec> basis_;
};

// Generators of { c in owner^m : sum_j c_j * cols[j] = 0 in owner^positions }
// where m = cols.size(); the syzygies of the columns over the quotient ring.
std::vector<PolyVec> module_kernel(const PresentedAlgebra& owner, std::size_t positions,
                                   const std::vector<PolyVec>& cols, Budget bud = {});

// Same with the target taken modulo span(rels): generators of
// { c : sum_j c_j * cols[j] lies in the submodule generated by rels }.
std::vector<PolyVec> module_kernel_mod(const PresentedAlgebra& owner,
                                       std::size_t positions,
                                       const std::vector<PolyVec>& cols,
                                       const std::vector<PolyVec>& rels,
                                       Budget bud = {});

// Finitely presented module over a presented algebra: owner^gens / span(rels).
// Relation rows are kept with entries in normal form and zero rows dropped.
struct FpModule {
  PresentedAlgebra owner;
  std::size_t gens = 0;
  std::vector<PolyVec> rels;
};

FpModule fp_module(PresentedAlgebra owner, std::size_t gens,
                   std::vector<PolyVec> rels, Budget bud = {});

// Is the map src -> dst sending generator j to cols[j] a well-defined
// isomorphism of modules over the shared owner?
bool fp_module_iso(const FpModule& src, const FpModule& dst,
                   const std::vector<PolyVec>& cols, Budget bud = {});

}  // namespace affq
