#pragma once

#include "affq/flf.hpp"
#include "affq/grading.hpp"
#include "affq/modlin.hpp"
#include "affq/tensor.hpp"

namespace affq {

// Ring extension A -> B certified faithfully flat by an explicit finite free
// basis of rank >= 1.  All module computations along the extension are pushed
// down to the base through that basis.
struct RingExtension {
  RingMap structural;          // A -> B
  FiniteFreeAlgebra evidence;  // B = ⊕ A·b_k with b_0 = 1

  const PresentedAlgebra& base() const { return structural.source(); }
  const PresentedAlgebra& cover() const { return structural.target(); }
  std::size_t rank() const { return evidence.rank(); }
};

// Certifies the basis (spanning + freeness) and that basis[0] is the unit.
RingExtension ring_extension(RingMap structural, std::vector<Poly> basis,
                             Budget bud = {});

// B ⊗_A B with its two inclusions, and B ⊗_A B ⊗_A B with three.
TensorAlgebra cover_square(const RingExtension& e, Budget bud = {});
TensorAlgebra cover_cube(const RingExtension& e, Budget bud = {});

// Free view of B ⊗_A B (or the cube) over the base: basis = products of the
// cover basis through the legs, index (s, k) -> s*rank + k.
FiniteFreeAlgebra square_evidence(const RingExtension& e, const TensorAlgebra& sq,
                                  Budget bud = {});

// Descent datum on a finitely presented module M' over the cover.  phi is a
// gens x gens matrix over B ⊗_A B describing M' ⊗_A B -> B ⊗_A M' on
// generators: source scalars enter through leg 0, target scalars through
// leg 1, and column j holds the coordinates of the image of generator j.
// Construction verifies that phi is invertible (inverse supplied or computed
// from the characteristic polynomial) and that phi and its inverse map module
// relations into module relations.
struct DescentDatum {
  RingExtension ext;
  FpModule mod;          // over ext.cover()
  TensorAlgebra square;  // B ⊗_A B
  PolyMat phi, phi_inv;
};

DescentDatum descent_datum(RingExtension ext, FpModule mod, PolyMat phi,
                           Budget bud = {});
DescentDatum descent_datum(RingExtension ext, FpModule mod, PolyMat phi,
                           PolyMat phi_inv, Budget bud = {});

// The canonical datum on M0 ⊗_A B for a module M0 over the base: relations
// are pushed through the structural map and phi is the identity.
DescentDatum canonical_datum(const RingExtension& e, const FpModule& base_module,
                             Budget bud = {});

// Does phi satisfy the cocycle identity over B ⊗_A B ⊗_A B?  With the three
// insertions u01, u02, u12 of the square into the cube, the condition on
// matrices is u02(phi) = u12(phi) · u01(phi), taken modulo the relations of
// B ⊗ B ⊗ M' when the module is not free.
bool cocycle_check(const DescentDatum& d, Budget bud = {});

// Exactness of the Amitsur sequence 0 -> M -> M⊗B ⇉ M⊗B⊗B for a finitely
// presented module over the base: the first map is injective and its image is
// exactly the equalizer of the two insertions.
bool amitsur_exactness(const RingExtension& e, const FpModule& m, Budget bud = {});

struct DescendResult {
  FpModule descended;               // over the base
  std::vector<PolyVec> comparison;  // column j = image in M' of generator j
};

// The descended module: the equalizer of m' -> 1⊗m' and m' -> phi(m'⊗1) as a
// finitely presented module over the base, together with the comparison map
// descended ⊗_A B -> M'.  Refuses (input_error) when the cocycle fails.
DescendResult descend(const DescentDatum& d, Budget bud = {});

// Is the comparison map an isomorphism descended ⊗_A B -> M' of cover modules
// that carries the canonical datum to phi?
bool verify_effectivity(const DescentDatum& d, const DescendResult& r,
                        Budget bud = {});

// Why invariants alone do not descend submodules: k[t] -> k[s] with t = s^n
// carries the Z/n grading deg s = 1, and the degree-zero part of the graded
// module (s) generates only (s^n).  For n >= 2 the inclusion is strict,
// certified by non-membership of s in (s^n).
struct NondescentReport {
  std::size_t n = 0;
  PresentedAlgebra cover;  // k[s]
  Poly ideal_generator;    // s^n, generated by the degree-zero part of (s)
  bool strict = false;     // s not in (s^n)
};

NondescentReport equivariant_nondescent_demo(std::size_t n, Budget bud = {});

}  // namespace affq
