#pragma once

#include "affq/abgrp.hpp"
#include "affq/flf.hpp"
#include "affq/tensor.hpp"

namespace affq {

// A commutative Hopf algebra: carrier with comultiplication into its tensor
// square, counit into the scalars, and antipode.  The constructors below run
// the axiom suite, so holding one of these is a certificate.
struct HopfAlgebraData {
  PresentedAlgebra carrier;
  TensorAlgebra square;  // carrier tensor carrier
  RingMap comul;         // carrier -> square.alg
  RingMap counit;        // carrier -> scalars
  RingMap antipode;      // carrier -> carrier
};

// Coassociativity, both counit laws, and both antipode laws, checked as exact
// equalities of generator images.  Throws invariant_error on failure.
void verify_hopf_axioms(const HopfAlgebraData& h, Budget bud = {});

// A finite group given by its multiplication table over indices 0..n-1,
// together with the base field for the associated constant group scheme.
class ConstantGroupScheme {
 public:
  static ConstantGroupScheme make(CoeffField f,
                                  std::vector<std::vector<std::size_t>> table);
  static ConstantGroupScheme cyclic(CoeffField f, std::size_t n);

  const CoeffField& field() const { return f_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return id_; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }

 private:
  CoeffField f_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t id_ = 0;
  std::vector<std::size_t> inv_;
};

// D(M): the diagonalizable group scheme with character group M.
struct DiagonalizableGroupScheme {
  CoeffField field;
  FgAbGroup m;
};

// Group algebra k[M] presented with one generator per canonical generator of
// M (invertible for the free ones, u^n = 1 for torsion), plus the index of
// the presentation variable carrying each generator.
struct DiagCarrier {
  PresentedAlgebra alg;
  std::vector<std::size_t> genvar;
};
DiagCarrier diag_carrier(const DiagonalizableGroupScheme& d);

// The monomial of character e in k[M] (negative free exponents go through the
// companion variables, torsion exponents are reduced).
Poly character_monomial(const DiagonalizableGroupScheme& d, const DiagCarrier& c,
                        const FgAbGroup::El& e);

// Product algebra k^|G| with the idempotent basis; the a-th idempotent is
// sent to the sum of e_b tensor e_c over all factorizations bc = a.
HopfAlgebraData constant_group_algebra(const ConstantGroupScheme& g, Budget bud = {});

// Group algebra k[M] with grouplike comultiplication on every generator.
HopfAlgebraData diag_group_algebra(const DiagonalizableGroupScheme& d, Budget bud = {});

// |M| for finite M, cross-checked against the vector-space dimension of the
// carrier (the two are computed independently).
std::uint64_t diag_degree(const DiagonalizableGroupScheme& d, Budget bud = {});

// D(N)/D(M) along a surjection u: N ->> M of character groups: the quotient
// is D(ker u), included into D(N) at carrier level as the span of the
// characters in ker u.
struct DiagQuotient {
  DiagonalizableGroupScheme group;  // D(ker u)
  GroupHom char_incl;               // ker u -> N
  RingMap carrier_incl;             // k[ker u] -> k[N]
};
DiagQuotient diag_quotient(const DiagonalizableGroupScheme& dn, const GroupHom& u,
                           Budget bud = {});

// Exactness evidence for one of the classical sequences: the kernel computed
// on the given algebra, and surjectivity witnessed by an explicit cover that
// is certifiably faithfully flat (free of positive rank).
struct SequenceReport {
  std::string kernel_desc;
  std::vector<std::string> kernel_elements;  // enumerated when feasible
  PresentedAlgebra cover;
  FiniteFreeAlgebra cover_module;  // freeness certificate for the cover
  Poly witness;                    // preimage section inside the cover
  std::size_t cover_rank = 0;
  bool etale = false;
  bool witness_ok = false;
  std::optional<Poly> root_in_base;  // set when the section already lifts
};

// Kummer: cover base[T]/(T^n - xi) with T as the n-th root of the unit xi;
// kernel = solutions of x^n = 1 in the base when enumerable.
SequenceReport kummer_check(const PresentedAlgebra& base, const Poly& xi,
                            std::uint64_t n, Budget bud = {});

// Artin-Schreier over F_p: cover base[T]/(T^p - T - a); kernel = fixed space
// of Frobenius on a finite-dimensional base.
SequenceReport artin_schreier_check(const PresentedAlgebra& base, const Poly& a,
                                    Budget bud = {});

// F_p-basis of {x : x^p = 0} in a finite-dimensional algebra over F_p.
std::vector<Poly> alphap_kernel(const PresentedAlgebra& alg, Budget bud = {});

// Every element of a finite-dimensional algebra over a prime field, in normal
// form; nullopt when the field is infinite or the dimension is, and also when
// the element count would exceed cap.
std::optional<std::vector<Poly>> all_elements(const PresentedAlgebra& a,
                                              std::uint64_t cap = 1'000'000,
                                              Budget bud = {});

}  // namespace affq
