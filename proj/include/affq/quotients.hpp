#pragma once

#include "affq/grading.hpp"
#include "affq/points.hpp"

namespace affq {

// Verdict vocabulary shared by all quotient reports.  "inconclusive" always
// means a bound or budget ran out, never a refutation.
enum class Verdict { pass, fail, inconclusive };
const char* verdict_str(Verdict v);

// One named check with its outcome and a human-readable witness.
struct Certificate {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

bool all_passed(const std::vector<Certificate>& cs);
// fail dominates, then inconclusive; pass only when everything passed
Verdict combined_verdict(const std::vector<Certificate>& cs);

// A finite constant group acting on a presented algebra through one
// automorphism per group element.  Construction verifies the identity element
// acts as the identity and that composition matches the multiplication table
// (rho(g).after(rho(h)) == rho(g*h) on generators), so holding a
// ConstantAction certifies the action axioms.
class ConstantAction {
 public:
  static ConstantAction make(ConstantGroupScheme grp, PresentedAlgebra a,
                             std::vector<RingMap> rho, Budget bud = {});
  // Z/n generated by one automorphism; rejects generators whose n-th power is
  // not the identity.
  static ConstantAction cyclic(const PresentedAlgebra& a, std::size_t n,
                               const RingMap& gen, Budget bud = {});

  const ConstantGroupScheme& group() const { return grp_; }
  const PresentedAlgebra& algebra() const { return a_; }
  const RingMap& rho(std::size_t g) const { return rho_[g]; }

 private:
  ConstantGroupScheme grp_;
  PresentedAlgebra a_;
  std::vector<RingMap> rho_;
};

// Freeness test for a constant action: the action is free iff for every
// non-identity g the ideal generated by { v - rho_g(v) : v generator } is the
// unit ideal (no geometric point is fixed by g).  On failure the first
// offending element and its fixed-locus ideal generators are reported.
struct ConstantFreenessReport {
  bool free = false;
  std::size_t offending = 0;      // group element index, meaningful when !free
  std::vector<Poly> fixed_ideal;  // generators v - rho_g(v), not normalized
};
ConstantFreenessReport freeness_check_constant(const ConstantAction& act,
                                               Budget bud = {});

// An affine equivalence relation in coordinates: two algebra maps
// delta1, delta2 : A -> C presenting R => X, with C finite free over A
// through delta2 (certified by an explicit basis).  Construction additionally
// verifies that the pair map A (x) A -> C is surjective -- R is a closed
// subscheme of X x X.  A pair map that is not even a ring epimorphism (the
// relation fails injectivity on points) is rejected with a distinct
// diagnostic from a monomorphism that fails closedness.
class EquivalenceRelationAff {
 public:
  static EquivalenceRelationAff make(RingMap d1, RingMap d2,
                                     std::vector<Poly> basis, Budget bud = {});

  const PresentedAlgebra& algebra() const { return d2_.source(); }  // A
  const PresentedAlgebra& total() const { return d2_.target(); }    // C
  const RingMap& d1() const { return d1_; }
  const RingMap& d2() const { return d2_; }
  const FiniteFreeAlgebra& view() const { return view_; }  // C over A via d2
  std::size_t rank() const { return view_.rank(); }

 private:
  RingMap d1_, d2_;
  FiniteFreeAlgebra view_;
};

// The relation of a constant action: C = A (x) k^|G| with delta2 the diagonal
// (structural) map and delta1(x) = sum_g rho_g(x) e_g; the basis is the
// idempotent family e_g in group-index order.  Free actions give genuine
// equivalence relations; a non-free action fails the closed-immersion check
// in the constructor.
EquivalenceRelationAff relation_from_constant_action(const ConstantAction& act,
                                                     Budget bud = {});

// Freeness test for the diagonalizable action of D(M) given by a grading:
// the action is free iff for every canonical generator i of M the ideal
// A_i A contains 1.  Monomial generators are enumerated up to the bound, so a
// non-unit ideal refutes freeness only when the enumeration saturated;
// otherwise the verdict is inconclusive.
struct DiagFreenessReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<DegreeIdeal> ideals;  // one per canonical generator of M
};
DiagFreenessReport freeness_check_diag(const MGrading& g, std::uint64_t bound = 8,
                                       Budget bud = {});

// A computed quotient: the subalgebra B of delta1 = delta2 inside A, with its
// presentation, the chosen generators (ascending), a completeness certificate
// ("complete" | "complete-up-to-bound") for the generator search, and the
// verification checks that ran during the construction.
struct QuotientResult {
  PresentedAlgebra b;
  RingMap inclusion;  // b -> A
  std::vector<Poly> gens;
  std::string certificate;
  std::vector<Certificate> checks;
};

// Quotient of a finite locally free equivalence relation: generators of the
// equalizer of delta1, delta2 are collected from two sources -- coefficients
// of the characteristic polynomials of delta1(m) over A for all monomials m
// up to the bound (these land in the equalizer for every genuine equivalence
// relation), and an exact linear sweep of the degree-<= bound part of the
// equalizer -- then minimized and presented on fresh variables.  A charpoly
// coefficient outside the equalizer means the input was not an equivalence
// relation and raises input_error.
QuotientResult quotient_flf(const EquivalenceRelationAff& r, std::uint64_t bound = 8,
                            Budget bud = {});

// Invariant subalgebra of a constant action computed through the same
// machinery, without the closed-immersion precondition: usable for non-free
// actions, where the result is the ring of invariants but carries no claim
// that it represents a quotient.
QuotientResult constant_invariants(const ConstantAction& act, std::uint64_t bound = 8,
                                   Budget bud = {});

// Independent verification that q presents the quotient of r:
//   equalizer      delta1 == delta2 on every generator of B
//   integral       every generator of A is annihilated by its monic
//                  characteristic polynomial, whose coefficients lie in B
//   free-rank      A is free of rank |R/X| over B, by explicit basis search
//   tensor-square  A (x)_B A -> C (legs delta1, delta2) is an isomorphism,
//                  surjectivity by subalgebra membership, injectivity by a
//                  kernel computation
// The basis search can fail to conclude; that downgrades free-rank (and only
// it) to inconclusive -- A stays certified integral over B.
struct FlfVerification {
  std::vector<Certificate> checks;
  std::vector<Poly> basis;  // filled when free-rank passed
  bool ok() const { return all_passed(checks); }
};
FlfVerification verify_flf_quotient(const EquivalenceRelationAff& r,
                                    const QuotientResult& q, Budget bud = {});

// Quotient by a diagonalizable group action (grading): B is the degree-zero
// subalgebra.  Freeness is checked first and a failing action is rejected
// with input_error (inconclusive freeness raises budget_error) unless
// allow_nonfree is set, in which case the invariant ring is returned without
// torsor certificates.  For free actions the torsor checks are run and
// attached.
QuotientResult quotient_diag(const MGrading& g, std::uint64_t bound = 8,
                             bool allow_nonfree = false, Budget bud = {});

// Torsor certificates for the projection X -> X/D(M) of a graded algebra:
// per canonical generator of M the degree ideal A_i A must contain 1 (with
// the cofactor witness recorded), and the comparison map
// A (x)_B A -> A (x) k[M] is certified surjective by exhibiting an explicit
// preimage of 1 (x) u for every grouplike generator u of k[M] -- cofactors
// for the positive characters, their homogeneous components for the inverse
// characters.
struct TorsorReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Certificate> checks;
};
TorsorReport torsor_check(const MGrading& g, const QuotientResult& q,
                          std::uint64_t bound = 8, Budget bud = {});

// Point-level oracle over F_q: the set {(x, y) : pi(x) = pi(y)} of pairs of
// F_q-points of X computed from the quotient inclusion must equal the image
// of R(F_q) under (p1, p2).  Requires a finite coefficient field with the
// right characteristic.  The second overload runs the same comparison for a
// grading, with R = X x D(M) through the coaction.
bool fiber_square_points_check(const EquivalenceRelationAff& r,
                               const QuotientResult& q, unsigned long qsize,
                               std::uint64_t cap = 2'000'000);
bool fiber_square_points_check(const MGrading& g, const QuotientResult& q,
                               unsigned long qsize, std::uint64_t cap = 2'000'000);

// Bounded search for an isomorphism: generator images are drawn from the
// normal forms of standard monomials of degree <= bound, a two-sided inverse
// is searched the same way, and both composites are verified to be the
// identity on generators.  "not found" is not a proof of non-isomorphism;
// budget exhaustion also reports not found.
struct IsoSearchResult {
  bool found = false;
  RingMap fwd;  // a -> b, set when found
  RingMap bwd;  // b -> a, set when found
};
IsoSearchResult find_isomorphism(const PresentedAlgebra& a, const PresentedAlgebra& b,
                                 std::uint64_t bound = 3, Budget bud = {});

// Worked examples, each returning a self-contained report whose verdict
// aggregates every check that ran.  Entries that exist to demonstrate a
// failure (non-free actions) report verdict fail by design.
struct GalleryOptions {
  std::uint64_t bound = 8;
  std::uint64_t n = 2;  // order parameter for the families that take one
  std::uint64_t point_cap = 2'000'000;
  Budget bud{};
};
struct GalleryReport {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Certificate> checks;
  std::vector<std::string> notes;
};
GalleryReport gallery(const std::string& name, const GalleryOptions& opt = {});
// (name, one-line description) of every entry, in a fixed order
const std::vector<std::pair<std::string, std::string>>& gallery_names();

}  // namespace affq
