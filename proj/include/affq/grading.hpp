#pragma once

#include <map>

#include "affq/elim.hpp"
#include "affq/groups.hpp"

namespace affq {

// M-grading of a presented algebra: a character degree per visible generator,
// with inverted companions carrying the negated degree.  This is the affine
// incarnation of an action of the diagonalizable group D(M).  Construction
// verifies that every relation of the presentation is M-homogeneous; a
// non-homogeneous relation is a hard error and is not repaired, because only
// graded quotients carry the action.
class MGrading {
 public:
  MGrading() = default;
  // degrees are given for the visible generators, in visible_names() order.
  static MGrading make(PresentedAlgebra a, FgAbGroup m,
                       std::vector<FgAbGroup::El> degrees, Budget bud = {});

  const PresentedAlgebra& algebra() const { return a_; }
  const FgAbGroup& group() const { return m_; }
  // one entry per presentation variable, companions included
  const std::vector<FgAbGroup::El>& var_degrees() const { return deg_; }

  FgAbGroup::El mono_degree(const Mono& mo) const;
  // every monomial shares one degree (vacuously true for constants)
  bool is_homogeneous(const Poly& f) const;
  // the shared degree (zero for nonzero constants, nullopt when mixed)
  std::optional<FgAbGroup::El> homogeneous_degree(const Poly& f) const;
  bool is_trivial() const;  // every variable sits in degree zero

 private:
  PresentedAlgebra a_;
  FgAbGroup m_;
  std::vector<FgAbGroup::El> deg_;
};

// Splits f into its homogeneous pieces, keyed by reduced degree; the values
// sum back to f.  Zero has no pieces.
std::map<FgAbGroup::El, Poly> homogeneous_components(const MGrading& g, const Poly& f);

// The coaction A -> A (x) k[M] determined by the grading, packaged with the
// tensor square it lands in.  Construction checks the comodule axioms
// ((id (x) comul) . rho = (rho (x) id) . rho and (id (x) counit) . rho = id)
// as exact generator-image equalities, so holding a Coaction is a
// certificate.
struct Coaction {
  MGrading grading;
  DiagonalizableGroupScheme group;
  DiagCarrier carrier;   // k[M]
  TensorAlgebra square;  // algebra (x) k[M]
  RingMap rho;           // algebra -> square.alg
};
Coaction coaction_from_grading(const MGrading& g, Budget bud = {});

// Monomial generators of the ideal A_i A: monomials of group degree i and
// total degree <= bound, minimal under divisibility, in enumeration order.
// `saturated` records that something was found and the last total-degree
// increment contributed no new minimal monomial; it is a bound heuristic,
// not a proof of completeness.  When 1 lies in the ideal these monomials
// generate (presentation relations included), `unit` is set and
// `unit_cofactors` witnesses 1 = sum cof[k]*gens[k] in A.
struct DegreeIdeal {
  FgAbGroup::El degree;
  std::vector<Poly> gens;  // monomials, minimal under divisibility
  bool saturated = false;
  bool unit = false;
  std::vector<Poly> unit_cofactors;
};
DegreeIdeal degree_monomial_ideal(const MGrading& g, const FgAbGroup::El& i,
                                  std::uint64_t bound, Budget bud = {});

// The invariant subalgebra A_0: normal forms of the degree-0 monomials up to
// the bound, greedily minimized (largest in degrevlex dropped first when
// expressible in the rest), presented on fresh variables u1..uk with
// relations the kernel of the generator map.  certificate is "complete" when
// every degree-0 monomial of total degree <= bound + the maximal generator
// degree already lies in the generated subalgebra, "complete-up-to-bound"
// otherwise.
struct DegreeZeroSubalgebra {
  PresentedAlgebra alg;     // presentation on u1..uk
  RingMap incl;             // alg -> A, uk -> gens[k]
  std::vector<Poly> gens;   // chosen generators inside A, ascending degrevlex
  std::string certificate;  // "complete" | "complete-up-to-bound"
};
DegreeZeroSubalgebra degree_zero_subalgebra(const MGrading& g, std::uint64_t bound,
                                            Budget bud = {});

// Finitely presented graded module over a graded algebra: generator degrees
// plus homogeneous relation rows.  Row r is homogeneous of degree d when
// every nonzero entry r[j] is homogeneous of degree d - gen_degrees[j]; the
// row asserts sum_j r[j] e_j = 0.  Homogeneity is verified, mixed rows are a
// hard error.
class GradedModule {
 public:
  static GradedModule make(MGrading g, std::vector<FgAbGroup::El> gen_degrees,
                           std::vector<std::vector<Poly>> relation_rows);

  const MGrading& grading() const { return g_; }
  const std::vector<FgAbGroup::El>& gen_degrees() const { return gdeg_; }
  const std::vector<std::vector<Poly>>& relation_rows() const { return rows_; }

 private:
  MGrading g_;
  std::vector<FgAbGroup::El> gdeg_;
  std::vector<std::vector<Poly>> rows_;
};

// Generating set of the degree-i component as a module over A_0, enumerated
// up to the total-degree bound: coefficient vectors with a single monomial
// entry, one per monomial not already reachable by a degree-0 multiple.
std::vector<std::vector<Poly>> graded_module_component(const GradedModule& m,
                                                       const FgAbGroup::El& i,
                                                       std::uint64_t bound);

}  // namespace affq
