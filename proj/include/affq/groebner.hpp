#pragma once

#include <optional>
#include <vector>

#include "affq/poly.hpp"

namespace affq {

// Reduced Groebner basis: monic, autoreduced, sorted ascending by leading
// monomial.  Unique for a given ideal and order, so basis equality is a
// meaningful test.
struct GB {
  MonoOrder order;
  std::vector<Poly> basis;

  bool contains_one() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
};

// Fully reduced normal form (every term reduced, not just the lead).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonoOrder& ord,
                 Budget& bud);
inline Poly normal_form(const Poly& f, const GB& gb, Budget& bud) {
  return normal_form(f, gb.basis, gb.order, bud);
}

// f = sum quot[i] * basis[i] + rem, with rem fully reduced.
struct DivisionResult {
  Poly rem;
  std::vector<Poly> quot;
};
DivisionResult divide(const Poly& f, const std::vector<Poly>& basis, const MonoOrder& ord,
                      Budget& bud);

GB buchberger(const std::vector<Poly>& gens, MonoOrder ord, Budget bud);

// Criteria-free variant kept as a cross-check oracle for the pair filters.
GB buchberger_naive(const std::vector<Poly>& gens, MonoOrder ord, Budget bud);

// Basis with tracked representations: gb.basis[i] == sum_j rep[i][j] * gens[j]
// exactly (as polynomials, before any quotient reduction).
struct ExtGB {
  GB gb;
  std::vector<std::vector<Poly>> rep;
};
ExtGB buchberger_ext(const std::vector<Poly>& gens, MonoOrder ord, Budget bud);

// Cofactors h with f == sum_j h[j] * gens[j] exactly, when f lies in the
// ideal; nullopt when it does not.
std::optional<std::vector<Poly>> member_certificate(const Poly& f,
                                                    const std::vector<Poly>& gens,
                                                    MonoOrder ord, Budget bud);

// Vector-space dimension of k[x]/<basis>; nullopt when infinite.
std::optional<std::uint64_t> staircase_dimension(const GB& gb, Budget& bud);

// All monomials of total degree <= maxdeg not divisible by any basis lead.
std::vector<Mono> standard_monomials_up_to(const GB& gb, std::uint64_t maxdeg,
                                           Budget& bud);

// Same walk with an explicit variable count and lead set (leads may be empty).
std::vector<Mono> monomials_below(std::size_t nvars, const std::vector<Mono>& leads,
                                  std::uint64_t maxdeg, Budget& bud);

}  // namespace affq
