#pragma once

#include "affq/algebra.hpp"

namespace affq {

// Element of the ideal (gens) avoiding every listed maximal ideal, by the
// classical staged construction: a single generator if one works, then sums
// of two, then the general cross-product combination.  Maximality of the
// listed ideals is the caller's contract; properness and pairwise
// comaximality are verified, and the result is re-checked before returning.
Poly prime_avoidance(const PresentedAlgebra& a, const std::vector<Poly>& ideal_gens,
                     const std::vector<std::vector<Poly>>& maximal_ideals,
                     Budget bud = {});

}  // namespace affq
