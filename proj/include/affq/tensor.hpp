#pragma once

#include "affq/ringmap.hpp"

namespace affq {

// Tensor product of presented algebras over the coefficient field (or over a
// common base, via tensor_over).  Variable naming is deterministic: original
// names are kept when globally unique across the factors, otherwise every
// variable of leg i is renamed "<name>_<i+1>".
struct TensorAlgebra {
  PresentedAlgebra alg;
  std::vector<RingMap> leg;  // inclusion of each factor
  // alg variable index -> (leg index, variable index within that leg)
  std::vector<std::pair<std::size_t, std::size_t>> origin;
};

TensorAlgebra tensor(const std::vector<PresentedAlgebra>& factors, Budget bud = {});

// Tensor over a base ring: all structural maps share the same source, and the
// product carries the identifications leg_i(s_i(u)) == leg_j(s_j(u)) for every
// base variable u.
TensorAlgebra tensor_over(const std::vector<RingMap>& structural, Budget bud = {});

// Map out of a tensor product, one map per leg (all with the same target).
RingMap map_from_tensor(const TensorAlgebra& t, const std::vector<RingMap>& legmaps,
                        Budget bud = {});

// Widen a polynomial to a ring with more variables (same leading positions).
Poly widened(const Poly& p, std::size_t newn);
// Relocate variables: variable i goes to position pos[i] in a ring with newn vars.
Poly remapped(const Poly& p, std::size_t newn, const std::vector<std::size_t>& pos);

// base with extra variables appended and extra relations adjoined (the extra
// relations live in the widened ring).
PresentedAlgebra extended(const PresentedAlgebra& base,
                          const std::vector<std::string>& newvars,
                          const std::vector<Poly>& extra_rels);

}  // namespace affq
