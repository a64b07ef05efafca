#include "affq/jacobian.hpp"

#include "affq/tensor.hpp"

namespace affq {

EtaleCheck jacobian_etale_check(const PresentedAlgebra& base,
                                const std::vector<std::string>& newvars,
                                const std::vector<std::string>& relation_texts,
                                Budget bud) {
  // parse the relations in the widened ring, then build the extension
  PresentedAlgebra wide = extended(base, newvars, {});
  std::vector<Poly> rels;
  for (auto& t : relation_texts) rels.push_back(wide.parse(t));
  return jacobian_etale_check_rels(base, newvars, rels, bud);
}

EtaleCheck jacobian_etale_check_rels(const PresentedAlgebra& base,
                                     const std::vector<std::string>& newvars,
                                     const std::vector<Poly>& relations, Budget bud) {
  if (newvars.size() != relations.size())
    throw input_error("need exactly one relation per adjoined variable");
  EtaleCheck out;
  out.ext = extended(base, newvars, relations);
  std::size_t n = newvars.size(), off = base.nvars();
  PolyMat J(out.ext, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      J.at(i, j) = out.ext.nf(relations[i].derivative(off + j), bud);
  out.jac = J.det(bud);
  out.jac_inverse = out.ext.unit_inverse(out.jac, bud);
  out.etale = out.jac_inverse.has_value();
  return out;
}

}  // namespace affq
