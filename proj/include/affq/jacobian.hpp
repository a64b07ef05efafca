#pragma once

#include "affq/polymat.hpp"

namespace affq {

// Standard-smooth extension check: adjoin newvars with one relation each and
// test invertibility of the Jacobian determinant det(d rel_i / d newvar_j) in
// the extension.  etale == true comes with the inverse as a certificate.
struct EtaleCheck {
  PresentedAlgebra ext;     // base with newvars and relations adjoined
  Poly jac;                 // Jacobian determinant, in ext, normal form
  bool etale = false;
  std::optional<Poly> jac_inverse;  // present iff etale
};

EtaleCheck jacobian_etale_check(const PresentedAlgebra& base,
                                const std::vector<std::string>& newvars,
                                const std::vector<std::string>& relation_texts,
                                Budget bud = {});

// Same, with the relations already living in the widened ring (base variables
// first, then newvars).  Separate name: a braced list of string literals can
// match a std::vector<Poly> through the iterator-pair constructor.
EtaleCheck jacobian_etale_check_rels(const PresentedAlgebra& base,
                                     const std::vector<std::string>& newvars,
                                     const std::vector<Poly>& relations,
                                     Budget bud = {});

}  // namespace affq
