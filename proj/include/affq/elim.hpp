#pragma once

#include "affq/tensor.hpp"

namespace affq {

// Kernel of an algebra map as an ideal of the source presentation ring,
// returned as the reduced degrevlex basis (canonical generators).  The kernel
// always contains the source relations.
std::vector<Poly> kernel_of_map(const RingMap& m, Budget bud = {});

// Membership in the subalgebra generated by gens inside a presented algebra,
// with certificates: express() returns a polynomial in one variable per
// generator (tag t_i stands for gens[i]) that evaluates back to f.
class SubalgebraTester {
 public:
  SubalgebraTester(PresentedAlgebra a, std::vector<Poly> gens, Budget bud = {});

  const PresentedAlgebra& algebra() const { return a_; }
  const std::vector<Poly>& gens() const { return gens_; }

  std::optional<Poly> express(const Poly& f, Budget bud = {}) const;
  bool contains(const Poly& f, Budget bud = {}) const {
    return express(f, bud).has_value();
  }
  // Substitute the generators back into a tag expression (lands in algebra()).
  Poly evaluate(const Poly& expr, Budget bud = {}) const;

 private:
  PresentedAlgebra a_;
  std::vector<Poly> gens_;
  GB gb_;  // combined ring [algebra vars | tags], elimination order
};

// Presentation of the subalgebra generated by gens: relations are the kernel
// of names[i] |-> gens[i], and incl embeds the presentation into the ambient
// algebra.
struct SubalgebraPresentation {
  PresentedAlgebra alg;
  RingMap incl;
};
SubalgebraPresentation present_subalgebra(const PresentedAlgebra& a,
                                          const std::vector<Poly>& gens,
                                          const std::vector<std::string>& names,
                                          Budget bud = {});

}  // namespace affq
