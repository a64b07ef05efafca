#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affq/ideal.hpp"

namespace affq {

// Finitely presented commutative algebra k[x_1..x_n] / I, with optional
// inverted variables.  Inverting v adds a companion variable "v_inv" and the
// relation v*v_inv - 1; companions are real variables internally but are kept
// out of the user-facing variable list.
class PresentedAlgebra {
 public:
  PresentedAlgebra() = default;

  static PresentedAlgebra make(CoeffField f, std::vector<std::string> names,
                               std::vector<Poly> relations);
  // Plumbing for ring surgery (tensor products, variable adjunction): like
  // make, but keeps companion bookkeeping.  owners[i], when set, marks
  // names[i] as the inverse of variable owners[i]; the corresponding
  // v*v_inv - 1 relation must already be among the relations.
  static PresentedAlgebra with_owners(CoeffField f, std::vector<std::string> names,
                                      std::vector<std::optional<std::size_t>> owners,
                                      std::vector<Poly> relations);
  static PresentedAlgebra scalar(CoeffField f) { return make(f, {}, {}); }
  static PresentedAlgebra free(CoeffField f, std::vector<std::string> names) {
    return make(f, std::move(names), {});
  }

  PresentedAlgebra localized(const std::vector<std::string>& vars) const;

  const CoeffField& field() const { return im_->field; }
  std::size_t nvars() const { return im_->names.size(); }
  const std::vector<std::string>& names() const { return im_->names; }
  std::vector<std::string> visible_names() const;
  // For a companion variable, the index of the variable it inverts.
  std::optional<std::size_t> companion_owner(std::size_t i) const { return im_->owner[i]; }
  bool is_companion(std::size_t i) const { return im_->owner[i].has_value(); }
  std::optional<std::size_t> companion_of(std::size_t owner) const;
  const Ideal& relations() const { return im_->rel; }
  std::size_t var_index(const std::string& name) const;

  Poly var(std::size_t i) const { return Poly::variable(field(), nvars(), i); }
  Poly constant(const mpq_class& c) const { return Poly::constant(field(), nvars(), c); }
  Poly zero() const { return Poly::zero(field(), nvars()); }
  Poly one() const { return constant(1); }

  Poly parse(const std::string& text) const {
    return Poly::parse(text, field(), im_->names);
  }
  std::string str(const Poly& p) const { return p.str(im_->names); }
  std::string describe() const;

  Poly nf(const Poly& f, Budget bud = {}) const;
  bool is_zero_algebra(Budget bud = {}) const { return nf(one(), bud).is_zero(); }
  bool is_unit(const Poly& f, Budget bud = {}) const;
  std::optional<Poly> unit_inverse(const Poly& f, Budget bud = {}) const;

  // Membership of f in (gens) + relations; the certificate gives cofactors
  // for the gens part, so f == sum cof[i]*gens[i] modulo the relations.
  bool ideal_contains(const std::vector<Poly>& gens, const Poly& f, Budget bud = {}) const;
  std::optional<std::vector<Poly>> ideal_certificate(const std::vector<Poly>& gens,
                                                     const Poly& f, Budget bud = {}) const;

  // Vector-space dimension over the coefficient field; nullopt when infinite.
  std::optional<std::uint64_t> dimension(Budget bud = {}) const;
  // Monomials below the degrevlex staircase of the relations, degree <= maxdeg.
  std::vector<Mono> standard_monomials(std::uint64_t maxdeg, Budget bud = {}) const;

  bool same(const PresentedAlgebra& o) const;

 private:
  struct Impl {
    CoeffField field;
    std::vector<std::string> names;
    std::vector<std::optional<std::size_t>> owner;
    Ideal rel;
  };
  std::shared_ptr<const Impl> im_;
};

}  // namespace affq
