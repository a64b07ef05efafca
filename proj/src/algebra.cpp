#include "affq/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace affq {

namespace {
bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}
}  // namespace

PresentedAlgebra PresentedAlgebra::make(CoeffField f, std::vector<std::string> names,
                                        std::vector<Poly> relations) {
  std::vector<std::optional<std::size_t>> owners(names.size(), std::nullopt);
  return with_owners(std::move(f), std::move(names), std::move(owners),
                     std::move(relations));
}

PresentedAlgebra PresentedAlgebra::with_owners(
    CoeffField f, std::vector<std::string> names,
    std::vector<std::optional<std::size_t>> owners, std::vector<Poly> relations) {
  std::set<std::string> seen;
  for (auto& n : names) {
    if (!valid_name(n)) throw input_error("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw input_error("duplicate variable name '" + n + "'");
  }
  for (auto& r : relations)
    if (r.nvars() != names.size() || !(r.field() == f))
      throw invariant_error("relation not in the presentation ring");
  if (owners.size() != names.size())
    throw invariant_error("owner list does not match variable list");
  for (std::size_t i = 0; i < owners.size(); ++i)
    if (owners[i] && (*owners[i] >= names.size() || *owners[i] == i))
      throw invariant_error("bad companion owner index");
  PresentedAlgebra a;
  auto im = std::make_shared<Impl>();
  im->field = f;
  im->owner = std::move(owners);
  im->names = std::move(names);
  im->rel = Ideal(std::move(relations));
  a.im_ = std::move(im);
  return a;
}

PresentedAlgebra PresentedAlgebra::localized(const std::vector<std::string>& vars) const {
  std::vector<std::string> names = im_->names;
  std::vector<std::optional<std::size_t>> owner = im_->owner;
  std::size_t oldn = names.size();
  std::vector<std::size_t> owners;
  for (auto& v : vars) {
    std::size_t i = var_index(v);
    if (is_companion(i)) throw input_error("cannot invert a companion variable");
    if (companion_of(i)) throw input_error("variable '" + v + "' already inverted");
    owners.push_back(i);
    names.push_back(v + "_inv");
    owner.push_back(i);
  }
  std::size_t newn = names.size();
  // widen existing relations, then add v * v_inv - 1
  std::vector<Poly> rel;
  for (auto& r : im_->rel.gens()) {
    std::vector<Term> ts;
    for (auto& t : r.terms()) {
      Mono m(newn);
      std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
      m.deg = t.m.deg;
      ts.push_back({std::move(m), t.c});
    }
    rel.push_back(Poly::from_terms(field(), newn, std::move(ts)));
  }
  for (std::size_t k = 0; k < owners.size(); ++k) {
    Poly v = Poly::variable(field(), newn, owners[k]);
    Poly vi = Poly::variable(field(), newn, oldn + k);
    rel.push_back(v * vi - Poly::constant(field(), newn, 1));
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw input_error("companion name collides with an existing variable");

  PresentedAlgebra a;
  auto im = std::make_shared<Impl>();
  im->field = field();
  im->names = std::move(names);
  im->owner = std::move(owner);
  im->rel = Ideal(std::move(rel));
  a.im_ = std::move(im);
  return a;
}

std::vector<std::string> PresentedAlgebra::visible_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (!is_companion(i)) out.push_back(im_->names[i]);
  return out;
}

std::optional<std::size_t> PresentedAlgebra::companion_of(std::size_t owner) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (im_->owner[i] && *im_->owner[i] == owner) return i;
  return std::nullopt;
}

std::size_t PresentedAlgebra::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (im_->names[i] == name) return i;
  throw input_error("unknown variable '" + name + "'");
}

std::string PresentedAlgebra::describe() const {
  std::ostringstream os;
  os << field().str() << '[';
  for (std::size_t i = 0; i < nvars(); ++i) os << (i ? ", " : "") << im_->names[i];
  os << ']';
  if (!im_->rel.gens().empty()) {
    os << "/(";
    bool first = true;
    for (auto& r : im_->rel.gens()) {
      if (!first) os << ", ";
      first = false;
      os << str(r);
    }
    os << ')';
  }
  return os.str();
}

Poly PresentedAlgebra::nf(const Poly& f, Budget bud) const {
  if (im_->rel.gens().empty()) return f;
  const GB& gb = im_->rel.gb(MonoOrder::degrevlex(), bud);
  return normal_form(f, gb, bud);
}

bool PresentedAlgebra::is_unit(const Poly& f, Budget bud) const {
  std::vector<Poly> gens = im_->rel.gens();
  gens.push_back(f);
  return buchberger(gens, MonoOrder::degrevlex(), bud).contains_one();
}

std::optional<Poly> PresentedAlgebra::unit_inverse(const Poly& f, Budget bud) const {
  std::vector<Poly> gens;
  gens.push_back(f);
  for (auto& r : im_->rel.gens()) gens.push_back(r);
  auto cert = member_certificate(one(), gens, MonoOrder::degrevlex(), bud);
  if (!cert) return std::nullopt;
  return nf((*cert)[0], bud);
}

bool PresentedAlgebra::ideal_contains(const std::vector<Poly>& gens, const Poly& f,
                                      Budget bud) const {
  std::vector<Poly> all = gens;
  for (auto& r : im_->rel.gens()) all.push_back(r);
  GB gb = buchberger(all, MonoOrder::degrevlex(), bud);
  return normal_form(f, gb, bud).is_zero();
}

std::optional<std::vector<Poly>> PresentedAlgebra::ideal_certificate(
    const std::vector<Poly>& gens, const Poly& f, Budget bud) const {
  std::vector<Poly> all = gens;
  for (auto& r : im_->rel.gens()) all.push_back(r);
  auto cert = member_certificate(f, all, MonoOrder::degrevlex(), bud);
  if (!cert) return std::nullopt;
  cert->resize(gens.size(), zero());
  return cert;
}

std::optional<std::uint64_t> PresentedAlgebra::dimension(Budget bud) const {
  if (nvars() == 0) return is_zero_algebra(bud) ? 0 : 1;
  if (im_->rel.gens().empty()) return std::nullopt;
  const GB& gb = im_->rel.gb(MonoOrder::degrevlex(), bud);
  return staircase_dimension(gb, bud);
}

std::vector<Mono> PresentedAlgebra::standard_monomials(std::uint64_t maxdeg,
                                                       Budget bud) const {
  std::vector<Mono> leads;
  if (!im_->rel.gens().empty()) {
    const GB& gb = im_->rel.gb(MonoOrder::degrevlex(), bud);
    if (gb.contains_one()) return {};
    for (auto& b : gb.basis) leads.push_back(b.lead(gb.order).m);
  }
  return monomials_below(nvars(), leads, maxdeg, bud);
}

bool PresentedAlgebra::same(const PresentedAlgebra& o) const {
  if (im_ == o.im_) return true;
  if (!(field() == o.field()) || im_->names != o.im_->names ||
      im_->owner != o.im_->owner)
    return false;
  auto key = [](const Ideal& i) {
    std::vector<std::string> ks;
    for (auto& g : i.gens()) ks.push_back(g.key());
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return key(im_->rel) == key(o.im_->rel);
}

}  // namespace affq
