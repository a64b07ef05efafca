#include "affq/tensor.hpp"

#include <set>

namespace affq {

Poly widened(const Poly& p, std::size_t newn) {
  if (newn < p.nvars()) throw invariant_error("widened: fewer variables than before");
  std::vector<std::size_t> pos(p.nvars());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  return remapped(p, newn, pos);
}

Poly remapped(const Poly& p, std::size_t newn, const std::vector<std::size_t>& pos) {
  if (pos.size() != p.nvars()) throw invariant_error("remapped: position list mismatch");
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (auto& t : p.terms()) {
    Mono m(newn);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (pos[i] >= newn) throw invariant_error("remapped: position out of range");
      m.e[pos[i]] = t.m.e[i];
    }
    m.deg = t.m.deg;
    ts.push_back({std::move(m), t.c});
  }
  return Poly::from_terms(p.field(), newn, std::move(ts));
}

PresentedAlgebra extended(const PresentedAlgebra& base,
                          const std::vector<std::string>& newvars,
                          const std::vector<Poly>& extra_rels) {
  std::vector<std::string> names = base.names();
  names.insert(names.end(), newvars.begin(), newvars.end());
  std::vector<std::optional<std::size_t>> owners;
  for (std::size_t i = 0; i < base.nvars(); ++i) owners.push_back(base.companion_owner(i));
  owners.resize(names.size(), std::nullopt);
  std::vector<Poly> rels;
  for (auto& r : base.relations().gens()) rels.push_back(widened(r, names.size()));
  for (auto& r : extra_rels) {
    if (r.nvars() != names.size())
      throw invariant_error("extended: relation not in the widened ring");
    rels.push_back(r);
  }
  return PresentedAlgebra::with_owners(base.field(), std::move(names), std::move(owners),
                                       std::move(rels));
}

namespace {

TensorAlgebra tensor_build(const std::vector<PresentedAlgebra>& factors,
                           const std::vector<RingMap>* structural, Budget bud) {
  if (factors.empty()) throw input_error("tensor of no factors");
  const CoeffField& f = factors[0].field();
  for (auto& a : factors)
    if (!(a.field() == f)) throw input_error("tensor factors over different fields");

  // Keep original names when globally unique, else suffix every variable with
  // its leg number.
  bool clash = false;
  {
    std::set<std::string> seen;
    for (auto& a : factors)
      for (auto& n : a.names())
        if (!seen.insert(n).second) clash = true;
  }
  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> owners;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<std::size_t> offset;
  for (std::size_t l = 0; l < factors.size(); ++l) {
    offset.push_back(names.size());
    const auto& a = factors[l];
    for (std::size_t j = 0; j < a.nvars(); ++j) {
      names.push_back(clash ? a.names()[j] + "_" + std::to_string(l + 1) : a.names()[j]);
      auto ow = a.companion_owner(j);
      owners.push_back(ow ? std::optional<std::size_t>(offset[l] + *ow) : std::nullopt);
      origin.emplace_back(l, j);
    }
  }
  std::size_t N = names.size();

  auto lift = [&](const Poly& p, std::size_t l) {
    std::vector<std::size_t> pos(p.nvars());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = offset[l] + i;
    return remapped(p, N, pos);
  };

  std::vector<Poly> rels;
  for (std::size_t l = 0; l < factors.size(); ++l)
    for (auto& r : factors[l].relations().gens()) rels.push_back(lift(r, l));
  if (structural) {
    const auto& s = *structural;
    const PresentedAlgebra& base = s[0].source();
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!s[i].source().same(base))
        throw input_error("structural maps with different sources");
    // identify the two images of every base variable (companions included,
    // so inverses are glued as well)
    for (std::size_t u = 0; u < base.nvars(); ++u)
      for (std::size_t i = 1; i < s.size(); ++i)
        rels.push_back(lift(s[0].images()[u], 0) - lift(s[i].images()[u], i));
  }

  TensorAlgebra t;
  t.alg = PresentedAlgebra::with_owners(f, std::move(names), std::move(owners),
                                        std::move(rels));
  t.origin = std::move(origin);
  for (std::size_t l = 0; l < factors.size(); ++l) {
    std::vector<Poly> img;
    for (std::size_t j = 0; j < factors[l].nvars(); ++j)
      img.push_back(t.alg.var(offset[l] + j));
    t.leg.push_back(RingMap::make(factors[l], t.alg, std::move(img), bud));
  }
  return t;
}

}  // namespace

TensorAlgebra tensor(const std::vector<PresentedAlgebra>& factors, Budget bud) {
  return tensor_build(factors, nullptr, bud);
}

TensorAlgebra tensor_over(const std::vector<RingMap>& structural, Budget bud) {
  if (structural.empty()) throw input_error("tensor of no factors");
  std::vector<PresentedAlgebra> factors;
  for (auto& s : structural) factors.push_back(s.target());
  return tensor_build(factors, &structural, bud);
}

RingMap map_from_tensor(const TensorAlgebra& t, const std::vector<RingMap>& legmaps,
                        Budget bud) {
  if (legmaps.size() != t.leg.size())
    throw input_error("one map per tensor leg required");
  for (std::size_t l = 0; l < legmaps.size(); ++l) {
    if (!legmaps[l].source().same(t.leg[l].source()))
      throw input_error("leg map source does not match tensor factor");
    if (l && !legmaps[l].target().same(legmaps[0].target()))
      throw input_error("leg maps with different targets");
  }
  std::vector<Poly> img;
  for (auto [l, j] : t.origin) img.push_back(legmaps[l].images()[j]);
  // verification inside make certifies compatibility over the base (the
  // identification relations must map to zero)
  return RingMap::make(t.alg, legmaps[0].target(), std::move(img), bud);
}

}  // namespace affq
