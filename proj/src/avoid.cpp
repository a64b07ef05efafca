#include "affq/avoid.hpp"

namespace affq {

Poly prime_avoidance(const PresentedAlgebra& a, const std::vector<Poly>& ideal_gens,
                     const std::vector<std::vector<Poly>>& maximal_ideals,
                     Budget bud) {
  const auto& ms = maximal_ideals;
  if (ideal_gens.empty()) throw input_error("avoidance in the zero ideal");
  auto in = [&](const std::vector<Poly>& m, const Poly& f) {
    return a.ideal_contains(m, f, bud);
  };

  for (auto& m : ms) {
    if (in(m, a.one())) throw input_error("listed maximal ideal is the unit ideal");
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      std::vector<Poly> both = ms[i];
      both.insert(both.end(), ms[j].begin(), ms[j].end());
      if (!in(both, a.one()))
        throw input_error("listed maximal ideals are not pairwise comaximal");
    }

  auto misses_all = [&](const Poly& f) {
    for (auto& m : ms)
      if (in(m, f)) return false;
    return true;
  };

  // some generator must leave each maximal ideal, or containment is hopeless
  std::vector<Poly> fi(ms.size(), a.zero());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool found = false;
    for (auto& g : ideal_gens)
      if (!in(ms[i], g)) {
        fi[i] = g;
        found = true;
        break;
      }
    if (!found) throw input_error("the ideal is contained in a listed maximal ideal");
  }

  if (ms.empty()) return a.nf(ideal_gens[0], bud);

  // stage 1: a single generator
  for (auto& g : ideal_gens)
    if (misses_all(g)) return a.nf(g, bud);

  // stage 2: sums of two generators
  for (std::size_t i = 0; i < ideal_gens.size(); ++i)
    for (std::size_t j = i + 1; j < ideal_gens.size(); ++j) {
      Poly s = ideal_gens[i] + ideal_gens[j];
      if (misses_all(s)) return a.nf(s, bud);
    }

  // stage 3: f = sum_i f_i * prod_{j != i} a_ij with f_i in I \ m_i and
  // a_ij in m_j \ m_i; each summand vanishes mod m_j except the j-th, which
  // stays out because m_j is prime
  Poly f = a.zero();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Poly h = fi[i];
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j == i) continue;
      bool found = false;
      for (auto& g : ms[j])
        if (!in(ms[i], g)) {
          h = h * g;
          found = true;
          break;
        }
      if (!found)
        throw input_error("listed maximal ideals are not distinct");
    }
    f = f + h;
  }
  f = a.nf(f, bud);
  if (!misses_all(f) || !a.ideal_contains(ideal_gens, f, bud))
    throw input_error("avoidance construction failed; are the listed ideals maximal?");
  return f;
}

}  // namespace affq
