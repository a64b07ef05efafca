#include "affq/grading.hpp"

#include <algorithm>
#include <set>

namespace affq {

namespace {

void monos_rec(std::size_t pos, std::uint32_t rem, std::vector<std::uint32_t>& cur,
               std::vector<Mono>& out, Budget& bud) {
  if (pos + 1 == cur.size()) {
    cur[pos] = rem;
    bud.spend();
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = rem;; --e) {
    cur[pos] = e;
    monos_rec(pos + 1, rem - e, cur, out, bud);
    if (e == 0) break;
  }
}

// All monomials of total degree exactly d; the first variable carries the
// highest power first, so degree-1 monomials come out in variable order.
std::vector<Mono> monos_of_degree(std::size_t nvars, std::uint32_t d, Budget& bud) {
  std::vector<Mono> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  monos_rec(0, d, cur, out, bud);
  return out;
}

// ascending: degrevlex of the lead, then term count, then serialization
bool poly_before(const Poly& x, const Poly& y) {
  int c = MonoOrder::degrevlex().cmp(x.terms()[0].m, y.terms()[0].m);
  if (c) return c < 0;
  if (x.terms().size() != y.terms().size()) return x.terms().size() < y.terms().size();
  return x.key() < y.key();
}

}  // namespace

MGrading MGrading::make(PresentedAlgebra a, FgAbGroup m,
                        std::vector<FgAbGroup::El> degrees, Budget bud) {
  (void)bud;
  std::size_t nvis = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (!a.is_companion(i)) ++nvis;
  if (degrees.size() != nvis)
    throw input_error("grading needs one degree per visible generator");
  MGrading g;
  g.deg_.assign(a.nvars(), m.zero());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.is_companion(i)) continue;
    if (degrees[k].size() != m.ngens())
      throw input_error("degree with the wrong number of coordinates");
    g.deg_[i] = m.reduce(degrees[k]);
    ++k;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (auto own = a.companion_owner(i)) g.deg_[i] = m.neg(g.deg_[*own]);
  g.a_ = std::move(a);
  g.m_ = std::move(m);
  for (const Poly& r : g.a_.relations().gens())
    if (!g.is_homogeneous(r))
      throw input_error("relation " + g.a_.str(r) + " is not homogeneous");
  return g;
}

FgAbGroup::El MGrading::mono_degree(const Mono& mo) const {
  FgAbGroup::El acc = m_.zero();
  for (std::size_t i = 0; i < mo.e.size(); ++i)
    if (mo.e[i]) acc = m_.add(acc, m_.scale(mo.e[i], deg_[i]));
  return acc;
}

std::optional<FgAbGroup::El> MGrading::homogeneous_degree(const Poly& f) const {
  if (f.is_zero()) return m_.zero();
  FgAbGroup::El d = mono_degree(f.terms()[0].m);
  for (std::size_t t = 1; t < f.terms().size(); ++t)
    if (mono_degree(f.terms()[t].m) != d) return std::nullopt;
  return d;
}

bool MGrading::is_homogeneous(const Poly& f) const {
  return homogeneous_degree(f).has_value();
}

bool MGrading::is_trivial() const {
  for (const auto& d : deg_)
    if (!m_.is_zero(d)) return false;
  return true;
}

std::map<FgAbGroup::El, Poly> homogeneous_components(const MGrading& g, const Poly& f) {
  std::map<FgAbGroup::El, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) buckets[g.mono_degree(t.m)].push_back(t);
  std::map<FgAbGroup::El, Poly> out;
  for (auto& [d, ts] : buckets)
    out.emplace(d, Poly::from_terms(f.field(), f.nvars(), std::move(ts)));
  return out;
}

Coaction coaction_from_grading(const MGrading& g, Budget bud) {
  const PresentedAlgebra& a = g.algebra();
  DiagonalizableGroupScheme d{a.field(), g.group()};
  HopfAlgebraData hop = diag_group_algebra(d, bud);
  DiagCarrier car = diag_carrier(d);
  TensorAlgebra sq = tensor({a, car.alg}, bud);

  std::vector<Poly> img;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    Poly chi = sq.leg[1].apply_raw(character_monomial(d, car, g.var_degrees()[i]));
    img.push_back(sq.alg.nf(sq.leg[0].apply_raw(a.var(i)) * chi, bud));
  }
  RingMap rho = RingMap::make(a, sq.alg, std::move(img), bud);

  // coassociativity against the grouplike comultiplication of k[M]
  TensorAlgebra cube = tensor({a, car.alg, car.alg}, bud);
  RingMap s01 = map_from_tensor(sq, {cube.leg[0], cube.leg[1]}, bud);
  RingMap rho_x_id = map_from_tensor(sq, {s01.after(rho, bud), cube.leg[2]}, bud);
  RingMap i12 = map_from_tensor(hop.square, {cube.leg[1], cube.leg[2]}, bud);
  RingMap id_x_com = map_from_tensor(sq, {cube.leg[0], i12.after(hop.comul, bud)}, bud);
  if (id_x_com.after(rho, bud).images() != rho_x_id.after(rho, bud).images())
    throw invariant_error("coaction coassociativity fails");

  // counit law (id (x) eps) . rho = id
  RingMap unit_a = RingMap::make(PresentedAlgebra::scalar(a.field()), a, {}, bud);
  RingMap id_x_eps =
      map_from_tensor(sq, {RingMap::identity(a), unit_a.after(hop.counit, bud)}, bud);
  if (id_x_eps.after(rho, bud).images() != RingMap::identity(a).images())
    throw invariant_error("coaction counit law fails");

  return Coaction{g, std::move(d), std::move(car), std::move(sq), std::move(rho)};
}

DegreeIdeal degree_monomial_ideal(const MGrading& g, const FgAbGroup::El& i,
                                  std::uint64_t bound, Budget bud) {
  if (bound < 1) throw input_error("degree ideal needs bound >= 1");
  if (i.size() != g.group().ngens())
    throw input_error("degree with the wrong number of coordinates");
  const PresentedAlgebra& a = g.algebra();
  DegreeIdeal out;
  out.degree = g.group().reduce(i);
  std::uint64_t last_new = bound + 1;  // sentinel: nothing found yet
  for (std::uint64_t d = 0; d <= bound; ++d) {
    for (const Mono& mo : monos_of_degree(a.nvars(), static_cast<std::uint32_t>(d), bud)) {
      if (g.mono_degree(mo) != out.degree) continue;
      bool covered = false;
      for (const Poly& p : out.gens)
        if (p.terms()[0].m.divides(mo)) {
          covered = true;
          break;
        }
      if (covered) continue;
      out.gens.push_back(Poly::term(a.field(), a.nvars(), mo, 1));
      last_new = d;
    }
  }
  out.saturated = !out.gens.empty() && last_new < bound;
  if (auto cert = a.ideal_certificate(out.gens, a.one(), bud)) {
    out.unit = true;
    out.unit_cofactors = std::move(*cert);
  }
  return out;
}

DegreeZeroSubalgebra degree_zero_subalgebra(const MGrading& g, std::uint64_t bound,
                                            Budget bud) {
  if (bound < 1) throw input_error("subalgebra bound must be >= 1");
  const PresentedAlgebra& a = g.algebra();
  const FgAbGroup::El zero = g.group().zero();

  std::vector<Poly> cands;
  std::set<std::string> seen;
  for (std::uint64_t d = 1; d <= bound; ++d)
    for (const Mono& mo : monos_of_degree(a.nvars(), static_cast<std::uint32_t>(d), bud)) {
      if (g.mono_degree(mo) != zero) continue;
      Poly f = a.nf(Poly::term(a.field(), a.nvars(), mo, 1), bud);
      if (f.is_constant()) continue;
      if (!seen.insert(f.key()).second) continue;
      cands.push_back(std::move(f));
    }
  std::sort(cands.begin(), cands.end(), poly_before);

  // greedy minimization, largest first; a dropped candidate stays dropped
  std::vector<char> alive(cands.size(), 1);
  for (std::size_t idx = cands.size(); idx-- > 0;) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < cands.size(); ++j)
      if (alive[j] && j != idx) others.push_back(cands[j]);
    if (others.empty()) continue;
    if (SubalgebraTester(a, others, bud).contains(cands[idx], bud)) alive[idx] = 0;
  }
  std::vector<Poly> gens;
  std::uint64_t maxg = 0;
  for (std::size_t j = 0; j < cands.size(); ++j)
    if (alive[j]) {
      maxg = std::max(maxg, cands[j].total_degree());
      gens.push_back(cands[j]);
    }

  std::vector<std::string> names;
  for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("u" + std::to_string(k + 1));
  SubalgebraPresentation sp = present_subalgebra(a, gens, names, bud);

  std::string cert = "complete";
  SubalgebraTester tester(a, gens, bud);
  for (std::uint64_t d = 0; d <= bound + maxg && cert == "complete"; ++d)
    for (const Mono& mo : monos_of_degree(a.nvars(), static_cast<std::uint32_t>(d), bud)) {
      if (g.mono_degree(mo) != zero) continue;
      if (!tester.contains(Poly::term(a.field(), a.nvars(), mo, 1), bud)) {
        cert = "complete-up-to-bound";
        break;
      }
    }

  return DegreeZeroSubalgebra{sp.alg, sp.incl, std::move(gens), std::move(cert)};
}

GradedModule GradedModule::make(MGrading g, std::vector<FgAbGroup::El> gen_degrees,
                                std::vector<std::vector<Poly>> relation_rows) {
  const FgAbGroup& m = g.group();
  for (auto& e : gen_degrees) {
    if (e.size() != m.ngens())
      throw input_error("generator degree with the wrong number of coordinates");
    e = m.reduce(e);
  }
  for (const auto& row : relation_rows) {
    if (row.size() != gen_degrees.size())
      throw input_error("relation row length does not match the generators");
    std::optional<FgAbGroup::El> rowdeg;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      if (row[j].nvars() != g.algebra().nvars())
        throw input_error("relation entry in the wrong ring");
      auto hd = g.homogeneous_degree(row[j]);
      if (!hd) throw input_error("relation row is not homogeneous");
      FgAbGroup::El d = m.add(*hd, gen_degrees[j]);
      if (!rowdeg)
        rowdeg = d;
      else if (*rowdeg != d)
        throw input_error("relation row is not homogeneous");
    }
  }
  GradedModule out;
  out.g_ = std::move(g);
  out.gdeg_ = std::move(gen_degrees);
  out.rows_ = std::move(relation_rows);
  return out;
}

std::vector<std::vector<Poly>> graded_module_component(const GradedModule& m,
                                                       const FgAbGroup::El& i,
                                                       std::uint64_t bound) {
  const MGrading& g = m.grading();
  const PresentedAlgebra& a = g.algebra();
  const FgAbGroup& grp = g.group();
  if (i.size() != grp.ngens())
    throw input_error("degree with the wrong number of coordinates");
  FgAbGroup::El want = grp.reduce(i);
  Budget bud;

  // non-constant degree-0 monomials: multiplying by one of these stays in the
  // same component, so any multiple is redundant as a module generator
  std::vector<Mono> zdiv;
  for (std::uint64_t d = 1; d <= bound; ++d)
    for (const Mono& mo : monos_of_degree(a.nvars(), static_cast<std::uint32_t>(d), bud))
      if (grp.is_zero(g.mono_degree(mo))) zdiv.push_back(mo);

  std::vector<std::vector<Poly>> out;
  for (std::size_t j = 0; j < m.gen_degrees().size(); ++j) {
    FgAbGroup::El c = grp.sub(want, m.gen_degrees()[j]);
    for (std::uint64_t d = 0; d <= bound; ++d)
      for (const Mono& mo : monos_of_degree(a.nvars(), static_cast<std::uint32_t>(d), bud)) {
        if (g.mono_degree(mo) != c) continue;
        bool covered = false;
        for (const Mono& nu : zdiv)
          if (nu.divides(mo)) {
            covered = true;
            break;
          }
        if (covered) continue;
        std::vector<Poly> row(m.gen_degrees().size(), a.zero());
        row[j] = Poly::term(a.field(), a.nvars(), mo, 1);
        out.push_back(std::move(row));
      }
  }
  return out;
}

}  // namespace affq
