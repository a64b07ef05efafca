#include "affq/elim.hpp"

namespace affq {

namespace {

// Extract the polynomials supported entirely on the last (kept) block of an
// elimination basis and rewrite them in a ring of just those variables.
std::vector<Poly> kept_block(const GB& gb, std::size_t block, std::size_t keptn) {
  std::vector<Poly> out;
  for (auto& g : gb.basis) {
    bool pure = true;
    for (std::size_t i = 0; i < block && pure; ++i)
      if (g.uses_var(i)) pure = false;
    if (!pure) continue;
    std::vector<Term> ts;
    for (auto& t : g.terms()) {
      Mono m(keptn);
      std::copy(t.m.e.begin() + block, t.m.e.end(), m.e.begin());
      m.deg = t.m.deg;
      ts.push_back({std::move(m), t.c});
    }
    out.push_back(Poly::from_terms(g.field(), keptn, std::move(ts)));
  }
  return out;
}

}  // namespace

std::vector<Poly> kernel_of_map(const RingMap& m, Budget bud) {
  const PresentedAlgebra& src = m.source();
  const PresentedAlgebra& dst = m.target();
  std::size_t dn = dst.nvars(), sn = src.nvars(), N = dn + sn;
  // combined ring [dst vars | src vars]: target relations plus the graph
  // u_j - image(u_j), then eliminate the dst block
  std::vector<Poly> gens;
  for (auto& r : dst.relations().gens()) gens.push_back(widened(r, N));
  for (std::size_t j = 0; j < sn; ++j) {
    Poly u = Poly::variable(src.field(), N, dn + j);
    gens.push_back(u - widened(m.images()[j], N));
  }
  GB gb = buchberger(gens, MonoOrder::elim(dn), bud);
  std::vector<Poly> ker = kept_block(gb, dn, sn);
  // canonical presentation: reduced degrevlex basis in the source ring
  GB out = buchberger(ker, MonoOrder::degrevlex(), bud);
  return out.basis;
}

SubalgebraTester::SubalgebraTester(PresentedAlgebra a, std::vector<Poly> gens, Budget bud)
    : a_(std::move(a)), gens_(std::move(gens)) {
  std::size_t n = a_.nvars(), N = n + gens_.size();
  std::vector<Poly> rel;
  for (auto& r : a_.relations().gens()) rel.push_back(widened(r, N));
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].nvars() != n) throw invariant_error("generator not in the algebra");
    rel.push_back(Poly::variable(a_.field(), N, n + i) - widened(gens_[i], N));
  }
  gb_ = buchberger(rel, MonoOrder::elim(n), bud);
}

std::optional<Poly> SubalgebraTester::express(const Poly& f, Budget bud) const {
  std::size_t n = a_.nvars(), N = n + gens_.size();
  Poly r = normal_form(widened(f, N), gb_, bud);
  for (std::size_t i = 0; i < n; ++i)
    if (r.uses_var(i)) return std::nullopt;
  std::vector<Term> ts;
  for (auto& t : r.terms()) {
    Mono m(gens_.size());
    std::copy(t.m.e.begin() + n, t.m.e.end(), m.e.begin());
    m.deg = t.m.deg;
    ts.push_back({std::move(m), t.c});
  }
  return Poly::from_terms(a_.field(), gens_.size(), std::move(ts));
}

Poly SubalgebraTester::evaluate(const Poly& expr, Budget bud) const {
  if (expr.nvars() != gens_.size()) throw invariant_error("expression/tag mismatch");
  return a_.nf(expr.substitute(gens_, a_.field(), a_.nvars()), bud);
}

SubalgebraPresentation present_subalgebra(const PresentedAlgebra& a,
                                          const std::vector<Poly>& gens,
                                          const std::vector<std::string>& names,
                                          Budget bud) {
  if (names.size() != gens.size())
    throw input_error("one name per subalgebra generator required");
  PresentedAlgebra freering = PresentedAlgebra::free(a.field(), names);
  RingMap to_a = RingMap::make(freering, a, gens, bud);
  std::vector<Poly> ker = kernel_of_map(to_a, bud);
  SubalgebraPresentation out;
  out.alg = PresentedAlgebra::make(a.field(), names, std::move(ker));
  out.incl = RingMap::make(out.alg, a, gens, bud);
  return out;
}

}  // namespace affq
