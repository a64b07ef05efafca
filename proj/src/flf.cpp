#include "affq/flf.hpp"

#include <set>
#include <string>
#include <utility>

#include "affq/linalg.hpp"
#include "affq/points.hpp"

namespace affq {

namespace {

// Reassemble base coefficients from a solution vector over the candidate
// monomials, blocked by basis index.  Nonzero combinations of distinct
// standard monomials are already in normal form, hence nonzero in the base.
std::vector<Poly> gather(const QVec& lam, const std::vector<Mono>& mus,
                         std::size_t n, const PresentedAlgebra& a) {
  std::vector<Poly> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < mus.size(); ++j) {
      const mpq_class& v = lam[i * mus.size() + j];
      if (v != 0) ts.push_back({mus[j], v});
    }
    c.push_back(Poly::from_terms(a.field(), a.nvars(), std::move(ts)));
  }
  return c;
}

}  // namespace

FiniteFreeAlgebra FiniteFreeAlgebra::make(RingMap structural, std::vector<Poly> basis,
                                          Budget bud) {
  if (basis.empty()) throw input_error("finite free algebra needs a nonempty basis");
  PresentedAlgebra tot = structural.target();
  for (auto& e : basis) {
    if (e.nvars() != tot.nvars())
      throw input_error("basis element does not live in the total ring");
    e = tot.nf(e, bud);
  }
  FiniteFreeAlgebra r;
  r.im_ = std::make_shared<Impl>();
  r.im_->str = std::move(structural);
  r.im_->basis = std::move(basis);
  // Spanning certificate: the unit and every generator of the total ring
  // expand, and the span of the basis is closed under multiplication (all
  // pair products expand).  Any bounded-degree dependency among the basis
  // elements is caught by the kernel check inside expand.
  r.expand(tot.one(), bud);
  for (std::size_t t = 0; t < tot.nvars(); ++t) r.expand(tot.var(t), bud);
  r.structure_constants(bud);
  return r;
}

Poly FiniteFreeAlgebra::column_vector(std::size_t i, const Mono& mu, Budget& bud) const {
  std::string key;
  for (auto e : mu.e) {
    key += std::to_string(e);
    key += ',';
  }
  {
    std::lock_guard<std::mutex> lk(im_->mu);
    auto it = im_->wcache.find({i, key});
    if (it != im_->wcache.end()) return it->second;
  }
  const PresentedAlgebra& a = base();
  Poly m = Poly::term(a.field(), a.nvars(), mu, 1);
  Poly w = total().nf(im_->str.apply(m, bud) * im_->basis[i], bud);
  std::lock_guard<std::mutex> lk(im_->mu);
  return im_->wcache.emplace(std::pair{i, std::move(key)}, std::move(w)).first->second;
}

std::vector<Poly> FiniteFreeAlgebra::expand(const Poly& b0, Budget bud) const {
  const PresentedAlgebra& a = base();
  const PresentedAlgebra& tot = total();
  if (b0.nvars() != tot.nvars())
    throw input_error("expand: element does not live in the total ring");
  const std::size_t n = rank();
  Poly b = tot.nf(b0, bud);

  // Coefficients are sought among base standard monomials of degree <= d,
  // deepening d until the exact linear system becomes solvable.
  std::uint64_t d0 = std::max<std::uint64_t>(2, b.total_degree());
  for (const auto& e : im_->basis) d0 = std::max(d0, e.total_degree());
  for (const auto& g : im_->str.images()) d0 = std::max(d0, g.total_degree());

  for (std::uint64_t d = d0; d <= d0 + 12; ++d) {
    bud.spend();
    std::vector<Mono> mus = a.standard_monomials(d, bud);
    std::vector<Poly> w;
    w.reserve(n * mus.size());
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& mu : mus) w.push_back(column_vector(i, mu, bud));

    std::map<std::vector<std::uint32_t>, std::size_t> row;
    auto note = [&](const Poly& p) {
      for (const auto& t : p.terms()) row.emplace(t.m.e, row.size());
    };
    for (const auto& p : w) note(p);
    note(b);

    QMat mat(row.size(), QVec(w.size(), 0));
    for (std::size_t c = 0; c < w.size(); ++c)
      for (const auto& t : w[c].terms()) mat[row.at(t.m.e)][c] = t.c;
    QVec rhs(row.size(), 0);
    for (const auto& t : b.terms()) rhs[row.at(t.m.e)] = t.c;

    // The columns are exact normal forms, so a kernel vector is a genuine
    // base-linear relation among the basis elements, not a truncation effect.
    std::vector<QVec> dep = kernel_basis(mat, w.size(), tot.field());
    if (!dep.empty()) {
      std::vector<Poly> c = gather(dep[0], mus, n, a);
      std::string msg = "basis is not free over the base; relation: 0 =";
      for (std::size_t i = 0; i < n; ++i)
        if (!c[i].is_zero()) msg += " + (" + a.str(c[i]) + ")*e" + std::to_string(i + 1);
      throw input_error(msg);
    }

    std::optional<QVec> sol = solve(mat, rhs, tot.field());
    if (!sol) continue;
    std::vector<Poly> c = gather(*sol, mus, n, a);
    if (!tot.nf(b - assemble(c, bud), bud).is_zero())
      throw invariant_error("basis expansion failed its recheck");
    return c;
  }
  throw budget_error("basis expansion exceeded the coefficient degree window");
}

Poly FiniteFreeAlgebra::assemble(const std::vector<Poly>& c, Budget bud) const {
  if (c.size() != rank())
    throw input_error("coefficient vector length does not match the rank");
  const PresentedAlgebra& tot = total();
  Poly acc = tot.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    acc = acc + im_->str.apply(c[i], bud) * im_->basis[i];
  return tot.nf(acc, bud);
}

const std::vector<std::vector<std::vector<Poly>>>& FiniteFreeAlgebra::structure_constants(
    Budget bud) const {
  {
    std::lock_guard<std::mutex> lk(im_->mu);
    if (!im_->sc.empty()) return im_->sc;
  }
  const std::size_t n = rank();
  const PresentedAlgebra& tot = total();
  std::vector<std::vector<std::vector<Poly>>> s(n, std::vector<std::vector<Poly>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s[i][j] = expand(tot.nf(im_->basis[i] * im_->basis[j], bud), bud);
      if (j != i) s[j][i] = s[i][j];
    }
  std::lock_guard<std::mutex> lk(im_->mu);
  if (im_->sc.empty()) im_->sc = std::move(s);
  return im_->sc;
}

PolyMat FiniteFreeAlgebra::mult_matrix(const Poly& b, Budget bud) const {
  const PresentedAlgebra& tot = total();
  const std::size_t n = rank();
  Poly bb = tot.nf(b, bud);
  PolyMat m(base(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Poly> c = expand(tot.nf(bb * im_->basis[j], bud), bud);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = c[i];
  }
  return m;
}

std::vector<Poly> FiniteFreeAlgebra::charpoly(const Poly& b, Budget bud) const {
  return mult_matrix(b, bud).charpoly(bud);
}

Poly FiniteFreeAlgebra::norm(const Poly& b, Budget bud) const {
  return mult_matrix(b, bud).det(bud);
}

Poly FiniteFreeAlgebra::trace(const Poly& b, Budget bud) const {
  return mult_matrix(b, bud).trace(bud);
}

std::pair<bool, bool> FiniteFreeAlgebra::norm_unit_criterion(const Poly& b,
                                                             Budget bud) const {
  bool bu = total().is_unit(b, bud);
  bool nu = base().is_unit(norm(b, bud), bud);
  if (bu != nu)
    throw invariant_error("norm unit criterion violated: element and norm disagree");
  return {bu, nu};
}

bool FiniteFreeAlgebra::zero_locus_image_check(const Poly& b, unsigned long q,
                                               std::uint64_t cap, Budget bud) const {
  Fq f = Fq::of_order(q);
  std::vector<FqPoint> tp = rational_points(total(), q, cap);
  std::vector<FqPoint> bp = rational_points(base(), q, cap);
  Poly bb = total().nf(b, bud);
  Poly nb = norm(b, bud);
  std::set<std::vector<Fq::El>> image, locus;
  for (const auto& pt : tp) {
    if (!f.is_zero(f.eval(bb, pt.coords))) continue;
    std::vector<Fq::El> proj;
    proj.reserve(im_->str.images().size());
    for (const auto& g : im_->str.images()) proj.push_back(f.eval(g, pt.coords));
    image.insert(std::move(proj));
  }
  for (const auto& pt : bp)
    if (f.is_zero(f.eval(nb, pt.coords))) locus.insert(pt.coords);
  return image == locus;
}

}  // namespace affq
