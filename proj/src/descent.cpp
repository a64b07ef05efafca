#include "affq/descent.hpp"

#include <algorithm>

namespace affq {

namespace {

// N with M*N = -c_n * I from the characteristic polynomial (division free);
// the matrix is invertible exactly when -c_n is a unit.
PolyMat inverse_or_throw(const PolyMat& m, Budget& bud) {
  const PresentedAlgebra& a = m.algebra();
  std::size_t n = m.rows();
  if (n == 0) return m;
  std::vector<Poly> c = m.charpoly(bud);
  PolyMat acc = PolyMat::identity(a, n);
  for (std::size_t k = 1; k < n; ++k) {
    acc = acc.mul(m, bud);
    for (std::size_t i = 0; i < n; ++i)
      acc.at(i, i) = a.nf(acc.at(i, i) + c[k], bud);
  }
  std::optional<Poly> u = a.unit_inverse(a.nf(-c[n], bud), bud);
  if (!u) throw input_error("descent matrix is not invertible");
  PolyMat inv(a, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(i, j) = a.nf(*u * acc.at(i, j), bud);
  return inv;
}

PolyVec mat_col(const PolyMat& m, std::size_t j) {
  PolyVec col;
  col.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
  return col;
}

// module relation rows pushed through a ring map
std::vector<PolyVec> mapped_rows(const std::vector<PolyVec>& rows, const RingMap& f,
                                 Budget& bud) {
  std::vector<PolyVec> out;
  out.reserve(rows.size());
  for (const PolyVec& r : rows) {
    PolyVec v;
    v.reserve(r.size());
    for (const Poly& p : r) v.push_back(f.apply(p, bud));
    out.push_back(std::move(v));
  }
  return out;
}

// is every column of m inside the span of rows (modulo the owner relations)?
bool columns_in_span(const PolyMat& m, const std::vector<PolyVec>& rows, Budget& bud) {
  if (rows.empty()) return m.is_zero();
  ModuleGB span(m.algebra(), m.rows(), rows, bud);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!span.contains(mat_col(m, j), bud)) return false;
  return true;
}

// relations entering through src_leg must land in the dst_leg relation span
void check_phi_relations(const FpModule& mod, const PolyMat& phi,
                         const RingMap& src_leg, const RingMap& dst_leg,
                         Budget& bud) {
  if (mod.rels.empty()) return;
  const PresentedAlgebra& sq = phi.algebra();
  std::size_t g = mod.gens;
  ModuleGB span(sq, g, mapped_rows(mod.rels, dst_leg, bud), bud);
  for (const PolyVec& r : mod.rels) {
    PolyVec w = vec_zero(sq, g);
    for (std::size_t j = 0; j < g; ++j) {
      Poly lr = src_leg.apply(r[j], bud);
      if (lr.is_zero()) continue;
      for (std::size_t i = 0; i < g; ++i)
        w[i] = w[i] + lr * phi.at(i, j);
    }
    for (Poly& p : w) p = sq.nf(p, bud);
    if (!span.contains(w, bud))
      throw input_error("descent matrix does not map relations into relations");
  }
}

DescentDatum finish_datum(RingExtension ext, FpModule mod, PolyMat phi,
                          PolyMat phi_inv, Budget& bud) {
  DescentDatum d;
  d.square = cover_square(ext, bud);
  std::size_t g = mod.gens;
  if (!mod.owner.same(ext.cover()))
    throw input_error("descent module must live over the cover");
  if (phi.rows() != g || phi.cols() != g || phi_inv.rows() != g || phi_inv.cols() != g)
    throw input_error("descent matrix has the wrong shape");
  if (g > 0 && (!phi.algebra().same(d.square.alg) || !phi_inv.algebra().same(d.square.alg)))
    throw input_error("descent matrix must live over the tensor square");

  // phi . phi_inv = id on the target side, phi_inv . phi = id on the source
  // side; equality is taken modulo the module relations through each leg.
  PolyMat id = PolyMat::identity(d.square.alg, g);
  if (!columns_in_span(phi.mul(phi_inv, bud).sub(id, bud),
                       mapped_rows(mod.rels, d.square.leg[1], bud), bud) ||
      !columns_in_span(phi_inv.mul(phi, bud).sub(id, bud),
                       mapped_rows(mod.rels, d.square.leg[0], bud), bud))
    throw input_error("descent matrix inverse fails");

  check_phi_relations(mod, phi, d.square.leg[0], d.square.leg[1], bud);
  check_phi_relations(mod, phi_inv, d.square.leg[1], d.square.leg[0], bud);

  d.ext = std::move(ext);
  d.mod = std::move(mod);
  d.phi = std::move(phi);
  d.phi_inv = std::move(phi_inv);
  return d;
}

}  // namespace

RingExtension ring_extension(RingMap structural, std::vector<Poly> basis, Budget bud) {
  RingExtension e;
  if (basis.empty()) throw input_error("a faithfully flat cover needs a basis");
  const PresentedAlgebra& b = structural.target();
  if (!b.nf(basis[0] - b.one(), bud).is_zero())
    throw input_error("extension basis must start with the unit");
  e.evidence = FiniteFreeAlgebra::make(structural, std::move(basis), bud);
  e.structural = e.evidence.structural();
  return e;
}

TensorAlgebra cover_square(const RingExtension& e, Budget bud) {
  return tensor_over({e.structural, e.structural}, bud);
}

TensorAlgebra cover_cube(const RingExtension& e, Budget bud) {
  return tensor_over({e.structural, e.structural, e.structural}, bud);
}

FiniteFreeAlgebra square_evidence(const RingExtension& e, const TensorAlgebra& sq,
                                  Budget bud) {
  const std::vector<Poly>& bas = e.evidence.basis();
  std::size_t r = bas.size(), legs = sq.leg.size();
  std::size_t total = 1;
  for (std::size_t l = 0; l < legs; ++l) total *= r;
  std::vector<Poly> prod;
  prod.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    // mixed-radix digits, first leg slowest
    Poly p = sq.alg.one();
    std::size_t rest = idx;
    for (std::size_t l = legs; l-- > 0;) {
      p = p * sq.leg[l].apply(bas[rest % r], bud);
      rest /= r;
    }
    prod.push_back(sq.alg.nf(p, bud));
  }
  RingMap st = sq.leg[0].after(e.structural, bud);
  return FiniteFreeAlgebra::make(st, std::move(prod), bud);
}

DescentDatum descent_datum(RingExtension ext, FpModule mod, PolyMat phi, Budget bud) {
  if (phi.rows() != mod.gens || phi.cols() != mod.gens)
    throw input_error("descent matrix has the wrong shape");
  PolyMat inv = inverse_or_throw(phi, bud);
  return finish_datum(std::move(ext), std::move(mod), std::move(phi), std::move(inv),
                      bud);
}

DescentDatum descent_datum(RingExtension ext, FpModule mod, PolyMat phi,
                           PolyMat phi_inv, Budget bud) {
  return finish_datum(std::move(ext), std::move(mod), std::move(phi),
                      std::move(phi_inv), bud);
}

DescentDatum canonical_datum(const RingExtension& e, const FpModule& base_module,
                             Budget bud) {
  if (!base_module.owner.same(e.base()))
    throw input_error("canonical datum starts from a module over the base");
  std::vector<PolyVec> pushed = mapped_rows(base_module.rels, e.structural, bud);
  FpModule over_cover = fp_module(e.cover(), base_module.gens, std::move(pushed), bud);
  TensorAlgebra sq = cover_square(e, bud);
  PolyMat id = PolyMat::identity(sq.alg, base_module.gens);
  return descent_datum(e, std::move(over_cover), id, bud);
}

bool cocycle_check(const DescentDatum& d, Budget bud) {
  TensorAlgebra cube = cover_cube(d.ext, bud);
  RingMap u01 = map_from_tensor(d.square, {cube.leg[0], cube.leg[1]}, bud);
  RingMap u02 = map_from_tensor(d.square, {cube.leg[0], cube.leg[2]}, bud);
  RingMap u12 = map_from_tensor(d.square, {cube.leg[1], cube.leg[2]}, bud);
  // phi moves the module slot up one leg, so going 0 -> 1 -> 2 must match
  // going 0 -> 2 directly.
  PolyMat lhs = d.phi.mapped(u02, bud);
  PolyMat rhs = d.phi.mapped(u12, bud).mul(d.phi.mapped(u01, bud), bud);
  PolyMat diff = rhs.sub(lhs, bud);
  if (d.mod.rels.empty()) return diff.is_zero();
  return columns_in_span(diff, mapped_rows(d.mod.rels, cube.leg[2], bud), bud);
}

bool amitsur_exactness(const RingExtension& e, const FpModule& m, Budget bud) {
  if (!m.owner.same(e.base()))
    throw input_error("amitsur module must live over the base");
  const PresentedAlgebra& a = e.base();
  std::size_t r = e.rank(), g = m.gens;
  std::vector<Poly> c = e.evidence.expand(e.cover().one(), bud);

  // M ⊗ B with generators (j, k) -> j*r + k and relations row ⊗ b_k
  std::vector<PolyVec> rels_mb;
  for (const PolyVec& row : m.rels)
    for (std::size_t k = 0; k < r; ++k) {
      PolyVec v = vec_zero(a, g * r);
      for (std::size_t j = 0; j < g; ++j) v[j * r + k] = row[j];
      rels_mb.push_back(std::move(v));
    }

  // insertion M -> M ⊗ B
  std::vector<PolyVec> ins;
  for (std::size_t j = 0; j < g; ++j) {
    PolyVec v = vec_zero(a, g * r);
    for (std::size_t k = 0; k < r; ++k) v[j * r + k] = c[k];
    ins.push_back(std::move(v));
  }

  // M ⊗ B ⊗ B with generators (j, s, k) -> j*r*r + s*r + k
  std::vector<PolyVec> rels_mbb;
  for (const PolyVec& row : m.rels)
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t k = 0; k < r; ++k) {
        PolyVec v = vec_zero(a, g * r * r);
        for (std::size_t j = 0; j < g; ++j) v[j * r * r + s * r + k] = row[j];
        rels_mbb.push_back(std::move(v));
      }

  // difference of the two insertions M ⊗ B -> M ⊗ B ⊗ B
  std::vector<PolyVec> diff;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      PolyVec v = vec_zero(a, g * r * r);
      for (std::size_t s = 0; s < r; ++s) {
        std::size_t t0 = j * r * r + s * r + k, t1 = j * r * r + k * r + s;
        v[t0] = v[t0] + c[s];
        v[t1] = v[t1] - c[s];
      }
      for (Poly& p : v) p = a.nf(p, bud);
      diff.push_back(std::move(v));
    }

  // injectivity: the kernel of the insertion is no larger than the relations
  ModuleGB mrel(a, g, m.rels, bud);
  for (const PolyVec& w : module_kernel_mod(a, g * r, ins, rels_mb, bud))
    if (!mrel.contains(w, bud)) return false;

  // the insertion lands in the equalizer; anything else is a bug
  ModuleGB bigrel(a, g * r * r, rels_mbb, bud);
  for (const PolyVec& col : ins) {
    PolyVec im = vec_zero(a, g * r * r);
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = im[i] + col[t] * diff[t][i];
    }
    for (Poly& p : im) p = a.nf(p, bud);
    if (!bigrel.contains(im, bud))
      throw invariant_error("amitsur insertion does not equalize");
  }

  // the equalizer is no larger than the image of the insertion
  std::vector<PolyVec> image = ins;
  image.insert(image.end(), rels_mb.begin(), rels_mb.end());
  ModuleGB img(a, g * r, image, bud);
  for (const PolyVec& w : module_kernel_mod(a, g * r * r, diff, rels_mbb, bud))
    if (!img.contains(w, bud)) return false;
  return true;
}

DescendResult descend(const DescentDatum& d, Budget bud) {
  if (!cocycle_check(d, bud))
    throw input_error("cocycle identity fails; descent refused");
  const PresentedAlgebra& a = d.ext.base();
  const PresentedAlgebra& b = d.ext.cover();
  const TensorAlgebra& sq = d.square;
  const std::vector<Poly>& bas = d.ext.evidence.basis();
  std::size_t r = d.ext.rank(), g = d.mod.gens;
  FiniteFreeAlgebra ev2 = square_evidence(d.ext, sq, bud);

  // the two maps M' -> B ⊗ M' in base coordinates: unknown (j, k) -> j*r + k,
  // target coordinate (i, t) -> i*r*r + t
  std::vector<PolyVec> lcols;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      PolyVec entry = vec_zero(sq.alg, g);
      entry[j] = sq.leg[1].apply(bas[k], bud);
      Poly lb = sq.leg[0].apply(bas[k], bud);
      for (std::size_t i = 0; i < g; ++i)
        entry[i] = sq.alg.nf(entry[i] - lb * d.phi.at(i, j), bud);
      PolyVec col = vec_zero(a, g * r * r);
      for (std::size_t i = 0; i < g; ++i) {
        std::vector<Poly> coords = ev2.expand(entry[i], bud);
        for (std::size_t t = 0; t < r * r; ++t) col[i * r * r + t] = coords[t];
      }
      lcols.push_back(std::move(col));
    }

  // relations of B ⊗ M' in base coordinates: each leg-1 row times each square
  // basis element
  std::vector<PolyVec> target_rels;
  for (const PolyVec& row : d.mod.rels) {
    PolyVec lr;
    lr.reserve(g);
    for (const Poly& p : row) lr.push_back(sq.leg[1].apply(p, bud));
    for (std::size_t u = 0; u < r * r; ++u) {
      PolyVec col = vec_zero(a, g * r * r);
      for (std::size_t i = 0; i < g; ++i) {
        std::vector<Poly> coords =
            ev2.expand(sq.alg.nf(ev2.basis()[u] * lr[i], bud), bud);
        for (std::size_t t = 0; t < r * r; ++t) col[i * r * r + t] = coords[t];
      }
      target_rels.push_back(std::move(col));
    }
  }

  std::vector<PolyVec> kern = module_kernel_mod(a, g * r * r, lcols, target_rels, bud);

  // relations of M' as a base module: each row times each cover basis element
  std::vector<PolyVec> mod_base_rels;
  for (const PolyVec& row : d.mod.rels)
    for (std::size_t u = 0; u < r; ++u) {
      PolyVec col = vec_zero(a, g * r);
      for (std::size_t j = 0; j < g; ++j) {
        std::vector<Poly> coords = d.ext.evidence.expand(b.nf(bas[u] * row[j], bud), bud);
        for (std::size_t k = 0; k < r; ++k) col[j * r + k] = coords[k];
      }
      mod_base_rels.push_back(std::move(col));
    }

  DescendResult res;
  res.descended =
      fp_module(a, kern.size(), module_kernel_mod(a, g * r, kern, mod_base_rels, bud), bud);
  for (const PolyVec& w : kern) {
    PolyVec col = vec_zero(b, g);
    for (std::size_t j = 0; j < g; ++j) {
      Poly s = b.zero();
      for (std::size_t k = 0; k < r; ++k)
        s = s + d.ext.structural.apply(w[j * r + k], bud) * bas[k];
      col[j] = b.nf(s, bud);
    }
    res.comparison.push_back(std::move(col));
  }
  return res;
}

bool verify_effectivity(const DescentDatum& d, const DescendResult& r, Budget bud) {
  const PresentedAlgebra& b = d.ext.cover();
  std::size_t g = d.mod.gens, p = r.descended.gens;
  if (r.comparison.size() != p)
    throw input_error("comparison map has the wrong number of columns");
  if (!r.descended.owner.same(d.ext.base()))
    throw input_error("descended module must live over the base");

  // comparison is an isomorphism descended ⊗ B -> M' over the cover
  FpModule pushed = fp_module(b, p, mapped_rows(r.descended.rels, d.ext.structural, bud),
                              bud);
  if (!fp_module_iso(pushed, d.mod, r.comparison, bud)) return false;

  // and it carries the canonical datum to phi: phi·leg0(C) = leg1(C) modulo
  // the relations of B ⊗ M'
  PolyMat cmat(b, g, p);
  for (std::size_t t = 0; t < p; ++t)
    for (std::size_t i = 0; i < g; ++i) cmat.at(i, t) = r.comparison[t][i];
  PolyMat diff = d.phi.mul(cmat.mapped(d.square.leg[0], bud), bud)
                     .sub(cmat.mapped(d.square.leg[1], bud), bud);
  if (d.mod.rels.empty()) return diff.is_zero();
  return columns_in_span(diff, mapped_rows(d.mod.rels, d.square.leg[1], bud), bud);
}

NondescentReport equivariant_nondescent_demo(std::size_t n, Budget bud) {
  if (n == 0) throw input_error("the cyclic order must be at least 1");
  CoeffField q = CoeffField::rationals();
  PresentedAlgebra cover = PresentedAlgebra::free(q, {"s"});
  FgAbGroup grp =
      n == 1 ? FgAbGroup::trivial() : FgAbGroup::make(0, {mpz_class(static_cast<long>(n))});
  FgAbGroup::El one_deg = n == 1 ? FgAbGroup::El{} : FgAbGroup::El{1};
  MGrading grading = MGrading::make(cover, grp, {one_deg}, bud);

  // the ideal (s) as the free graded module on one generator of degree 1
  GradedModule mod = GradedModule::make(grading, {one_deg}, {});
  std::vector<std::vector<Poly>> comp =
      graded_module_component(mod, grp.zero(), n + 1);
  if (comp.size() != 1)
    throw invariant_error("the degree-zero part of (s) should be principal");

  NondescentReport rep;
  rep.n = n;
  rep.cover = cover;
  rep.ideal_generator = cover.nf(comp[0][0] * cover.var(0), bud);
  rep.strict = !cover.ideal_contains({rep.ideal_generator}, cover.var(0), bud);
  return rep;
}

}  // namespace affq
