#include "affq/groups.hpp"

#include "affq/jacobian.hpp"
#include "affq/linalg.hpp"

namespace affq {

namespace {

// Both maps must share source and target presentations.
bool same_images(const RingMap& a, const RingMap& b) { return a.images() == b.images(); }

unsigned long small_order(const mpz_class& n, const char* what) {
  if (!n.fits_ulong_p()) throw input_error(std::string(what) + " is too large");
  return n.get_ui();
}

}  // namespace

void verify_hopf_axioms(const HopfAlgebraData& h, Budget bud) {
  const PresentedAlgebra& a = h.carrier;
  RingMap unit = RingMap::make(h.counit.target(), a, {}, bud);
  RingMap ida = RingMap::identity(a);

  TensorAlgebra cube = tensor({a, a, a}, bud);
  RingMap i01 = map_from_tensor(h.square, {cube.leg[0], cube.leg[1]}, bud);
  RingMap i12 = map_from_tensor(h.square, {cube.leg[1], cube.leg[2]}, bud);
  RingMap lhs = map_from_tensor(h.square, {i01.after(h.comul, bud), cube.leg[2]}, bud)
                    .after(h.comul, bud);
  RingMap rhs = map_from_tensor(h.square, {cube.leg[0], i12.after(h.comul, bud)}, bud)
                    .after(h.comul, bud);
  if (!same_images(lhs, rhs))
    throw invariant_error("comultiplication is not coassociative");

  RingMap eta = unit.after(h.counit, bud);
  RingMap eps_l = map_from_tensor(h.square, {eta, ida}, bud).after(h.comul, bud);
  RingMap eps_r = map_from_tensor(h.square, {ida, eta}, bud).after(h.comul, bud);
  if (!same_images(eps_l, ida) || !same_images(eps_r, ida))
    throw invariant_error("counit laws fail");

  RingMap ant_l = map_from_tensor(h.square, {h.antipode, ida}, bud).after(h.comul, bud);
  RingMap ant_r = map_from_tensor(h.square, {ida, h.antipode}, bud).after(h.comul, bud);
  if (!same_images(ant_l, eta) || !same_images(ant_r, eta))
    throw invariant_error("antipode laws fail");
}

ConstantGroupScheme ConstantGroupScheme::make(CoeffField f,
                                              std::vector<std::vector<std::size_t>> table) {
  std::size_t n = table.size();
  if (n == 0) throw input_error("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw input_error("multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw input_error("multiplication table entry out of range");
  }
  ConstantGroupScheme g;
  g.f_ = f;
  g.table_ = std::move(table);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      ok = ok && g.table_[e][x] == x && g.table_[x][e] == x;
    if (ok) {
      g.id_ = e;
      found = true;
    }
  }
  if (!found) throw input_error("multiplication table has no identity");
  g.inv_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (g.table_[x][y] == g.id_ && g.table_[y][x] == g.id_) g.inv_[x] = y;
    if (g.inv_[x] == n) throw input_error("multiplication table has a non-invertible element");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g.table_[g.table_[x][y]][z] != g.table_[x][g.table_[y][z]])
          throw input_error("multiplication table is not associative");
  return g;
}

ConstantGroupScheme ConstantGroupScheme::cyclic(CoeffField f, std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make(f, std::move(t));
}

HopfAlgebraData constant_group_algebra(const ConstantGroupScheme& g, Budget bud) {
  CoeffField f = g.field();
  std::size_t n = g.order();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) names.push_back("e" + std::to_string(a));
  auto v = [&](std::size_t a) { return Poly::variable(f, n, a); };
  std::vector<Poly> rels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) rels.push_back(v(a) * v(b));
  for (std::size_t a = 0; a < n; ++a) rels.push_back(v(a) * v(a) - v(a));
  Poly s = Poly::zero(f, n);
  for (std::size_t a = 0; a < n; ++a) s = s + v(a);
  rels.push_back(s - Poly::constant(f, n, 1));
  PresentedAlgebra carrier = PresentedAlgebra::make(f, std::move(names), std::move(rels));

  TensorAlgebra sq = tensor({carrier, carrier}, bud);
  std::vector<Poly> dimg;
  dimg.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    Poly acc = sq.alg.zero();
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = g.mul(g.inverse(b), a);
      acc = acc + sq.leg[0].images()[b] * sq.leg[1].images()[c];
    }
    dimg.push_back(acc);
  }
  RingMap comul = RingMap::make(carrier, sq.alg, std::move(dimg), bud);

  PresentedAlgebra scal = PresentedAlgebra::scalar(f);
  std::vector<Poly> eimg;
  for (std::size_t a = 0; a < n; ++a)
    eimg.push_back(scal.constant(a == g.identity() ? 1 : 0));
  RingMap counit = RingMap::make(carrier, scal, std::move(eimg), bud);

  std::vector<Poly> simg;
  for (std::size_t a = 0; a < n; ++a) simg.push_back(carrier.var(g.inverse(a)));
  RingMap antipode = RingMap::make(carrier, carrier, std::move(simg), bud);

  HopfAlgebraData h{carrier, sq, comul, counit, antipode};
  verify_hopf_axioms(h, bud);
  return h;
}

DiagCarrier diag_carrier(const DiagonalizableGroupScheme& d) {
  const FgAbGroup& m = d.m;
  std::size_t r = m.free_rank(), s = m.torsion().size();
  std::size_t nv = 2 * r + s;
  CoeffField f = d.field;
  auto v = [&](std::size_t i) { return Poly::variable(f, nv, i); };
  DiagCarrier out;
  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> owners;
  std::vector<Poly> rels;
  for (std::size_t i = 0; i < r; ++i) {
    std::string base = "u" + std::to_string(i + 1);
    names.push_back(base);
    names.push_back(base + "_inv");
    owners.push_back(std::nullopt);
    owners.push_back(2 * i);
    out.genvar.push_back(2 * i);
    rels.push_back(v(2 * i) * v(2 * i + 1) - Poly::constant(f, nv, 1));
  }
  for (std::size_t j = 0; j < s; ++j) {
    names.push_back("u" + std::to_string(r + j + 1));
    owners.push_back(std::nullopt);
    out.genvar.push_back(2 * r + j);
    unsigned long nj = small_order(m.torsion()[j], "torsion order");
    rels.push_back(v(2 * r + j).pow(nj) - Poly::constant(f, nv, 1));
  }
  out.alg = PresentedAlgebra::with_owners(f, std::move(names), std::move(owners),
                                          std::move(rels));
  return out;
}

Poly character_monomial(const DiagonalizableGroupScheme& d, const DiagCarrier& c,
                        const FgAbGroup::El& e0) {
  FgAbGroup::El e = d.m.reduce(e0);
  std::size_t r = d.m.free_rank();
  Poly out = c.alg.one();
  for (std::size_t i = 0; i < d.m.ngens(); ++i) {
    if (e[i] == 0) continue;
    std::size_t var = c.genvar[i];
    mpz_class k = e[i];
    if (i < r && k < 0) {
      var += 1;  // companion carries the negative powers
      k = -k;
    }
    out = out * c.alg.var(var).pow(small_order(k, "character exponent"));
  }
  return c.alg.nf(out);
}

HopfAlgebraData diag_group_algebra(const DiagonalizableGroupScheme& d, Budget bud) {
  DiagCarrier dc = diag_carrier(d);
  const PresentedAlgebra& a = dc.alg;
  std::size_t r = d.m.free_rank();

  TensorAlgebra sq = tensor({a, a}, bud);
  std::vector<Poly> dimg;
  for (std::size_t t = 0; t < a.nvars(); ++t)
    dimg.push_back(sq.leg[0].images()[t] * sq.leg[1].images()[t]);
  RingMap comul = RingMap::make(a, sq.alg, std::move(dimg), bud);

  PresentedAlgebra scal = PresentedAlgebra::scalar(d.field);
  RingMap counit = RingMap::make(a, scal, std::vector<Poly>(a.nvars(), scal.one()), bud);

  std::vector<Poly> simg(a.nvars());
  for (std::size_t t = 0; t < a.nvars(); ++t) {
    if (auto owner = a.companion_owner(t)) {
      simg[t] = a.var(*owner);
    } else if (auto comp = a.companion_of(t)) {
      simg[t] = a.var(*comp);
    } else {
      unsigned long nj = small_order(d.m.torsion()[t - 2 * r], "torsion order");
      simg[t] = a.var(t).pow(nj - 1);
    }
  }
  RingMap antipode = RingMap::make(a, a, std::move(simg), bud);

  HopfAlgebraData h{a, sq, comul, counit, antipode};
  verify_hopf_axioms(h, bud);
  return h;
}

std::uint64_t diag_degree(const DiagonalizableGroupScheme& d, Budget bud) {
  auto ord = d.m.order();
  if (!ord) throw input_error("diagonalizable group is not finite");
  DiagCarrier dc = diag_carrier(d);
  auto dim = dc.alg.dimension(bud);
  if (!dim || mpz_class(static_cast<unsigned long>(*dim)) != *ord)
    throw invariant_error("group algebra dimension disagrees with the character count");
  return *dim;
}

DiagQuotient diag_quotient(const DiagonalizableGroupScheme& dn, const GroupHom& u,
                           Budget bud) {
  if (!(u.source() == dn.m))
    throw input_error("homomorphism does not start at the given character group");
  const FgAbGroup& m = u.target();
  // surjectivity: the image columns and the relation lattice must span
  std::size_t q = m.ngens(), sg = u.source().ngens(), ts = m.torsion().size();
  ZMat rels = zmat(q, sg + ts);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < sg; ++j) rels[i][j] = u.matrix()[i][j];
  for (std::size_t j = 0; j < ts; ++j)
    rels[m.free_rank() + j][sg + j] = m.torsion()[j];
  auto [coker, proj] = FgAbGroup::cokernel(q, rels);
  (void)proj;
  if (!coker.is_trivial())
    throw input_error("character homomorphism is not surjective");

  KernelResult kr = kernel(u);
  DiagonalizableGroupScheme sub{dn.field, kr.group};
  DiagCarrier small = diag_carrier(sub), big = diag_carrier(dn);
  std::vector<Poly> images(small.alg.nvars());
  for (std::size_t g = 0; g < kr.group.ngens(); ++g) {
    FgAbGroup::El im = kr.incl.apply(kr.group.gen(g));
    images[small.genvar[g]] = character_monomial(dn, big, im);
    if (g < kr.group.free_rank())
      images[small.genvar[g] + 1] = character_monomial(dn, big, dn.m.neg(im));
  }
  RingMap incl = RingMap::make(small.alg, big.alg, std::move(images), bud);
  return {sub, kr.incl, incl};
}

std::optional<std::vector<Poly>> all_elements(const PresentedAlgebra& a,
                                              std::uint64_t cap, Budget bud) {
  unsigned long p = a.field().characteristic();
  if (p == 0) return std::nullopt;
  auto dim = a.dimension(bud);
  if (!dim) return std::nullopt;
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < *dim; ++i) {
    if (total > cap / p) return std::nullopt;
    total *= p;
  }
  std::vector<Mono> mus = a.standard_monomials(*dim ? *dim : 1, bud);
  if (mus.size() != *dim) throw invariant_error("staircase does not match the dimension");
  std::vector<Poly> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::vector<Term> ts;
    for (const auto& mu : mus) {
      unsigned long digit = rest % p;
      rest /= p;
      if (digit) ts.push_back({mu, mpq_class(digit)});
    }
    out.push_back(Poly::from_terms(a.field(), a.nvars(), std::move(ts)));
    bud.spend();
  }
  return out;
}

namespace {

// Cover built from one adjoined variable, with the freeness certificate.
void attach_cover(SequenceReport& rep, const PresentedAlgebra& base,
                  const EtaleCheck& ec, std::uint64_t rank, Budget& bud) {
  rep.cover = ec.ext;
  rep.etale = ec.etale;
  std::vector<Poly> imgs;
  imgs.reserve(base.nvars());
  for (std::size_t j = 0; j < base.nvars(); ++j) imgs.push_back(rep.cover.var(j));
  RingMap str = RingMap::make(base, rep.cover, std::move(imgs), bud);
  Poly t = rep.cover.var(base.nvars());
  std::vector<Poly> bas;
  bas.reserve(rank);
  for (std::uint64_t k = 0; k < rank; ++k) bas.push_back(t.pow(k));
  rep.cover_module = FiniteFreeAlgebra::make(str, std::move(bas), bud);
  rep.cover_rank = rep.cover_module.rank();
  rep.witness = t;
}

}  // namespace

SequenceReport kummer_check(const PresentedAlgebra& base, const Poly& xi,
                            std::uint64_t n, Budget bud) {
  if (n == 0) throw input_error("kummer exponent must be positive");
  Poly x = base.nf(xi, bud);
  if (!base.is_unit(x, bud)) throw input_error("kummer section must be a unit");

  SequenceReport rep;
  if (auto els = all_elements(base, 1'000'000, bud)) {
    for (const Poly& e : *els)
      if (base.nf(e.pow(n) - base.one(), bud).is_zero())
        rep.kernel_elements.push_back(base.str(e));
    rep.kernel_desc = std::to_string(rep.kernel_elements.size()) +
                      " solution(s) of x^" + std::to_string(n) + " = 1";
  } else {
    rep.kernel_desc = "kernel not enumerated (infinite field or dimension)";
  }
  if (x == base.one()) rep.root_in_base = base.one();

  PresentedAlgebra wide = extended(base, {"T"}, {});
  Poly rel = wide.var(base.nvars()).pow(n) - widened(x, wide.nvars());
  EtaleCheck ec = jacobian_etale_check_rels(base, {"T"}, {rel}, bud);
  attach_cover(rep, base, ec, n, bud);
  rep.witness_ok =
      rep.cover.nf(rep.witness.pow(n) - widened(x, rep.cover.nvars()), bud).is_zero();
  return rep;
}

SequenceReport artin_schreier_check(const PresentedAlgebra& base, const Poly& a,
                                    Budget bud) {
  unsigned long p = base.field().characteristic();
  if (p == 0) throw input_error("Artin-Schreier needs positive characteristic");
  Poly aa = base.nf(a, bud);

  SequenceReport rep;
  auto dim = base.dimension(bud);
  if (dim) {
    // Frobenius is F_p-linear; its fixed space on the staircase basis
    std::vector<Mono> mus = base.standard_monomials(*dim ? *dim : 1, bud);
    if (mus.size() != *dim) throw invariant_error("staircase does not match the dimension");
    std::map<std::vector<std::uint32_t>, std::size_t> pos;
    for (std::size_t j = 0; j < mus.size(); ++j) pos.emplace(mus[j].e, j);
    QMat fr(mus.size(), QVec(mus.size(), 0));
    for (std::size_t j = 0; j < mus.size(); ++j) {
      Poly img = base.nf(Poly::term(base.field(), base.nvars(), mus[j], 1).pow(p), bud);
      for (const auto& t : img.terms()) fr[pos.at(t.m.e)][j] = t.c;
      fr[j][j] = base.field().sub(fr[j][j], 1);
    }
    auto fix = kernel_basis(fr, mus.size(), base.field());
    rep.kernel_desc = "Frobenius fixed space of dimension " + std::to_string(fix.size());
    // enumerate the fixed points when small
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < fix.size() && small; ++i) {
      if (count > 4096 / p) small = false;
      count *= p;
    }
    if (small) {
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        Poly e = base.zero();
        for (const auto& bvec : fix) {
          unsigned long digit = rest % p;
          rest /= p;
          if (!digit) continue;
          std::vector<Term> ts;
          for (std::size_t j = 0; j < mus.size(); ++j)
            if (bvec[j] != 0) ts.push_back({mus[j], bvec[j]});
          e = e + Poly::from_terms(base.field(), base.nvars(), std::move(ts))
                      .scaled(mpq_class(digit));
        }
        rep.kernel_elements.push_back(base.str(base.nf(e, bud)));
      }
    }
  } else {
    rep.kernel_desc = "kernel not enumerated (infinite dimension)";
  }

  PresentedAlgebra wide = extended(base, {"T"}, {});
  Poly t = wide.var(base.nvars());
  Poly rel = t.pow(p) - t - widened(aa, wide.nvars());
  EtaleCheck ec = jacobian_etale_check_rels(base, {"T"}, {rel}, bud);
  attach_cover(rep, base, ec, p, bud);
  rep.witness_ok =
      rep.cover
          .nf(rep.witness.pow(p) - rep.witness - widened(aa, rep.cover.nvars()), bud)
          .is_zero();
  return rep;
}

std::vector<Poly> alphap_kernel(const PresentedAlgebra& alg, Budget bud) {
  unsigned long p = alg.field().characteristic();
  if (p == 0) throw input_error("alpha_p lives in positive characteristic");
  auto dim = alg.dimension(bud);
  if (!dim) throw input_error("alpha_p kernel needs a finite-dimensional algebra");
  std::vector<Mono> mus = alg.standard_monomials(*dim ? *dim : 1, bud);
  if (mus.size() != *dim) throw invariant_error("staircase does not match the dimension");
  std::map<std::vector<std::uint32_t>, std::size_t> pos;
  for (std::size_t j = 0; j < mus.size(); ++j) pos.emplace(mus[j].e, j);
  QMat fr(mus.size(), QVec(mus.size(), 0));
  for (std::size_t j = 0; j < mus.size(); ++j) {
    Poly img = alg.nf(Poly::term(alg.field(), alg.nvars(), mus[j], 1).pow(p), bud);
    for (const auto& t : img.terms()) fr[pos.at(t.m.e)][j] = t.c;
  }
  std::vector<Poly> out;
  for (const auto& bvec : kernel_basis(fr, mus.size(), alg.field())) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < mus.size(); ++j)
      if (bvec[j] != 0) ts.push_back({mus[j], bvec[j]});
    out.push_back(Poly::from_terms(alg.field(), alg.nvars(), std::move(ts)));
  }
  return out;
}

}  // namespace affq
