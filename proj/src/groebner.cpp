#include "affq/groebner.hpp"

#include <algorithm>
#include <deque>

namespace affq {

namespace {

// Terms sorted strictly descending under the engine's order.
using EPoly = std::vector<Term>;

EPoly to_e(const Poly& p, const MonoOrder& ord) {
  EPoly t(p.terms().begin(), p.terms().end());
  if (ord.kind != OrderKind::Degrevlex)
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  return t;
}

Poly from_e(CoeffField f, std::size_t n, const EPoly& t) {
  return Poly::from_terms(f, n, std::vector<Term>(t.begin(), t.end()));
}

// a - c * x^m * b, all inputs sorted descending under ord
EPoly submul(const EPoly& a, const mpq_class& c, const Mono& m, const EPoly& b,
             CoeffField f, const MonoOrder& ord) {
  EPoly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    Mono bm;
    if (j < b.size()) bm = b[j].m.mul(m);
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = ord.cmp(a[i].m, bm);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      mpq_class v = f.mul(f.neg(c), b[j].c);
      if (v != 0) r.push_back({std::move(bm), std::move(v)});
      ++j;
    } else {
      mpq_class v = f.sub(a[i].c, f.mul(c, b[j].c));
      if (v != 0) r.push_back({std::move(bm), std::move(v)});
      ++i, ++j;
    }
  }
  return r;
}

struct Engine {
  CoeffField f;
  std::size_t n = 0;
  MonoOrder ord;
  Budget* bud = nullptr;
  bool track = false;
  std::size_t ngens = 0;

  std::vector<EPoly> g;                       // current basis, monic
  std::vector<std::vector<Poly>> rep;         // representations in the inputs
  struct Pair {
    std::size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;

  const Mono& lm(std::size_t i) const { return g[i][0].m; }

  // Fully reduce p against the basis; optionally accumulate cofactors into
  // racc (an input-representation vector).
  EPoly reduce(EPoly p, std::vector<Poly>* racc) {
    EPoly rem;
    while (!p.empty()) {
      bool hit = false;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (!lm(k).divides(p[0].m)) continue;
        bud->spend();
        mpq_class c = p[0].c;  // basis is monic
        Mono q = p[0].m.quot(lm(k));
        p = submul(p, c, q, g[k], f, ord);
        if (racc) {
          Poly t = Poly::term(f, n, q, c);
          for (std::size_t s = 0; s < ngens; ++s)
            (*racc)[s] = (*racc)[s] + t * rep[k][s];
        }
        hit = true;
        break;
      }
      if (!hit) {
        rem.push_back(p.front());
        p.erase(p.begin());
      }
    }
    return rem;
  }

  // Gebauer–Moeller pair update when appending h (already stored at index t).
  void update_pairs_gm(std::size_t t) {
    struct Cand {
      std::size_t i;
      Mono l;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
      cands.push_back({i, lm(i).lcm(lm(t)), lm(i).coprime(lm(t))});

    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool dominated = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b)
          if (cands[b].l.divides(cands[a].l) && !(cands[a].l == cands[b].l))
            dominated = true;
        for (auto& k : kept)
          if (k.l.divides(cands[a].l)) {
            dominated = true;
            break;
          }
      }
      if (!dominated) kept.push_back(cands[a]);
    }

    std::vector<Pair> nb;
    nb.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      bool drop = lm(t).divides(p.lcm) && !(lm(p.i).lcm(lm(t)) == p.lcm) &&
                  !(lm(p.j).lcm(lm(t)) == p.lcm);
      if (!drop) nb.push_back(p);
    }
    for (auto& k : kept)
      if (!k.coprime) nb.push_back({k.i, t, k.l});
    pairs = std::move(nb);
  }

  void update_pairs_naive(std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) pairs.push_back({i, t, lm(i).lcm(lm(t))});
  }

  void append(EPoly h, std::vector<Poly> r, bool use_gm) {
    // make monic
    mpq_class c = h[0].c;
    if (c != 1) {
      mpq_class ci = f.inv(c);
      for (auto& t : h) t.c = f.mul(t.c, ci);
      if (track)
        for (auto& p : r) p = p.scaled(ci);
    }
    g.push_back(std::move(h));
    if (track) rep.push_back(std::move(r));
    if (use_gm)
      update_pairs_gm(g.size() - 1);
    else
      update_pairs_naive(g.size() - 1);
  }

  void run(const std::vector<Poly>& gens, bool use_gm) {
    ngens = gens.size();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (gens[s].is_zero()) continue;
      std::vector<Poly> r;
      if (track) r.assign(ngens, Poly::zero(f, n));
      EPoly h = reduce(to_e(gens[s], ord), track ? &r : nullptr);
      if (h.empty()) continue;
      if (track) {
        // h = gens[s] - sum r * gens, so rep(h) = e_s - r
        for (std::size_t k = 0; k < ngens; ++k) r[k] = -r[k];
        r[s] = r[s] + Poly::constant(f, n, 1);
      }
      append(std::move(h), std::move(r), use_gm);
    }

    while (!pairs.empty()) {
      bud->spend();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        int c = ord.cmp(pairs[k].lcm, pairs[best].lcm);
        if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                 (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
          best = k;
      }
      Pair p = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

      // S-polynomial of two monic elements
      Mono qi = p.lcm.quot(lm(p.i)), qj = p.lcm.quot(lm(p.j));
      EPoly zero;
      EPoly s = submul(zero, mpq_class(-1), qi, g[p.i], f, ord);  // x^qi * g_i
      s = submul(s, mpq_class(1), qj, g[p.j], f, ord);            // minus x^qj * g_j
      std::vector<Poly> r;
      if (track) {
        r.assign(ngens, Poly::zero(f, n));
        Poly ti = Poly::term(f, n, qi, 1), tj = Poly::term(f, n, qj, 1);
        for (std::size_t k = 0; k < ngens; ++k)
          r[k] = ti * rep[p.i][k] - tj * rep[p.j][k];
      }
      std::vector<Poly> cof;
      if (track) cof.assign(ngens, Poly::zero(f, n));
      EPoly h = reduce(std::move(s), track ? &cof : nullptr);
      if (h.empty()) continue;
      if (track)
        for (std::size_t k = 0; k < ngens; ++k) r[k] = r[k] - cof[k];
      append(std::move(h), std::move(r), use_gm);
    }

    minimalize_autoreduce();
  }

  void minimalize_autoreduce() {
    // drop elements whose lead is divisible by another surviving lead
    std::vector<bool> dead(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size() && !dead[i]; ++j)
        if (i != j && !dead[j] && lm(j).divides(lm(i)))
          dead[i] = (lm(i) == lm(j)) ? (j < i) : true;
    std::vector<EPoly> kept;
    std::vector<std::vector<Poly>> keptrep;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!dead[i]) {
        kept.push_back(std::move(g[i]));
        if (track) keptrep.push_back(std::move(rep[i]));
      }
    g = std::move(kept);
    rep = std::move(keptrep);

    // full autoreduction: reduce each element against the others
    for (std::size_t pass = 0; pass < g.size(); ++pass) {
      EPoly cur = std::move(g[pass]);
      std::vector<EPoly> others;
      std::vector<std::vector<Poly>> otherrep;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != pass) {
          others.push_back(g[k]);
          if (track) otherrep.push_back(rep[k]);
        }
      Engine sub{f, n, ord, bud, track, ngens, std::move(others),
                 std::move(otherrep), {}};
      std::vector<Poly> cof;
      if (track) cof.assign(ngens, Poly::zero(f, n));
      EPoly red = sub.reduce(std::move(cur), track ? &cof : nullptr);
      if (red.empty()) throw invariant_error("autoreduction killed a minimal basis element");
      if (track)
        for (std::size_t k = 0; k < ngens; ++k) rep[pass][k] = rep[pass][k] - cof[k];
      mpq_class c = red[0].c;
      if (c != 1) {
        mpq_class ci = f.inv(c);
        for (auto& t : red) t.c = f.mul(t.c, ci);
        if (track)
          for (auto& p : rep[pass]) p = p.scaled(ci);
      }
      g[pass] = std::move(red);
    }

    // canonical output order: ascending leading monomial
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ord.cmp(lm(a), lm(b)) < 0; });
    std::vector<EPoly> sg;
    std::vector<std::vector<Poly>> sr;
    for (auto i : idx) {
      sg.push_back(std::move(g[i]));
      if (track) sr.push_back(std::move(rep[i]));
    }
    g = std::move(sg);
    rep = std::move(sr);
  }
};

void check_ring(const std::vector<Poly>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i].nvars() != gens[0].nvars() || !(gens[i].field() == gens[0].field()))
      throw invariant_error("generators from different rings");
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonoOrder& ord,
                 Budget& bud) {
  if (basis.empty() || f.is_zero()) return f;
  CoeffField fld = f.field();
  Engine e{fld, f.nvars(), ord, &bud, false, 0, {}, {}, {}};
  for (auto& b : basis) {
    if (b.is_zero()) continue;
    EPoly eb = to_e(b, ord);
    if (eb[0].c != 1) {  // monic under the engine's order, not degrevlex
      mpq_class ci = fld.inv(eb[0].c);
      for (auto& t : eb) t.c = fld.mul(t.c, ci);
    }
    e.g.push_back(std::move(eb));
  }
  return from_e(fld, f.nvars(), e.reduce(to_e(f, ord), nullptr));
}

DivisionResult divide(const Poly& f, const std::vector<Poly>& basis, const MonoOrder& ord,
                      Budget& bud) {
  // Track cofactors against the (possibly non-monic) inputs directly.
  DivisionResult res;
  res.quot.assign(basis.size(), Poly::zero(f.field(), f.nvars()));
  CoeffField fld = f.field();
  std::size_t n = f.nvars();
  EPoly p = to_e(f, ord), rem;
  std::vector<EPoly> eb;
  std::vector<mpq_class> lc;
  for (auto& b : basis) {
    eb.push_back(to_e(b, ord));
    lc.push_back(b.is_zero() ? mpq_class(0) : eb.back()[0].c);
  }
  while (!p.empty()) {
    bool hit = false;
    for (std::size_t k = 0; k < eb.size(); ++k) {
      if (eb[k].empty() || !eb[k][0].m.divides(p[0].m)) continue;
      bud.spend();
      mpq_class c = fld.div(p[0].c, lc[k]);
      Mono q = p[0].m.quot(eb[k][0].m);
      p = submul(p, c, q, eb[k], fld, ord);
      res.quot[k] = res.quot[k] + Poly::term(fld, n, q, c);
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(p.front());
      p.erase(p.begin());
    }
  }
  res.rem = from_e(fld, n, rem);
  return res;
}

static GB run_buchberger(const std::vector<Poly>& gens, MonoOrder ord, Budget bud,
                         bool use_gm) {
  check_ring(gens);
  GB out;
  out.order = ord;
  if (gens.empty()) return out;
  Engine e{gens[0].field(), gens[0].nvars(), ord, &bud, false, 0, {}, {}, {}};
  e.run(gens, use_gm);
  for (auto& g : e.g) out.basis.push_back(from_e(gens[0].field(), gens[0].nvars(), g));
  return out;
}

GB buchberger(const std::vector<Poly>& gens, MonoOrder ord, Budget bud) {
  return run_buchberger(gens, ord, bud, true);
}

GB buchberger_naive(const std::vector<Poly>& gens, MonoOrder ord, Budget bud) {
  return run_buchberger(gens, ord, bud, false);
}

ExtGB buchberger_ext(const std::vector<Poly>& gens, MonoOrder ord, Budget bud) {
  check_ring(gens);
  ExtGB out;
  out.gb.order = ord;
  if (gens.empty()) return out;
  Engine e{gens[0].field(), gens[0].nvars(), ord, &bud, true, gens.size(), {}, {}, {}};
  e.run(gens, true);
  for (auto& g : e.g) out.gb.basis.push_back(from_e(gens[0].field(), gens[0].nvars(), g));
  out.rep = std::move(e.rep);
  return out;
}

std::optional<std::vector<Poly>> member_certificate(const Poly& f,
                                                    const std::vector<Poly>& gens,
                                                    MonoOrder ord, Budget bud) {
  ExtGB e = buchberger_ext(gens, ord, bud);
  DivisionResult d = divide(f, e.gb.basis, ord, bud);
  if (!d.rem.is_zero()) return std::nullopt;
  std::vector<Poly> cof(gens.size(), Poly::zero(f.field(), f.nvars()));
  for (std::size_t k = 0; k < e.gb.basis.size(); ++k)
    for (std::size_t j = 0; j < gens.size(); ++j)
      cof[j] = cof[j] + d.quot[k] * e.rep[k][j];
  return cof;
}

namespace {
// enumerate standard monomials depth-first; returns false on budget stop
bool walk_std(const std::vector<Mono>& leads, Mono& cur, std::size_t var,
              std::uint64_t maxdeg, Budget& bud, std::vector<Mono>* out,
              std::uint64_t& count) {
  for (auto& l : leads)
    if (l.divides(cur)) return true;  // pruned: everything below is non-standard
  bud.spend();
  ++count;
  if (out) out->push_back(cur);
  if (var == cur.e.size()) return true;
  for (std::size_t v = var; v < cur.e.size(); ++v) {
    if (cur.deg >= maxdeg) break;
    cur.e[v] += 1;
    cur.deg += 1;
    bool ok = walk_std(leads, cur, v, maxdeg, bud, out, count);
    cur.e[v] -= 1;
    cur.deg -= 1;
    if (!ok) return false;
  }
  return true;
}
}  // namespace

std::vector<Mono> monomials_below(std::size_t nvars, const std::vector<Mono>& leads,
                                  std::uint64_t maxdeg, Budget& bud) {
  std::vector<Mono> out;
  Mono cur(nvars);
  std::uint64_t count = 0;
  walk_std(leads, cur, 0, maxdeg, bud, &out, count);
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    return MonoOrder::degrevlex().cmp(a, b) < 0;
  });
  return out;
}

std::vector<Mono> standard_monomials_up_to(const GB& gb, std::uint64_t maxdeg,
                                           Budget& bud) {
  if (gb.contains_one()) return {};
  if (gb.basis.empty())
    throw invariant_error("standard monomials need the ring dimension; empty basis");
  std::vector<Mono> leads;
  std::size_t n = gb.basis[0].nvars();
  for (auto& b : gb.basis) leads.push_back(b.lead(gb.order).m);
  return monomials_below(n, leads, maxdeg, bud);
}

std::optional<std::uint64_t> staircase_dimension(const GB& gb, Budget& bud) {
  if (gb.contains_one()) return 0;
  if (gb.basis.empty()) return std::nullopt;  // zero ideal in >=1 variables
  std::size_t n = gb.basis[0].nvars();
  if (n == 0) return 1;
  // finite iff every variable has a pure power among the leads
  std::vector<bool> pure(n, false);
  std::vector<Mono> leads;
  for (auto& b : gb.basis) {
    const Mono& l = b.lead(gb.order).m;
    leads.push_back(l);
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (l.e[i]) {
        ++nz;
        which = i;
      }
    if (nz == 1) pure[which] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!pure[i]) return std::nullopt;
  std::uint64_t maxdeg = 0;
  for (auto& l : leads) maxdeg += l.deg;  // safe bound on standard monomial degree
  Mono cur(n);
  std::uint64_t count = 0;
  walk_std(leads, cur, 0, maxdeg, bud, nullptr, count);
  return count;
}

}  // namespace affq
