#include "affq/modlin.hpp"

#include <algorithm>

namespace affq {

namespace {

// One term of a module element: position, monomial, coefficient.  Elements are
// kept sorted position-over-term: ascending position, degrevlex descending
// within a position, so the front term is the lead.
struct VTerm {
  std::size_t pos;
  Mono m;
  mpq_class c;
};
using EVec = std::vector<VTerm>;

// > 0 iff (pa, ma) > (pb, mb); a smaller position wins.
int vt_cmp(std::size_t pa, const Mono& ma, std::size_t pb, const Mono& mb) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return MonoOrder::degrevlex().cmp(ma, mb);
}

EVec to_e(const PolyVec& v) {
  EVec out;
  for (std::size_t pos = 0; pos < v.size(); ++pos)
    for (const Term& t : v[pos].terms()) out.push_back({pos, t.m, t.c});
  return out;
}

PolyVec from_e(CoeffField f, std::size_t n, std::size_t width, const EVec& t) {
  std::vector<std::vector<Term>> split(width);
  for (const VTerm& vt : t) split[vt.pos].push_back({vt.m, vt.c});
  PolyVec out;
  out.reserve(width);
  for (auto& ts : split) out.push_back(Poly::from_terms(f, n, std::move(ts)));
  return out;
}

// a - c * x^m * b, both sorted; positions of b pass through unchanged
EVec vsubmul(const EVec& a, const mpq_class& c, const Mono& m, const EVec& b,
             CoeffField f) {
  EVec r;
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
      cmp = vt_cmp(a[i].pos, a[i].m, b[j].pos, bm);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      mpq_class v = f.mul(f.neg(c), b[j].c);
      if (v != 0) r.push_back({b[j].pos, std::move(bm), std::move(v)});
      ++j;
    } else {
      mpq_class v = f.sub(a[i].c, f.mul(c, b[j].c));
      if (v != 0) r.push_back({a[i].pos, std::move(bm), std::move(v)});
      ++i, ++j;
    }
  }
  return r;
}

struct MEngine {
  CoeffField f;
  std::size_t n = 0;      // ring variables
  std::size_t width = 0;  // module positions
  Budget* bud = nullptr;

  std::vector<EVec> g;  // current basis, lead coefficient 1
  struct Pair {
    std::size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;

  std::size_t lpos(std::size_t i) const { return g[i][0].pos; }
  const Mono& lm(std::size_t i) const { return g[i][0].m; }

  // Fully reduce p against the basis (every term, not just the lead).
  EVec reduce(EVec p) {
    EVec rem;
    while (!p.empty()) {
      bool hit = false;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (lpos(k) != p[0].pos || !lm(k).divides(p[0].m)) continue;
        bud->spend();
        p = vsubmul(p, p[0].c, p[0].m.quot(lm(k)), g[k], f);
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

  void append(EVec h) {
    mpq_class c = h[0].c;
    if (c != 1) {
      mpq_class ci = f.inv(c);
      for (auto& t : h) t.c = f.mul(t.c, ci);
    }
    std::size_t t = g.size();
    g.push_back(std::move(h));
    // keep every same-position pair: the coprime shortcut is unsound here
    for (std::size_t i = 0; i < t; ++i)
      if (lpos(i) == lpos(t)) pairs.push_back({i, t, lm(i).lcm(lm(t))});
  }

  void run(std::vector<EVec> gens) {
    for (EVec& s : gens) {
      EVec h = reduce(std::move(s));
      if (!h.empty()) append(std::move(h));
    }
    while (!pairs.empty()) {
      bud->spend();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        int c = vt_cmp(lpos(pairs[k].i), pairs[k].lcm, lpos(pairs[best].i),
                       pairs[best].lcm);
        if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                 (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
          best = k;
      }
      Pair p = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

      // S-vector of two monic elements with the same lead position
      Mono qi = p.lcm.quot(lm(p.i)), qj = p.lcm.quot(lm(p.j));
      EVec zero;
      EVec s = vsubmul(zero, mpq_class(-1), qi, g[p.i], f);  // x^qi * g_i
      s = vsubmul(s, mpq_class(1), qj, g[p.j], f);           // minus x^qj * g_j
      EVec h = reduce(std::move(s));
      if (!h.empty()) append(std::move(h));
    }
    minimalize_autoreduce();
  }

  void minimalize_autoreduce() {
    std::vector<bool> dead(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size() && !dead[i]; ++j)
        if (i != j && !dead[j] && lpos(j) == lpos(i) && lm(j).divides(lm(i)))
          dead[i] = (lm(i) == lm(j)) ? (j < i) : true;
    std::vector<EVec> kept;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!dead[i]) kept.push_back(std::move(g[i]));
    g = std::move(kept);

    for (std::size_t pass = 0; pass < g.size(); ++pass) {
      EVec cur = std::move(g[pass]);
      std::vector<EVec> others;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (k != pass) others.push_back(g[k]);
      MEngine sub{f, n, width, bud, std::move(others), {}};
      EVec red = sub.reduce(std::move(cur));
      if (red.empty()) throw invariant_error("autoreduction killed a minimal basis element");
      mpq_class c = red[0].c;
      if (c != 1) {
        mpq_class ci = f.inv(c);
        for (auto& t : red) t.c = f.mul(t.c, ci);
      }
      g[pass] = std::move(red);
    }

    std::sort(g.begin(), g.end(), [](const EVec& a, const EVec& b) {
      return vt_cmp(a[0].pos, a[0].m, b[0].pos, b[0].m) < 0;
    });
  }
};

void check_vec(const PresentedAlgebra& a, std::size_t width, const PolyVec& v) {
  if (v.size() != width)
    throw input_error("module vector has the wrong number of positions");
  for (const Poly& p : v)
    if (p.nvars() != a.nvars() || !(p.field() == a.field()))
      throw input_error("module vector entry from the wrong ring");
}

// h*e_i generators folding the owner's relation ideal into a width-wide module
void push_ideal_columns(const PresentedAlgebra& a, std::size_t width,
                        std::vector<EVec>& out) {
  for (const Poly& h : a.relations().gens()) {
    if (h.is_zero()) continue;
    for (std::size_t i = 0; i < width; ++i) {
      EVec e;
      for (const Term& t : h.terms()) e.push_back({i, t.m, t.c});
      out.push_back(std::move(e));
    }
  }
}

}  // namespace

PolyVec vec_zero(const PresentedAlgebra& a, std::size_t positions) {
  return PolyVec(positions, a.zero());
}

PolyVec vec_unit(const PresentedAlgebra& a, std::size_t positions, std::size_t i) {
  if (i >= positions) throw input_error("unit vector position out of range");
  PolyVec v(positions, a.zero());
  v[i] = a.one();
  return v;
}

bool vec_is_zero(const PolyVec& v) {
  for (const Poly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

ModuleGB::ModuleGB(PresentedAlgebra owner, std::size_t positions,
                   std::vector<PolyVec> gens, Budget bud)
    : a_(std::move(owner)), width_(positions) {
  std::vector<EVec> in;
  for (const PolyVec& v : gens) {
    check_vec(a_, width_, v);
    EVec e = to_e(v);
    if (!e.empty()) in.push_back(std::move(e));
  }
  push_ideal_columns(a_, width_, in);
  MEngine e{a_.field(), a_.nvars(), width_, &bud, {}, {}};
  e.run(std::move(in));
  for (auto& h : e.g) basis_.push_back(from_e(a_.field(), a_.nvars(), width_, h));
}

PolyVec ModuleGB::nf(const PolyVec& v, Budget bud) const {
  check_vec(a_, width_, v);
  MEngine e{a_.field(), a_.nvars(), width_, &bud, {}, {}};
  for (const PolyVec& b : basis_) e.g.push_back(to_e(b));
  return from_e(a_.field(), a_.nvars(), width_, e.reduce(to_e(v)));
}

bool ModuleGB::contains(const PolyVec& v, Budget bud) const {
  return vec_is_zero(nf(v, bud));
}

std::vector<PolyVec> module_kernel_mod(const PresentedAlgebra& owner,
                                       std::size_t positions,
                                       const std::vector<PolyVec>& cols,
                                       const std::vector<PolyVec>& rels,
                                       Budget bud) {
  const std::size_t m = cols.size();
  const std::size_t aug = positions + m;
  // Columns are tagged with a unit in their own tail slot; target-side vectors
  // (relations of the target and ideal columns) carry no tag.  A basis element
  // whose lead sits in the tail block then has zero target block, and those
  // elements generate all coefficient vectors sent into the allowed span.
  std::vector<EVec> gens;
  for (std::size_t j = 0; j < m; ++j) {
    check_vec(owner, positions, cols[j]);
    EVec e = to_e(cols[j]);
    e.push_back({positions + j, Mono(owner.nvars()), owner.field().one()});
    gens.push_back(std::move(e));
  }
  for (const PolyVec& w : rels) {
    check_vec(owner, positions, w);
    EVec e = to_e(w);
    if (!e.empty()) gens.push_back(std::move(e));
  }
  push_ideal_columns(owner, positions, gens);

  MEngine e{owner.field(), owner.nvars(), aug, &bud, {}, {}};
  e.run(std::move(gens));

  std::vector<PolyVec> out;
  for (const EVec& h : e.g) {
    if (h[0].pos < positions) continue;  // lead still in the target block
    EVec shifted;
    shifted.reserve(h.size());
    for (const VTerm& t : h) shifted.push_back({t.pos - positions, t.m, t.c});
    PolyVec c = from_e(owner.field(), owner.nvars(), m, shifted);
    bool nonzero = false;
    for (Poly& p : c) {
      p = owner.nf(p, bud);
      nonzero = nonzero || !p.is_zero();
    }
    if (nonzero) out.push_back(std::move(c));
  }
  return out;
}

std::vector<PolyVec> module_kernel(const PresentedAlgebra& owner, std::size_t positions,
                                   const std::vector<PolyVec>& cols, Budget bud) {
  return module_kernel_mod(owner, positions, cols, {}, bud);
}

FpModule fp_module(PresentedAlgebra owner, std::size_t gens,
                   std::vector<PolyVec> rels, Budget bud) {
  FpModule m;
  m.owner = std::move(owner);
  m.gens = gens;
  for (PolyVec& r : rels) {
    check_vec(m.owner, gens, r);
    PolyVec v;
    v.reserve(gens);
    bool nonzero = false;
    for (Poly& p : r) {
      Poly q = m.owner.nf(p, bud);
      nonzero = nonzero || !q.is_zero();
      v.push_back(std::move(q));
    }
    if (nonzero) m.rels.push_back(std::move(v));
  }
  return m;
}

bool fp_module_iso(const FpModule& src, const FpModule& dst,
                   const std::vector<PolyVec>& cols, Budget bud) {
  if (!src.owner.same(dst.owner))
    throw input_error("module isomorphism needs a common owner");
  if (cols.size() != src.gens)
    throw input_error("isomorphism candidate has the wrong number of columns");
  for (const PolyVec& c : cols) check_vec(dst.owner, dst.gens, c);

  // well-defined: source relations land in the target relation span
  ModuleGB target_rels(dst.owner, dst.gens, dst.rels, bud);
  for (const PolyVec& r : src.rels) {
    PolyVec img = vec_zero(dst.owner, dst.gens);
    for (std::size_t j = 0; j < src.gens; ++j)
      for (std::size_t i = 0; i < dst.gens; ++i)
        img[i] = img[i] + r[j] * cols[j][i];
    for (Poly& p : img) p = dst.owner.nf(p, bud);
    if (!target_rels.contains(img, bud)) return false;
  }

  // surjective: every target generator is hit modulo the target relations
  std::vector<PolyVec> span = cols;
  for (const PolyVec& r : dst.rels) span.push_back(r);
  ModuleGB image(dst.owner, dst.gens, span, bud);
  for (std::size_t i = 0; i < dst.gens; ++i)
    if (!image.contains(vec_unit(dst.owner, dst.gens, i), bud)) return false;

  // injective: anything sent into the target relation span was already a
  // source relation
  ModuleGB source_rels(src.owner, src.gens, src.rels, bud);
  for (const PolyVec& k : module_kernel_mod(dst.owner, dst.gens, cols, dst.rels, bud))
    if (!source_rels.contains(k, bud)) return false;
  return true;
}

}  // namespace affq
