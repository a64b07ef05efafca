#include "affq/abgrp.hpp"

#include <algorithm>
#include <sstream>

namespace affq {

ZMat zmat(std::size_t rows, std::size_t cols) {
  return ZMat(rows, ZVec(cols, 0));
}

ZMat zmat_identity(std::size_t n) {
  ZMat m = zmat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  ZMat r = zmat(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw invariant_error("matrix product shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

ZVec zmat_apply(const ZMat& a, const ZVec& x) {
  ZVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw invariant_error("matrix apply shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  }
  return r;
}

std::vector<mpz_class> SmithForm::diag() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i)
    d.push_back(D[i][i]);
  return d;
}

namespace {

// Elementary operations on A maintaining m = U A V and Uinv m Vinv = A.
struct SnfWork {
  ZMat A, U, Uinv, V, Vinv;
  std::size_t r, c;

  explicit SnfWork(const ZMat& m) {
    r = m.size();
    c = r ? m[0].size() : 0;
    for (auto& row : m)
      if (row.size() != c) throw input_error("ragged integer matrix");
    A = m;
    U = zmat_identity(r);
    Uinv = zmat_identity(r);
    V = zmat_identity(c);
    Vinv = zmat_identity(c);
  }

  void rswap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(Uinv[i], Uinv[j]);
    for (std::size_t t = 0; t < r; ++t) std::swap(U[t][i], U[t][j]);
  }
  // row i += k * row j
  void raxpy(std::size_t i, std::size_t j, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t t = 0; t < c; ++t) A[i][t] += k * A[j][t];
    for (std::size_t t = 0; t < r; ++t) Uinv[i][t] += k * Uinv[j][t];
    for (std::size_t t = 0; t < r; ++t) U[t][j] -= k * U[t][i];
  }
  void rneg(std::size_t i) {
    for (std::size_t t = 0; t < c; ++t) A[i][t] = -A[i][t];
    for (std::size_t t = 0; t < r; ++t) Uinv[i][t] = -Uinv[i][t];
    for (std::size_t t = 0; t < r; ++t) U[t][i] = -U[t][i];
  }
  void cswap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < r; ++t) std::swap(A[t][i], A[t][j]);
    for (std::size_t t = 0; t < c; ++t) std::swap(Vinv[t][i], Vinv[t][j]);
    std::swap(V[i], V[j]);
  }
  // col i += k * col j
  void caxpy(std::size_t i, std::size_t j, const mpz_class& k) {
    if (k == 0) return;
    for (std::size_t t = 0; t < r; ++t) A[t][i] += k * A[t][j];
    for (std::size_t t = 0; t < c; ++t) Vinv[t][i] += k * Vinv[t][j];
    for (std::size_t t = 0; t < c; ++t) V[j][t] -= k * V[i][t];
  }
  void cneg(std::size_t i) {
    for (std::size_t t = 0; t < r; ++t) A[t][i] = -A[t][i];
    for (std::size_t t = 0; t < c; ++t) Vinv[t][i] = -Vinv[t][i];
    for (std::size_t t = 0; t < c; ++t) V[i][t] = -V[i][t];
  }

  // Clear row t and column t below/right of the pivot, shrinking the pivot
  // through remainders until it divides everything it meets.
  void reduce_at(std::size_t t) {
    // bring a minimal-magnitude nonzero entry to (t, t)
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (A[i][j] == 0) continue;
        if (!found || cmp(abs(A[i][j]), abs(A[bi][bj])) < 0) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return;
    rswap(t, bi);
    cswap(t, bj);
    while (true) {
      bool again = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q = A[i][t] / A[t][t];
        raxpy(i, t, -q);
        if (A[i][t] != 0) {  // strictly smaller remainder becomes the pivot
          rswap(t, i);
          again = true;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q = A[t][j] / A[t][t];
        caxpy(j, t, -q);
        if (A[t][j] != 0) {
          cswap(t, j);
          again = true;
        }
      }
      if (!again) break;
    }
    if (A[t][t] < 0) rneg(t);
  }

  void run() {
    std::size_t n = std::min(r, c);
    for (int guard = 0;; ++guard) {
      if (guard > 10000) throw invariant_error("smith normal form did not stabilize");
      for (std::size_t t = 0; t < n; ++t) reduce_at(t);
      bool fixed = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const mpz_class &a = A[i][i], &b = A[i + 1][i + 1];
        if (a == 0 && b != 0) {
          cswap(i, i + 1);
          rswap(i, i + 1);
          fixed = false;
          break;
        }
        if (a != 0 && b % a != 0) {
          caxpy(i, i + 1, 1);  // reintroduce b into column i, then re-reduce
          fixed = false;
          break;
        }
      }
      if (fixed) break;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const ZMat& m) {
  SnfWork w(m);
  w.run();
  return SmithForm{std::move(w.U), std::move(w.Uinv), std::move(w.A), std::move(w.V),
                   std::move(w.Vinv)};
}

std::optional<ZVec> int_solve(const ZMat& a, const ZVec& b) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0;
  if (b.size() != r) throw invariant_error("solve shape mismatch");
  SmithForm s = smith_normal_form(a);
  ZVec w = zmat_apply(s.Uinv, b);
  std::size_t n = std::min(r, c);
  ZVec y(c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class d = i < n ? s.D[i][i] : mpz_class(0);
    if (d == 0) {
      if (w[i] != 0) return std::nullopt;
    } else {
      if (w[i] % d != 0) return std::nullopt;
      y[i] = w[i] / d;
    }
  }
  return zmat_apply(s.Vinv, y);
}

std::vector<ZVec> int_kernel(const ZMat& a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0;
  SmithForm s = smith_normal_form(a);
  std::size_t n = std::min(r, c);
  std::vector<ZVec> out;
  for (std::size_t j = 0; j < c; ++j) {
    if (j < n && s.D[j][j] != 0) continue;
    ZVec col(c);
    for (std::size_t i = 0; i < c; ++i) col[i] = s.Vinv[i][j];
    out.push_back(std::move(col));
  }
  return out;
}

FgAbGroup FgAbGroup::make(std::size_t free_rank, std::vector<mpz_class> torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw input_error("torsion orders must be at least 2");
    if (i && torsion[i] % torsion[i - 1] != 0)
      throw input_error("torsion orders must form a divisibility chain");
  }
  FgAbGroup g;
  g.free_ = free_rank;
  g.tors_ = std::move(torsion);
  return g;
}

std::pair<FgAbGroup, ZMat> FgAbGroup::from_orders(const std::vector<mpz_class>& orders) {
  ZMat rels = zmat(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) throw input_error("generator orders must be nonnegative");
    rels[i][i] = orders[i];
  }
  return cokernel(orders.size(), rels);
}

std::pair<FgAbGroup, ZMat> FgAbGroup::cokernel(std::size_t rank, const ZMat& rels) {
  if (rels.empty()) {
    ZMat proj = zmat_identity(rank);
    return {make(rank, {}), proj};
  }
  if (rels.size() != rank) throw input_error("relation matrix has the wrong height");
  SmithForm s = smith_normal_form(rels);
  std::size_t n = std::min(rank, rels[0].size());
  std::vector<std::size_t> free_rows, tors_rows;
  std::vector<mpz_class> torsion;
  for (std::size_t i = 0; i < rank; ++i) {
    mpz_class d = i < n ? s.D[i][i] : mpz_class(0);
    if (d == 0)
      free_rows.push_back(i);
    else if (d >= 2) {
      tors_rows.push_back(i);
      torsion.push_back(d);
    }
  }
  ZMat proj;
  for (auto i : free_rows) proj.push_back(s.Uinv[i]);
  for (auto i : tors_rows) proj.push_back(s.Uinv[i]);
  return {make(free_rows.size(), std::move(torsion)), std::move(proj)};
}

std::optional<mpz_class> FgAbGroup::order() const {
  if (free_ > 0) return std::nullopt;
  mpz_class n = 1;
  for (auto& t : tors_) n *= t;
  return n;
}

FgAbGroup::El FgAbGroup::gen(std::size_t i) const {
  El e = zero();
  e.at(i) = 1;
  return e;
}

FgAbGroup::El FgAbGroup::reduce(El e) const {
  if (e.size() != ngens()) throw invariant_error("group element has the wrong length");
  for (std::size_t j = 0; j < tors_.size(); ++j) {
    mpz_class& x = e[free_ + j];
    x %= tors_[j];
    if (x < 0) x += tors_[j];
  }
  return e;
}

FgAbGroup::El FgAbGroup::add(const El& a, const El& b) const {
  El e(ngens());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.at(i) + b.at(i);
  return reduce(std::move(e));
}

FgAbGroup::El FgAbGroup::sub(const El& a, const El& b) const {
  El e(ngens());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.at(i) - b.at(i);
  return reduce(std::move(e));
}

FgAbGroup::El FgAbGroup::neg(const El& a) const { return sub(zero(), a); }

FgAbGroup::El FgAbGroup::scale(const mpz_class& k, const El& a) const {
  El e(ngens());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = k * a.at(i);
  return reduce(std::move(e));
}

bool FgAbGroup::is_zero(const El& a) const {
  El e = reduce(a);
  return std::all_of(e.begin(), e.end(), [](const mpz_class& x) { return x == 0; });
}

std::optional<mpz_class> FgAbGroup::element_order(const El& a) const {
  El e = reduce(a);
  for (std::size_t i = 0; i < free_; ++i)
    if (e[i] != 0) return std::nullopt;
  mpz_class ord = 1;
  for (std::size_t j = 0; j < tors_.size(); ++j) {
    if (e[free_ + j] == 0) continue;
    mpz_class g = gcd(e[free_ + j], tors_[j]);
    ord = lcm(ord, tors_[j] / g);
  }
  return ord;
}

std::vector<FgAbGroup::El> FgAbGroup::elements() const {
  auto n = order();
  if (!n) throw input_error("cannot enumerate an infinite group");
  if (!n->fits_ulong_p() || *n > 1'000'000) throw budget_error("group too large to enumerate");
  unsigned long total = n->get_ui();
  std::vector<El> out;
  out.reserve(total);
  for (unsigned long idx = 0; idx < total; ++idx) {
    El e(ngens(), 0);
    unsigned long t = idx;
    for (std::size_t j = 0; j < tors_.size(); ++j) {
      unsigned long m = tors_[j].get_ui();
      e[free_ + j] = t % m;
      t /= m;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string FgAbGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_ == 1) {
    os << "Z";
    first = false;
  } else if (free_ > 1) {
    os << "Z^" << free_;
    first = false;
  }
  for (auto& t : tors_) {
    if (!first) os << " + ";
    first = false;
    os << "Z/" << t;
  }
  return os.str();
}

FgAbGroup FgAbGroup::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw input_error("empty group description");
  if (s == "0" || s == "1") return trivial();
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
  bool saw_torsion = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw input_error("expected 'Z' in group description");
    ++pos;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw input_error("expected an exponent after 'Z^'");
      if (saw_torsion) throw input_error("free part must come before torsion");
      free_rank += std::stoul(s.substr(start, pos - start));
    } else if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw input_error("expected an order after 'Z/'");
      torsion.emplace_back(s.substr(start, pos - start));
      saw_torsion = true;
    } else {
      if (saw_torsion) throw input_error("free part must come before torsion");
      free_rank += 1;
    }
    if (pos < s.size()) {
      if (s[pos] != '+') throw input_error("expected '+' between group factors");
      ++pos;
    }
  }
  return make(free_rank, std::move(torsion));  // validates the chain
}

std::string FgAbGroup::el_str(const El& e) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ", " : "") << e[i];
  os << ')';
  return os.str();
}

GroupHom GroupHom::make(FgAbGroup src, FgAbGroup dst, ZMat mat) {
  if (mat.size() != dst.ngens()) throw input_error("hom matrix has the wrong height");
  for (auto& row : mat)
    if (row.size() != src.ngens()) throw input_error("hom matrix has the wrong width");
  GroupHom h;
  h.src_ = std::move(src);
  h.dst_ = std::move(dst);
  h.mat_ = std::move(mat);
  for (std::size_t j = 0; j < h.src_.torsion().size(); ++j) {
    std::size_t col = h.src_.free_rank() + j;
    FgAbGroup::El img = h.apply(h.src_.gen(col));
    if (!h.dst_.is_zero(h.dst_.scale(h.src_.torsion()[j], img)))
      throw input_error("hom does not respect torsion of generator " +
                        std::to_string(col));
  }
  return h;
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return make(g, g, zmat_identity(g.ngens()));
}

GroupHom GroupHom::zero(FgAbGroup src, FgAbGroup dst) {
  ZMat m = zmat(dst.ngens(), src.ngens());
  return make(std::move(src), std::move(dst), std::move(m));
}

FgAbGroup::El GroupHom::apply(const FgAbGroup::El& e) const {
  if (e.size() != src_.ngens()) throw invariant_error("hom applied to foreign element");
  return dst_.reduce(zmat_apply(mat_, e));
}

GroupHom GroupHom::after(const GroupHom& g) const {
  if (!(g.dst_ == src_)) throw invariant_error("hom composition mismatch");
  return make(g.src_, dst_, zmat_mul(mat_, g.mat_));
}

bool GroupHom::is_zero_map() const {
  for (std::size_t j = 0; j < src_.ngens(); ++j)
    if (!dst_.is_zero(apply(src_.gen(j)))) return false;
  return true;
}

namespace {

// columns n_j * e_{free + j}: the relation lattice of g inside Z^ngens
ZMat relation_lattice(const FgAbGroup& g) {
  ZMat r = zmat(g.ngens(), g.torsion().size());
  for (std::size_t j = 0; j < g.torsion().size(); ++j)
    r[g.free_rank() + j][j] = g.torsion()[j];
  return r;
}

}  // namespace

KernelResult kernel(const GroupHom& h) {
  const FgAbGroup& M = h.source();
  const FgAbGroup& N = h.target();
  std::size_t gm = M.ngens(), tn = N.torsion().size();
  // x in ker iff T x lies in the relation lattice of N: stack [T | -R_N]
  ZMat sys = zmat(N.ngens(), gm + tn);
  for (std::size_t i = 0; i < N.ngens(); ++i) {
    for (std::size_t j = 0; j < gm; ++j) sys[i][j] = h.matrix()[i][j];
    if (i >= N.free_rank()) sys[i][gm + (i - N.free_rank())] = -N.torsion()[i - N.free_rank()];
  }
  std::vector<ZVec> kb = int_kernel(sys);
  // generators of the kernel preimage lattice in Z^gm (always contains R_M)
  ZMat B = zmat(gm, kb.size());
  for (std::size_t j = 0; j < kb.size(); ++j)
    for (std::size_t i = 0; i < gm; ++i) B[i][j] = kb[j][i];
  std::size_t q = kb.size();
  // relations among those generators: B z == 0 in M, i.e. B z in R_M
  ZMat rm = relation_lattice(M);
  ZMat sys2 = zmat(gm, q + M.torsion().size());
  for (std::size_t i = 0; i < gm; ++i) {
    for (std::size_t j = 0; j < q; ++j) sys2[i][j] = B[i][j];
    for (std::size_t j = 0; j < M.torsion().size(); ++j) sys2[i][q + j] = -rm[i][j];
  }
  std::vector<ZVec> rel = int_kernel(sys2);
  ZMat C = zmat(q, rel.size());
  for (std::size_t j = 0; j < rel.size(); ++j)
    for (std::size_t i = 0; i < q; ++i) C[i][j] = rel[j][i];
  auto [K, proj] = FgAbGroup::cokernel(q, C);
  // The cokernel projection maps Z^q onto K; pick an integer preimage of each
  // canonical generator and push it through B into M.
  ZMat incl = zmat(M.ngens(), K.ngens());
  for (std::size_t t = 0; t < K.ngens(); ++t) {
    // find u in Z^q with proj(u) == gen(t) modulo K's torsion
    ZMat solve_sys = zmat(K.ngens(), q + K.torsion().size());
    ZMat rk = relation_lattice(K);
    for (std::size_t i = 0; i < K.ngens(); ++i) {
      for (std::size_t j = 0; j < q; ++j) solve_sys[i][j] = proj[i][j];
      for (std::size_t j = 0; j < K.torsion().size(); ++j)
        solve_sys[i][q + j] = -rk[i][j];
    }
    auto u = int_solve(solve_sys, K.gen(t));
    if (!u) throw invariant_error("cokernel projection is not surjective");
    ZVec x(gm, 0);
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t i = 0; i < gm; ++i) x[i] += B[i][j] * (*u)[j];
    FgAbGroup::El xe = M.reduce(x);
    for (std::size_t i = 0; i < gm; ++i) incl[i][t] = xe[i];
  }
  KernelResult out;
  out.group = K;
  out.incl = GroupHom::make(out.group, M, std::move(incl));
  return out;
}

SubgroupMembership::SubgroupMembership(FgAbGroup g, std::vector<FgAbGroup::El> gens)
    : g_(std::move(g)), gens_(std::move(gens)) {
  ZMat rl = relation_lattice(g_);
  sys_ = zmat(g_.ngens(), gens_.size() + g_.torsion().size());
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    FgAbGroup::El e = g_.reduce(gens_[j]);
    for (std::size_t i = 0; i < g_.ngens(); ++i) sys_[i][j] = e[i];
  }
  for (std::size_t j = 0; j < g_.torsion().size(); ++j)
    for (std::size_t i = 0; i < g_.ngens(); ++i)
      sys_[i][gens_.size() + j] = rl[i][j];
}

bool SubgroupMembership::contains(const FgAbGroup::El& e) const {
  return int_solve(sys_, g_.reduce(e)).has_value();
}

}  // namespace affq
