#include "affq/points.hpp"

#include <sstream>

namespace affq {

namespace {

// dense F_p[z] helpers on little-endian coefficient vectors (no leading-zero
// trimming guaranteed; deg() scans)
using Pol = std::vector<unsigned long>;

std::size_t deg(const Pol& a) {
  std::size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d;  // 0 means the zero polynomial; otherwise degree + 1
}

Pol pmul(const Pol& a, const Pol& b, unsigned long p) {
  if (a.empty() || b.empty()) return {};
  Pol c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

// remainder of a modulo monic b
Pol pmod(Pol a, const Pol& b, unsigned long p) {
  std::size_t db = deg(b);
  while (true) {
    std::size_t da = deg(a);
    if (da < db) break;
    unsigned long c = a[da - 1];
    std::size_t shift = da - db;
    for (std::size_t i = 0; i < db; ++i)
      a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
  }
  a.resize(db ? db - 1 : 0);
  return a;
}

unsigned long modinv(unsigned long a, unsigned long p) {
  long t = 0, nt = 1;
  long r = static_cast<long>(p), nr = static_cast<long>(a % p);
  while (nr) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<long>(p);
  return static_cast<unsigned long>(t);
}

bool irreducible(const Pol& m, unsigned k, unsigned long p) {
  // trial division by every monic polynomial of degree 1..k/2
  for (unsigned d = 1; 2 * d <= k; ++d) {
    unsigned long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long idx = 0; idx < count; ++idx) {
      Pol div(d + 1, 0);
      unsigned long t = idx;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = t % p;
        t /= p;
      }
      div[d] = 1;
      if (deg(pmod(m, div, p)) == 0) return false;
    }
  }
  return true;
}

}  // namespace

Fq Fq::make(unsigned long p, unsigned k) {
  mpz_class z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw input_error("field order must be a prime power");
  if (k == 0 || k > 20) throw input_error("extension degree out of range");
  Fq f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (f.q_ > 4'000'000'000UL / p) throw input_error("field order too large");
    f.q_ *= p;
  }
  // smallest monic irreducible of degree k, coefficients read as a base-p
  // number c_{k-1}..c_0
  for (unsigned long idx = 0;; ++idx) {
    if (idx >= f.q_) throw invariant_error("no irreducible polynomial found");
    Pol m(k + 1, 0);
    unsigned long t = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (irreducible(m, k, p)) {
      f.mod_.assign(m.begin(), m.begin() + k);
      break;
    }
  }
  return f;
}

Fq Fq::of_order(unsigned long q) {
  if (q < 2) throw input_error("field order must be a prime power");
  unsigned long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q prime
  unsigned k = 0;
  unsigned long t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) throw input_error(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

Fq::El Fq::gen() const {
  El a(k_, 0);
  if (k_ > 1)
    a[1] = 1;
  else
    a[0] = mod_[0] ? p_ - mod_[0] : 0;  // z == -c_0 when k == 1
  return a;
}

Fq::El Fq::from_base(unsigned long r) const {
  El a(k_, 0);
  a[0] = r % p_;
  return a;
}

bool Fq::is_zero(const El& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

Fq::El Fq::add(const El& a, const El& b) const {
  El c(k_);
  for (unsigned i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
  return c;
}

Fq::El Fq::sub(const El& a, const El& b) const {
  El c(k_);
  for (unsigned i = 0; i < k_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
  return c;
}

Fq::El Fq::neg(const El& a) const { return sub(zero(), a); }

Fq::El Fq::mul(const El& a, const El& b) const {
  Pol m(mod_);
  m.push_back(1);
  Pol c = pmod(pmul(a, b, p_), m, p_);
  c.resize(k_, 0);
  return c;
}

Fq::El Fq::inv(const El& a) const {
  if (is_zero(a)) throw invariant_error("inverse of zero field element");
  // extended Euclid in F_p[z]
  Pol r0(mod_);
  r0.push_back(1);
  Pol r1(a);
  Pol s0 = {}, s1 = {1};
  // gcd(a, modulus) = 1, so the remainder chain ends in a nonzero constant
  while (deg(r1) > 1) {
    std::size_t d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // kill the lead of r0 with a scalar-shift multiple of r1
    unsigned long c = (r0[d0 - 1] * modinv(r1[d1 - 1], p_)) % p_;
    std::size_t shift = d0 - d1;
    auto axpy = [&](Pol& x, const Pol& y) {
      if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
      for (std::size_t i = 0; i < y.size(); ++i)
        x[shift + i] = (x[shift + i] + p_ * p_ - c * y[i] % p_) % p_;
    };
    axpy(r0, r1);
    axpy(s0, s1);
    if (deg(r0) < deg(r1)) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  if (deg(r1) != 1) throw invariant_error("modulus not irreducible");
  unsigned long c = modinv(r1[0], p_);
  El out(k_, 0);
  for (std::size_t i = 0; i < s1.size() && i < k_; ++i) out[i] = (s1[i] * c) % p_;
  return out;
}

Fq::El Fq::pow(const El& a, unsigned long e) const {
  El r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Fq::El Fq::element_at(unsigned long idx) const {
  El a(k_);
  for (unsigned i = 0; i < k_; ++i) {
    a[i] = idx % p_;
    idx /= p_;
  }
  return a;
}

unsigned long Fq::index_of(const El& a) const {
  unsigned long idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a[i] % p_;
  return idx;
}

std::string Fq::str(const El& a) const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = k_; i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0 && a[i] != 1) os << "*";
    if (i == 1) os << "z";
    if (i > 1) os << "z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Fq::El Fq::eval(const Poly& f, const std::vector<El>& point) const {
  El acc = zero();
  for (auto& t : f.terms()) {
    // canonical coefficients are integers with denominator 1 (mod p reduced)
    mpz_class num = t.c.get_num() % static_cast<long>(p_);
    if (num < 0) num += static_cast<long>(p_);
    El term = from_base(num.get_ui());
    for (std::size_t v = 0; v < t.m.e.size(); ++v)
      if (t.m.e[v]) term = mul(term, pow(point[v], t.m.e[v]));
    acc = add(acc, term);
  }
  return acc;
}

std::vector<FqPoint> rational_points(const PresentedAlgebra& a, unsigned long q,
                                     std::uint64_t cap) {
  if (a.field().is_rational())
    throw input_error("point enumeration needs a finite coefficient field");
  Fq f = Fq::of_order(q);
  if (f.p() != a.field().characteristic())
    throw input_error("field order has the wrong characteristic");
  std::size_t n = a.nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / q)
      throw budget_error("point enumeration over " + std::to_string(q) + "^" +
                         std::to_string(n) + " points exceeds the cap");
    total *= q;
  }
  const std::vector<Poly>& rels = a.relations().gens();
  std::vector<FqPoint> out;
  std::vector<Fq::El> coords(n, f.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t v = 0; v < n; ++v) {
      coords[v] = f.element_at(t % q);
      t /= q;
    }
    bool ok = true;
    for (auto& r : rels)
      if (!f.is_zero(f.eval(r, coords))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(FqPoint{f.p(), f.k(), coords});
  }
  return out;
}

std::string point_str(const PresentedAlgebra& a, const FqPoint& pt) {
  Fq f = Fq::make(pt.p, pt.k);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pt.coords.size(); ++i)
    os << (i ? ", " : "") << a.names()[i] << "=" << f.str(pt.coords[i]);
  os << ')';
  return os.str();
}

}  // namespace affq
