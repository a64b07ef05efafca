#pragma once

#include "affq/algebra.hpp"

namespace affq {

// The field F_q, q = p^k, presented as F_p[z] modulo the lexicographically
// smallest monic irreducible of degree k (deterministic, so two calls agree on
// labels).  Elements are coefficient vectors of length k, little-endian in z.
class Fq {
 public:
  using El = std::vector<unsigned long>;

  static Fq make(unsigned long p, unsigned k);
  // q = p^k for a prime p; rejects non prime powers.
  static Fq of_order(unsigned long q);

  unsigned long p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned long size() const { return q_; }
  // modulus coefficients c_0..c_{k-1} of the irreducible z^k + sum c_i z^i
  const std::vector<unsigned long>& modulus() const { return mod_; }

  El zero() const { return El(k_, 0); }
  El one() const { return from_base(1); }
  El gen() const;  // the class of z
  El from_base(unsigned long r) const;

  bool is_zero(const El& a) const;
  El add(const El& a, const El& b) const;
  El sub(const El& a, const El& b) const;
  El neg(const El& a) const;
  El mul(const El& a, const El& b) const;
  El inv(const El& a) const;
  El pow(const El& a, unsigned long e) const;

  // enumeration: index in [0, q) <-> element, mixed-radix little-endian
  El element_at(unsigned long idx) const;
  unsigned long index_of(const El& a) const;

  std::string str(const El& a) const;

  // Evaluate a polynomial with canonical F_p coefficients at a point.
  El eval(const Poly& f, const std::vector<El>& point) const;

 private:
  unsigned long p_ = 0, q_ = 0;
  unsigned k_ = 0;
  std::vector<unsigned long> mod_;
};

struct FqPoint {
  unsigned long p = 0;
  unsigned k = 0;
  std::vector<Fq::El> coords;  // one per algebra variable, companions included
};

// All F_q-points of an affine algebra over F_p: assignments to every variable
// (companions included) under which all relations vanish, ordered by
// enumeration index.  Throws budget_error if q^nvars exceeds cap.
std::vector<FqPoint> rational_points(const PresentedAlgebra& a, unsigned long q,
                                     std::uint64_t cap = 2'000'000);

std::string point_str(const PresentedAlgebra& a, const FqPoint& pt);

}  // namespace affq
