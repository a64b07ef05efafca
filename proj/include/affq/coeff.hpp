#pragma once

#include <gmpxx.h>

#include <string>

#include "affq/error.hpp"

namespace affq {

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
// Elements are carried as mpq_class in canonical form; for F_p that means an
// integer numerator in [0, p) with denominator 1, so equality of scalars is
// plain mpq equality.
class CoeffField {
 public:
  CoeffField() = default;

  static CoeffField rationals() { return CoeffField{}; }
  static CoeffField prime(unsigned long p);

  unsigned long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool operator==(const CoeffField&) const = default;

  // Canonical representative of x.
  mpq_class reduce(const mpq_class& x) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_long(long v) const { return reduce(mpq_class(v)); }

  std::string str(const mpq_class& a) const;
  std::string str() const;  // "Q" or "F<p>"

 private:
  unsigned long p_ = 0;  // 0 means the rationals
};

}  // namespace affq
