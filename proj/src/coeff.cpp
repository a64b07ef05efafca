#include "affq/coeff.hpp"

namespace affq {

CoeffField CoeffField::prime(unsigned long p) {
  mpz_class z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw input_error("field characteristic must be prime, got " + std::to_string(p));
  CoeffField f;
  f.p_ = p;
  return f;
}

mpq_class CoeffField::reduce(const mpq_class& x) const {
  if (p_ == 0) {
    mpq_class r = x;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<long>(p_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw invariant_error("denominator divisible by field characteristic");
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw invariant_error("non-invertible denominator in prime field");
    num = (num * dinv) % p;
  }
  return mpq_class(num);
}

mpq_class CoeffField::inv(const mpq_class& a) const {
  mpq_class r = reduce(a);
  if (r == 0) throw invariant_error("division by zero in coefficient field");
  if (p_ == 0) return mpq_class(1) / r;
  mpz_class p(static_cast<long>(p_));
  mpz_class ai;
  if (mpz_invert(ai.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw invariant_error("non-invertible element in prime field");
  return mpq_class(ai);
}

std::string CoeffField::str(const mpq_class& a) const { return reduce(a).get_str(); }

std::string CoeffField::str() const {
  return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

}  // namespace affq
