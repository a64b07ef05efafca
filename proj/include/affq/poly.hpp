#pragma once

#include <string>
#include <vector>

#include "affq/coeff.hpp"
#include "affq/mono.hpp"

namespace affq {

struct Term {
  Mono m;
  mpq_class c;
};

// Sparse multivariate polynomial.  Terms are kept sorted strictly descending
// in degrevlex with canonical nonzero coefficients, so equality is structural.
// Variable names live in the surrounding algebra, not here.
class Poly {
 public:
  Poly() = default;
  Poly(CoeffField f, std::size_t nvars) : f_(f), n_(nvars) {}

  static Poly zero(CoeffField f, std::size_t nvars) { return Poly(f, nvars); }
  static Poly constant(CoeffField f, std::size_t nvars, const mpq_class& c);
  static Poly variable(CoeffField f, std::size_t nvars, std::size_t i);
  static Poly term(CoeffField f, std::size_t nvars, Mono m, const mpq_class& c);
  static Poly from_terms(CoeffField f, std::size_t nvars, std::vector<Term> ts);

  const CoeffField& field() const { return f_; }
  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  mpq_class constant_value() const;  // requires is_constant()
  std::uint64_t total_degree() const { return t_.empty() ? 0 : t_[0].m.deg; }
  bool uses_var(std::size_t i) const;
  mpq_class coeff_of(const Mono& m) const;

  bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;        // c * this
  Poly mul_term(const Mono& m, const mpq_class& c) const;
  Poly pow(std::uint64_t k) const;
  Poly derivative(std::size_t var) const;
  Poly monic() const;  // divide by leading (degrevlex) coefficient

  // Raw substitution: variable i -> images[i] (all in a common target ring).
  // No quotient reduction is applied.
  Poly substitute(const std::vector<Poly>& images, CoeffField tf, std::size_t tn) const;

  // Leading term under an arbitrary order (degrevlex leading term is t_[0]).
  const Term& lead(const MonoOrder& ord) const;

  // Stable serialization, usable as a cache key.
  std::string key() const;

  std::string str(const std::vector<std::string>& names) const;
  static Poly parse(const std::string& text, CoeffField f,
                    const std::vector<std::string>& names);

 private:
  CoeffField f_;
  std::size_t n_ = 0;
  std::vector<Term> t_;
};

inline bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

}  // namespace affq
