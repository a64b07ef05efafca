#include "affq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace affq {

namespace {
const MonoOrder kCanon = MonoOrder::degrevlex();

// sort descending, merge equal monomials, drop zeros
std::vector<Term> normalize(CoeffField f, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return kCanon.cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    mpq_class c = f.reduce(t.c);
    if (c == 0) continue;
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = f.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else {
      out.push_back({std::move(t.m), std::move(c)});
    }
  }
  return out;
}
}  // namespace

Poly Poly::constant(CoeffField f, std::size_t nvars, const mpq_class& c) {
  Poly p(f, nvars);
  mpq_class r = f.reduce(c);
  if (r != 0) p.t_.push_back({Mono(nvars), r});
  return p;
}

Poly Poly::variable(CoeffField f, std::size_t nvars, std::size_t i) {
  Mono m(nvars);
  m.e.at(i) = 1;
  m.deg = 1;
  return term(f, nvars, m, 1);
}

Poly Poly::term(CoeffField f, std::size_t nvars, Mono m, const mpq_class& c) {
  Poly p(f, nvars);
  mpq_class r = f.reduce(c);
  if (r != 0) p.t_.push_back({std::move(m), r});
  return p;
}

Poly Poly::from_terms(CoeffField f, std::size_t nvars, std::vector<Term> ts) {
  Poly p(f, nvars);
  p.t_ = normalize(f, std::move(ts));
  return p;
}

mpq_class Poly::constant_value() const {
  if (t_.empty()) return 0;
  if (t_.size() != 1 || !t_[0].m.is_one())
    throw invariant_error("constant_value on non-constant polynomial");
  return t_[0].c;
}

bool Poly::uses_var(std::size_t i) const {
  for (auto& t : t_)
    if (t.m.e[i] != 0) return true;
  return false;
}

mpq_class Poly::coeff_of(const Mono& m) const {
  for (auto& t : t_)
    if (t.m == m) return t.c;
  return 0;
}

Poly Poly::operator+(const Poly& o) const {
  if (n_ != o.n_ || !(f_ == o.f_)) throw invariant_error("polynomial ring mismatch in +");
  // merge of two sorted term lists
  Poly r(f_, n_);
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    int c;
    if (i == t_.size())
      c = -1;
    else if (j == o.t_.size())
      c = 1;
    else
      c = kCanon.cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      mpq_class s = f_.add(t_[i].c, o.t_[j].c);
      if (s != 0) r.t_.push_back({t_[i].m, s});
      ++i, ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.t_) t.c = f_.neg(t.c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Mono& m, const mpq_class& c) const {
  mpq_class cr = f_.reduce(c);
  if (cr == 0) return Poly(f_, n_);
  Poly r(f_, n_);
  r.t_.reserve(t_.size());
  for (auto& t : t_) {
    mpq_class p = f_.mul(t.c, cr);
    if (p != 0) r.t_.push_back({t.m.mul(m), p});
  }
  return r;  // multiplying by a fixed monomial preserves the term order
}

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_ || !(f_ == o.f_)) throw invariant_error("polynomial ring mismatch in *");
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (auto& a : t_)
    for (auto& b : o.t_) acc.push_back({a.m.mul(b.m), a.c * b.c});
  return from_terms(f_, n_, std::move(acc));
}

Poly Poly::scaled(const mpq_class& c) const { return mul_term(Mono(n_), c); }

Poly Poly::pow(std::uint64_t k) const {
  Poly r = Poly::constant(f_, n_, 1);
  Poly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> acc;
  for (auto& t : t_) {
    if (t.m.e[var] == 0) continue;
    Term d = t;
    d.c = t.c * static_cast<long>(t.m.e[var]);
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    acc.push_back(std::move(d));
  }
  return from_terms(f_, n_, std::move(acc));
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  return scaled(f_.inv(t_[0].c));
}

Poly Poly::substitute(const std::vector<Poly>& images, CoeffField tf, std::size_t tn) const {
  if (images.size() != n_) throw invariant_error("substitute: image count mismatch");
  Poly out(tf, tn);
  for (auto& t : t_) {
    Poly prod = Poly::constant(tf, tn, t.c);
    for (std::size_t i = 0; i < n_; ++i)
      if (t.m.e[i] != 0) prod = prod * images[i].pow(t.m.e[i]);
    out = out + prod;
  }
  return out;
}

const Term& Poly::lead(const MonoOrder& ord) const {
  if (t_.empty()) throw invariant_error("leading term of zero polynomial");
  if (ord.kind == OrderKind::Degrevlex) return t_[0];
  std::size_t best = 0;
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (ord.cmp(t_[i].m, t_[best].m) > 0) best = i;
  return t_[best];
}

std::string Poly::key() const {
  std::ostringstream os;
  os << n_ << '|';
  for (auto& t : t_) {
    os << t.c.get_str() << ':';
    for (std::size_t i = 0; i < n_; ++i)
      if (t.m.e[i]) os << i << '^' << t.m.e[i] << '.';
    os << ';';
  }
  return os.str();
}

// ---------------------------------------------------------------- printing

std::string Poly::str(const std::vector<std::string>& names) const {
  if (names.size() != n_) throw invariant_error("print: name count mismatch");
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    mpq_class c = t.c;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    mpq_class mag = neg ? mpq_class(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (t.m.e[i] != 1) mono += '^' + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := uint | ident | '(' expr ')' | '-' factor
//
// '/' requires a nonzero constant divisor, which is how rational literals
// like 3/2 come in.

namespace {
struct Parser {
  const std::string& s;
  std::size_t i = 0;
  CoeffField f;
  const std::vector<std::string>& names;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("parse error at position " + std::to_string(i) + " in \"" + s +
                      "\": " + what);
  }

  Poly expr() {
    Poly r = term();
    for (;;) {
      skip();
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division requires a nonzero constant");
        r = r.scaled(f.inv(d.constant_value()));
      } else {
        return r;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    skip();
    if (eat('^')) {
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
      std::uint64_t k = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        k = k * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (k > 100000) fail("exponent too large");
        ++i;
      }
      return b.pow(k);
    }
    return b;
  }

  Poly base() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++i;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
      return Poly::constant(f, names.size(), mpq_class(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        id += s[i++];
      for (std::size_t v = 0; v < names.size(); ++v)
        if (names[v] == id) return Poly::variable(f, names.size(), v);
      fail("unknown variable '" + id + "'");
    }
    fail("unexpected character");
  }
};
}  // namespace

Poly Poly::parse(const std::string& text, CoeffField f,
                 const std::vector<std::string>& names) {
  Parser p{text, 0, f, names};
  Poly r = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace affq
