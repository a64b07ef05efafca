#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "affq/error.hpp"

namespace affq {

// Exponent vector with cached total degree.
struct Mono {
  std::vector<std::uint32_t> e;
  std::uint64_t deg = 0;

  Mono() = default;
  explicit Mono(std::size_t nvars) : e(nvars, 0) {}
  explicit Mono(std::vector<std::uint32_t> exps)
      : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), std::uint64_t{0})) {}

  std::size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  bool operator==(const Mono& o) const { return e == o.e; }

  Mono mul(const Mono& o) const {
    Mono r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    r.deg = deg + o.deg;
    return r;
  }

  bool divides(const Mono& o) const {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // *this / o; caller guarantees divisibility.
  Mono quot(const Mono& o) const {
    Mono r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    r.deg = deg - o.deg;
    return r;
  }

  Mono lcm(const Mono& o) const {
    Mono r(*this);
    r.deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }

  bool coprime(const Mono& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && o.e[i] != 0) return false;
    return true;
  }
};

enum class OrderKind : std::uint8_t { Degrevlex, Lex, Elim };

// Monomial order.  Elim compares the block of variables [0, block) first
// (degrevlex within the block), so a Groebner basis under Elim eliminates
// those leading variables.
struct MonoOrder {
  OrderKind kind = OrderKind::Degrevlex;
  std::size_t block = 0;

  static MonoOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
  static MonoOrder lex() { return {OrderKind::Lex, 0}; }
  static MonoOrder elim(std::size_t first_block) { return {OrderKind::Elim, first_block}; }

  bool operator==(const MonoOrder&) const = default;

  // > 0 iff a > b.
  int cmp(const Mono& a, const Mono& b) const {
    switch (kind) {
      case OrderKind::Degrevlex:
        return cmp_drl(a, b, 0, a.e.size(), a.deg, b.deg);
      case OrderKind::Lex: {
        for (std::size_t i = 0; i < a.e.size(); ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      }
      case OrderKind::Elim: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < block; ++i) da += a.e[i];
        for (std::size_t i = 0; i < block; ++i) db += b.e[i];
        if (int c = cmp_drl(a, b, 0, block, da, db)) return c;
        return cmp_drl(a, b, block, a.e.size(), a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }

 private:
  // degrevlex restricted to positions [lo, hi) with the given partial degrees
  static int cmp_drl(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi,
                     std::uint64_t da, std::uint64_t db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace affq
