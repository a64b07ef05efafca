#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "affq/groebner.hpp"

namespace affq {

// Ideal given by generators, with per-order cached reduced Groebner bases.
// Copies share the cache; the fill is idempotent (at most one basis is ever
// stored per order, and a budget failure caches nothing).
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  explicit Ideal(std::vector<Poly> gens)
      : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

  const std::vector<Poly>& gens() const { return gens_; }

  const GB& gb(MonoOrder ord, Budget bud) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = std::make_pair(static_cast<int>(ord.kind), ord.block);
    auto it = cache_->gbs.find(key);
    if (it == cache_->gbs.end())
      it = cache_->gbs.emplace(key, buchberger(gens_, ord, bud)).first;
    return it->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::size_t>, GB> gbs;
  };
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace affq
