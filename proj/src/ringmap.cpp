#include "affq/ringmap.hpp"

namespace affq {

RingMap RingMap::make(PresentedAlgebra src, PresentedAlgebra dst,
                      std::vector<Poly> images, Budget bud) {
  if (images.size() != src.nvars())
    throw invariant_error("ring map needs one image per source variable");
  for (auto& p : images)
    if (p.nvars() != dst.nvars() || !(p.field() == dst.field()))
      throw invariant_error("ring map image not in the target ring");
  RingMap m;
  m.src_ = std::move(src);
  m.dst_ = std::move(dst);
  m.img_ = std::move(images);
  for (auto& p : m.img_) p = m.dst_.nf(p, bud);
  for (auto& r : m.src_.relations().gens()) {
    Poly im = m.dst_.nf(r.substitute(m.img_, m.dst_.field(), m.dst_.nvars()), bud);
    if (!im.is_zero())
      throw input_error("map does not respect relation " + m.src_.str(r) +
                        " (image " + m.dst_.str(im) + ")");
  }
  return m;
}

RingMap RingMap::identity(const PresentedAlgebra& a) {
  std::vector<Poly> img;
  for (std::size_t i = 0; i < a.nvars(); ++i) img.push_back(a.nf(a.var(i)));
  RingMap m;
  m.src_ = a;
  m.dst_ = a;
  m.img_ = std::move(img);
  return m;
}

RingMap RingMap::parse(const PresentedAlgebra& src, const PresentedAlgebra& dst,
                       const std::map<std::string, std::string>& images, Budget bud) {
  std::vector<Poly> img(src.nvars(), dst.zero());
  std::vector<bool> have(src.nvars(), false);
  for (auto& [name, text] : images) {
    std::size_t i = src.var_index(name);
    img[i] = dst.parse(text);
    have[i] = true;
  }
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    if (have[i]) continue;
    auto owner = src.companion_owner(i);
    if (!owner || !have[*owner])
      throw input_error("missing image for variable '" + src.names()[i] + "'");
    auto inv = dst.unit_inverse(img[*owner], bud);
    if (!inv)
      throw input_error("image of inverted variable '" + src.names()[*owner] +
                        "' is not a unit");
    img[i] = *inv;
  }
  return make(src, dst, std::move(img), bud);
}

Poly RingMap::apply_raw(const Poly& f) const {
  return f.substitute(img_, dst_.field(), dst_.nvars());
}

Poly RingMap::apply(const Poly& f, Budget bud) const {
  if (f.nvars() != src_.nvars() || !(f.field() == src_.field()))
    throw invariant_error("ring map applied to foreign polynomial");
  // power cache with interleaved reduction keeps intermediate results small
  std::map<std::pair<std::size_t, std::uint32_t>, Poly> cache;
  auto power = [&](std::size_t v, std::uint32_t e) -> Poly {
    auto it = cache.find({v, e});
    if (it != cache.end()) return it->second;
    Poly r = dst_.one();
    Poly b = img_[v];
    std::uint32_t k = e;
    while (k) {
      if (k & 1) r = dst_.nf(r * b, bud);
      k >>= 1;
      if (k) b = dst_.nf(b * b, bud);
    }
    cache.emplace(std::make_pair(v, e), r);
    return r;
  };
  Poly out = dst_.zero();
  for (auto& t : f.terms()) {
    Poly prod = dst_.constant(t.c);
    for (std::size_t v = 0; v < src_.nvars(); ++v)
      if (t.m.e[v]) prod = dst_.nf(prod * power(v, t.m.e[v]), bud);
    out = out + prod;
  }
  return dst_.nf(out, bud);
}

RingMap RingMap::after(const RingMap& g, Budget bud) const {
  if (!g.target().same(src_))
    throw invariant_error("composition mismatch: inner target != outer source");
  std::vector<Poly> img;
  for (auto& p : g.images()) img.push_back(apply(p, bud));
  return make(g.source(), dst_, std::move(img), bud);
}

}  // namespace affq
