#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "affq/abgrp.hpp"

using namespace affq;

namespace {

bool is_identity(const ZMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form: frozen shapes") {
  auto s = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(s.diag() == std::vector<mpz_class>{1, 6});
  CHECK(zmat_mul(zmat_mul(s.U, s.D), s.V) == ZMat{{2, 0}, {0, 3}});

  auto id = smith_normal_form(zmat_identity(3));
  CHECK(id.diag() == std::vector<mpz_class>{1, 1, 1});

  auto z = smith_normal_form({{0}});
  CHECK(z.diag() == std::vector<mpz_class>{0});

  auto r = smith_normal_form({{2, 4}, {6, 8}});
  CHECK(r.diag() == std::vector<mpz_class>{2, 4});

  auto rect = smith_normal_form({{1, -6}});
  CHECK(rect.diag() == std::vector<mpz_class>{1});
}

TEST_CASE("smith normal form: random round trips") {
  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t r = dim(rng), c = dim(rng);
    ZMat m = zmat(r, c);
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    SmithForm s = smith_normal_form(m);
    CHECK(zmat_mul(zmat_mul(s.U, s.D), s.V) == m);
    CHECK(zmat_mul(zmat_mul(s.Uinv, m), s.Vinv) == s.D);
    CHECK(is_identity(zmat_mul(s.U, s.Uinv)));
    CHECK(is_identity(zmat_mul(s.V, s.Vinv)));
    auto d = s.diag();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i && d[i - 1] != 0) CHECK((d[i] == 0 || d[i] % d[i - 1] == 0));
      if (i && d[i - 1] == 0) CHECK(d[i] == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D[i][j] == 0);
  }
}

TEST_CASE("canonical groups, orders, text form") {
  auto g = FgAbGroup::make(2, {2, 4});
  CHECK(g.str() == "Z^2 + Z/2 + Z/4");
  CHECK(FgAbGroup::parse("Z^2 + Z/2 + Z/4") == g);
  CHECK(FgAbGroup::parse("Z") == FgAbGroup::make(1, {}));
  CHECK(FgAbGroup::parse("0") == FgAbGroup::trivial());
  CHECK(FgAbGroup::trivial().str() == "0");
  CHECK(FgAbGroup::make(1, {}).str() == "Z");
  CHECK(!g.order().has_value());
  CHECK(FgAbGroup::make(0, {2, 4}).order() == mpz_class(8));
  CHECK(FgAbGroup::trivial().order() == mpz_class(1));
  CHECK_THROWS_AS(FgAbGroup::make(0, {2, 3}), input_error);
  CHECK_THROWS_AS(FgAbGroup::parse("Z/2 + Z/3"), input_error);
  CHECK_THROWS_AS(FgAbGroup::parse("Z/2 + Z"), input_error);
  CHECK_THROWS_AS(FgAbGroup::parse("Z/1"), input_error);

  // normalization identifies isomorphic presentations
  auto [g1, p1] = FgAbGroup::from_orders({mpz_class(2), mpz_class(3)});
  CHECK(g1 == FgAbGroup::make(0, {6}));
  auto [g2, p2] = FgAbGroup::from_orders({mpz_class(6)});
  CHECK(g1 == g2);
  auto [g3, p3] = FgAbGroup::from_orders({mpz_class(4), mpz_class(2)});
  CHECK(g3 == FgAbGroup::make(0, {2, 4}));
  auto [g4, p4] = FgAbGroup::from_orders({mpz_class(0), mpz_class(2), mpz_class(1)});
  CHECK(g4 == FgAbGroup::make(1, {2}));
  // the conversion matrix respects generator orders and is surjective
  ZVec e0{1, 0}, e1{0, 1};
  CHECK(g1.is_zero(g1.scale(2, zmat_apply(p1, e0))));
  CHECK(g1.is_zero(g1.scale(3, zmat_apply(p1, e1))));
  SubgroupMembership full(g1, {zmat_apply(p1, e0), zmat_apply(p1, e1)});
  CHECK(full.contains(g1.gen(0)));
}

TEST_CASE("element arithmetic and enumeration") {
  auto g = FgAbGroup::make(1, {2, 4});
  auto a = g.reduce({3, 5, 9});
  CHECK(a == FgAbGroup::El{3, 1, 1});
  CHECK(g.add(a, a) == FgAbGroup::El{6, 0, 2});
  CHECK(g.is_zero(g.sub(a, a)));
  CHECK(g.neg({0, 1, 1}) == FgAbGroup::El{0, 1, 3});
  CHECK(g.element_order({0, 1, 2}) == mpz_class(2));
  CHECK(g.element_order({0, 0, 1}) == mpz_class(4));
  CHECK(!g.element_order({1, 0, 0}).has_value());
}

TEST_CASE("finite enumeration is complete and duplicate-free") {
  auto g = FgAbGroup::make(0, {2, 6});
  auto els = g.elements();
  REQUIRE(els.size() == 12);
  for (auto& e : els) CHECK(g.reduce(e) == e);
  std::set<std::vector<mpz_class>> seen(els.begin(), els.end());
  CHECK(seen.size() == 12);
  CHECK_THROWS_AS(FgAbGroup::make(1, {}).elements(), input_error);
}

TEST_CASE("homomorphisms verify torsion compatibility") {
  auto z = FgAbGroup::make(1, {});
  auto z2 = FgAbGroup::make(0, {2});
  auto h = GroupHom::make(z, z2, {{1}});
  CHECK(h.apply({3}) == FgAbGroup::El{1});
  CHECK_THROWS_AS(GroupHom::make(z2, z, {{1}}), input_error);
  auto comp = GroupHom::make(z2, z2, {{1}}).after(h);
  CHECK(comp.apply({5}) == FgAbGroup::El{1});
  CHECK(GroupHom::zero(z, z2).is_zero_map());
}

TEST_CASE("kernels with inclusion certificates") {
  auto z = FgAbGroup::make(1, {});
  auto z6 = FgAbGroup::make(0, {6});
  auto red = GroupHom::make(z, z6, {{1}});
  auto k = kernel(red);
  CHECK(k.group == z);
  CHECK(abs(k.incl.matrix()[0][0]) == 6);
  CHECK(red.after(k.incl).is_zero_map());

  auto z2g = FgAbGroup::make(2, {});
  auto kid = kernel(GroupHom::identity(z2g));
  CHECK(kid.group == FgAbGroup::trivial());

  auto kz = kernel(GroupHom::zero(z, z));
  CHECK(kz.group == z);
  CHECK(abs(kz.incl.matrix()[0][0]) == 1);

  // Z/4 -> Z/2: kernel Z/2 generated by the class of 2
  auto z4 = FgAbGroup::make(0, {4});
  auto z2 = FgAbGroup::make(0, {2});
  auto r42 = GroupHom::make(z4, z2, {{1}});
  auto k42 = kernel(r42);
  CHECK(k42.group == z2);
  CHECK(r42.after(k42.incl).is_zero_map());
  // exactness by enumeration: everything killed lies in the kernel image
  std::vector<FgAbGroup::El> kimg;
  for (std::size_t t = 0; t < k42.group.ngens(); ++t)
    kimg.push_back(k42.incl.apply(k42.group.gen(t)));
  SubgroupMembership in_k(z4, kimg);
  int killed = 0;
  for (auto& e : z4.elements())
    if (z2.is_zero(r42.apply(e))) {
      ++killed;
      CHECK(in_k.contains(e));
    }
  CHECK(killed == 2);

  // addition Z^2 -> Z: kernel Z spanned by (1, -1)
  auto addm = GroupHom::make(z2g, z, {{1, 1}});
  auto ka = kernel(addm);
  CHECK(ka.group == z);
  auto v = ka.incl.apply(ka.group.gen(0));
  CHECK(abs(v[0]) == 1);
  CHECK(v[0] + v[1] == 0);

  // projection Z^2 + Z/4 -> Z/4 has kernel Z^2 + Z/... nothing extra
  auto mix = FgAbGroup::make(2, {4});
  auto pr = GroupHom::make(mix, z4, {{0, 0, 1}});
  auto kp = kernel(pr);
  CHECK(kp.group == z2g);
  CHECK(pr.after(kp.incl).is_zero_map());
}

TEST_CASE("subgroup membership") {
  auto z = FgAbGroup::make(1, {});
  SubgroupMembership twoZ(z, {{2}});
  CHECK(twoZ.contains({4}));
  CHECK(twoZ.contains({-6}));
  CHECK(!twoZ.contains({3}));

  auto z6 = FgAbGroup::make(0, {6});
  SubgroupMembership even(z6, {{2}});
  for (long x : {0, 2, 4}) CHECK(even.contains({x}));
  for (long x : {1, 3, 5}) CHECK(!even.contains({x}));

  auto z2g = FgAbGroup::make(2, {});
  SubgroupMembership diag(z2g, {{1, 1}, {1, -1}});
  CHECK(diag.contains({2, 0}));
  CHECK(!diag.contains({1, 0}));
}
