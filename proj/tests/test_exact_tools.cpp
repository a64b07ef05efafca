#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affq/avoid.hpp"
#include "affq/elim.hpp"
#include "affq/jacobian.hpp"
#include "affq/linalg.hpp"
#include "affq/points.hpp"
#include "affq/polymat.hpp"
#include "affq/tensor.hpp"

using namespace affq;

static const CoeffField Q = CoeffField::rationals();

TEST_CASE("dense linear algebra") {
  QMat a = {{1, 2}, {3, 4}};
  auto x = solve(a, {5, 6}, Q);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == mpq_class(-4));
  CHECK((*x)[1] == mpq_class(9, 2));

  CHECK(rank(QMat{{1, 2}, {2, 4}}, Q) == 1);
  CHECK(!solve(QMat{{1, 1}, {1, 1}}, {1, 2}, Q).has_value());

  CoeffField f5 = CoeffField::prime(5);
  QMat m = {{1, 2, 3}};
  auto kb = kernel_basis(m, 3, f5);
  REQUIRE(kb.size() == 2);
  for (auto& v : kb) {
    mpq_class dot = f5.add(f5.add(f5.mul(1, v[0]), f5.mul(2, v[1])), f5.mul(3, v[2]));
    CHECK(dot == 0);
  }
  // zero-row and empty edge cases
  CHECK(kernel_basis(QMat{}, 2, Q).size() == 2);
  CHECK(solve(QMat{}, {}, Q).has_value());
}

TEST_CASE("kernel of an algebra map") {
  auto src = PresentedAlgebra::free(Q, {"u", "v"});
  auto dst = PresentedAlgebra::free(Q, {"x"});
  auto m = RingMap::parse(src, dst, {{"u", "x^2"}, {"v", "x^3"}});
  auto ker = kernel_of_map(m);
  REQUIRE(ker.size() == 1);
  CHECK(src.str(ker[0]) == "u^3 - v^2");

  auto src1 = PresentedAlgebra::free(Q, {"u"});
  auto dst1 = PresentedAlgebra::make(Q, {"x"}, {dst.parse("x^2")});
  auto m1 = RingMap::parse(src1, dst1, {{"u", "x"}});
  auto ker1 = kernel_of_map(m1);
  REQUIRE(ker1.size() == 1);
  CHECK(src1.str(ker1[0]) == "u^2");

  // kernel of an isomorphism is exactly the source relation ideal
  auto ker2 = kernel_of_map(RingMap::identity(dst1));
  REQUIRE(ker2.size() == 1);
  CHECK(dst1.str(ker2[0]) == "x^2");
}

TEST_CASE("subalgebra membership with expression certificates") {
  auto a = PresentedAlgebra::free(Q, {"x", "y"});
  SubalgebraTester sym(a, {a.parse("x + y"), a.parse("x*y")});
  auto e = sym.express(a.parse("x^2 + y^2"));
  REQUIRE(e.has_value());
  CHECK(e->str({"t1", "t2"}) == "t1^2 - 2*t2");
  CHECK(sym.evaluate(*e) == a.parse("x^2 + y^2"));
  CHECK(!sym.contains(a.parse("x - y")));
  CHECK(sym.contains(a.parse("x^3 + y^3")));

  auto b = PresentedAlgebra::free(Q, {"x"});
  SubalgebraTester even(b, {b.parse("x^2")});
  CHECK(!even.contains(b.parse("x^3")));
  CHECK(even.contains(b.parse("x^4 - 7*x^2 + 1")));

  // modulo relations: x^3 is reachable once x^2 = 1
  auto c = PresentedAlgebra::make(Q, {"x"}, {b.parse("x^2 - 1")});
  SubalgebraTester unit(c, {c.parse("x^2")});
  CHECK(unit.contains(c.parse("x^2")));
  CHECK(!unit.contains(c.parse("x")));
}

TEST_CASE("subalgebra presentation") {
  auto a = PresentedAlgebra::free(Q, {"x"});
  auto sp = present_subalgebra(a, {a.parse("x^2"), a.parse("x^3")}, {"u", "v"});
  REQUIRE(sp.alg.relations().gens().size() == 1);
  CHECK(sp.alg.str(sp.alg.relations().gens()[0]) == "u^3 - v^2");
  CHECK(sp.incl.apply(sp.alg.parse("u*v")) == a.parse("x^5"));
}

TEST_CASE("tensor product of algebras") {
  auto b1 = PresentedAlgebra::make(Q, {"T"}, {Poly::parse("T^2 + 1", Q, {"T"})});
  auto b2 = PresentedAlgebra::make(Q, {"S"}, {Poly::parse("S^2 + 1", Q, {"S"})});
  auto t = tensor({b1, b2});
  CHECK(t.alg.names() == std::vector<std::string>{"T", "S"});
  CHECK(t.alg.dimension() == 4);
  CHECK(t.leg[0].apply(b1.var(0)) == t.alg.var(0));

  // same factor twice: every variable picks up its leg suffix
  auto t2 = tensor({b1, b1});
  CHECK(t2.alg.names() == std::vector<std::string>{"T_1", "T_2"});
  CHECK(t2.alg.dimension() == 4);
  CHECK(t2.origin[1] == std::pair<std::size_t, std::size_t>{1, 0});

  // multiplication map out of the square
  auto mult = map_from_tensor(t2, {RingMap::identity(b1), RingMap::identity(b1)});
  CHECK(mult.apply(t2.alg.parse("T_1*T_2")) == b1.constant(-1));

  // companions survive tensoring
  auto loc = PresentedAlgebra::free(Q, {"x"}).localized({"x"});
  auto t3 = tensor({loc, b1});
  CHECK(t3.alg.is_companion(t3.alg.var_index("x_inv")));
  CHECK(t3.alg.is_unit(t3.alg.parse("x")));
}

TEST_CASE("tensor over a base") {
  auto base = PresentedAlgebra::free(Q, {"t"});
  auto ax = PresentedAlgebra::free(Q, {"x"});
  auto ay = PresentedAlgebra::free(Q, {"y"});
  auto s1 = RingMap::parse(base, ax, {{"t", "x^2"}});
  auto s2 = RingMap::parse(base, ay, {{"t", "y^2"}});
  auto to = tensor_over({s1, s2});
  CHECK(to.alg.nf(to.alg.parse("x^2 - y^2")).is_zero());
  CHECK(!to.alg.nf(to.alg.parse("x - y")).is_zero());

  // maps out of the fibered square must agree on the base
  auto w = PresentedAlgebra::free(Q, {"w"});
  auto ok = map_from_tensor(to, {RingMap::parse(ax, w, {{"x", "w"}}),
                                 RingMap::parse(ay, w, {{"y", "-w"}})});
  CHECK(ok.apply(to.alg.parse("x*y")) == w.parse("-w^2"));
  CHECK_THROWS_AS(map_from_tensor(to, {RingMap::parse(ax, w, {{"x", "w"}}),
                                       RingMap::parse(ay, w, {{"y", "w + 1"}})}),
                  input_error);
}

TEST_CASE("matrices over an algebra: charpoly, det, Cayley-Hamilton") {
  auto sc = PresentedAlgebra::scalar(Q);
  PolyMat m(sc, 3, 3);
  long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = sc.constant(vals[i][j]);
  auto cp = m.charpoly();
  REQUIRE(cp.size() == 4);
  CHECK(cp[0] == sc.one());
  CHECK(cp[1] == sc.constant(-16));
  CHECK(cp[2] == sc.constant(-12));
  CHECK(cp[3] == sc.constant(3));
  CHECK(m.det() == sc.constant(-3));
  CHECK(m.trace() == sc.constant(16));

  // Cayley-Hamilton over a quotient ring
  auto a = PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^3", Q, {"x"})});
  PolyMat n(a, 2, 2);
  n.at(0, 0) = a.parse("x");
  n.at(0, 1) = a.one();
  n.at(1, 1) = a.parse("x");
  auto ncp = n.charpoly();
  CHECK(a.str(ncp[1]) == "-2*x");
  CHECK(a.str(ncp[2]) == "x^2");
  PolyMat acc = PolyMat::identity(a, 2);  // horner: ((I*n + c1)*n + c2)
  for (std::size_t k = 1; k < ncp.size(); ++k) {
    acc = acc.mul(n);
    for (std::size_t i = 0; i < 2; ++i)
      acc.at(i, i) = a.nf(acc.at(i, i) + ncp[k]);
  }
  CHECK(acc.is_zero());

  CHECK(PolyMat::identity(sc, 4).det() == sc.one());
  PolyMat f5m(PresentedAlgebra::scalar(CoeffField::prime(5)), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f5m.at(i, j) = f5m.algebra().constant(vals[i][j]);
  CHECK(f5m.det() == f5m.algebra().constant(2));  // -3 mod 5
}

TEST_CASE("finite field towers") {
  Fq f4 = Fq::make(2, 2);
  CHECK(f4.modulus() == std::vector<unsigned long>{1, 1});  // z^2 + z + 1
  auto z = f4.gen();
  CHECK(f4.mul(z, z) == f4.add(z, f4.one()));
  CHECK(f4.pow(z, 3) == f4.one());
  CHECK(f4.inv(z) == f4.add(z, f4.one()));

  Fq f25 = Fq::of_order(25);
  CHECK(f25.p() == 5);
  CHECK(f25.k() == 2);
  CHECK(f25.modulus() == std::vector<unsigned long>{2, 0});  // z^2 + 2
  // multiplicative order of every nonzero element divides 24
  for (unsigned long i = 1; i < 25; ++i) {
    auto e = f25.element_at(i);
    CHECK(f25.pow(e, 24) == f25.one());
    CHECK(f25.mul(e, f25.inv(e)) == f25.one());
    CHECK(f25.index_of(e) == i);
  }
  CHECK_THROWS_AS(Fq::of_order(6), input_error);
  CHECK_THROWS_AS(Fq::of_order(1), input_error);
}

TEST_CASE("rational point enumeration") {
  CoeffField f2 = CoeffField::prime(2);
  auto empty = PresentedAlgebra::make(f2, {"x", "y"}, {Poly::constant(f2, 2, 1)});
  CHECK(rational_points(empty, 2).empty());

  CoeffField f3 = CoeffField::prime(3);
  auto mu2 = PresentedAlgebra::make(f3, {"x"}, {Poly::parse("x^2 - 1", f3, {"x"})});
  auto pts = rational_points(mu2, 3);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].coords[0] == Fq::make(3, 1).from_base(1));
  CHECK(pts[1].coords[0] == Fq::make(3, 1).from_base(2));
  CHECK(rational_points(mu2, 9).size() == 2);

  CoeffField f5 = CoeffField::prime(5);
  auto gm = PresentedAlgebra::free(f5, {"x"}).localized({"x"});
  CHECK(rational_points(gm, 5).size() == 4);
  CHECK(rational_points(gm, 25).size() == 24);

  auto rational = PresentedAlgebra::free(Q, {"x"});
  CHECK_THROWS_AS(rational_points(rational, 5), input_error);
  CHECK_THROWS_AS(rational_points(gm, 4), input_error);  // wrong characteristic
  auto wide = PresentedAlgebra::free(f5, std::vector<std::string>{
                                             "a", "b", "c", "d", "e", "f", "g", "h",
                                             "i", "j", "k", "l"});
  CHECK_THROWS_AS(rational_points(wide, 5), budget_error);
}

TEST_CASE("jacobian criterion for adjoined variables") {
  auto gmq = PresentedAlgebra::free(Q, {"x"}).localized({"x"});
  auto sq = jacobian_etale_check(gmq, {"T"}, {"T^2 - x"});
  CHECK(sq.etale);
  CHECK(sq.ext.str(sq.jac) == "2*T");
  REQUIRE(sq.jac_inverse.has_value());
  CHECK(sq.ext.nf(sq.jac * *sq.jac_inverse - sq.ext.one()).is_zero());

  CoeffField f2 = CoeffField::prime(2);
  auto line2 = PresentedAlgebra::free(f2, {"x"});
  auto bad = jacobian_etale_check(line2, {"T"}, {"T^2 - x"});
  CHECK(!bad.etale);
  CHECK(bad.jac.is_zero());

  CoeffField f3 = CoeffField::prime(3);
  auto line3 = PresentedAlgebra::free(f3, {"x"});
  auto as = jacobian_etale_check(line3, {"T"}, {"T^3 - T - x"});
  CHECK(as.etale);
  CHECK(as.ext.str(as.jac) == "2");  // 3T^2 - 1 = -1

  // two variables at once: swap-with-scaling has unit jacobian
  auto plane = PresentedAlgebra::free(Q, {"x"});
  auto two = jacobian_etale_check(plane, {"u", "v"}, {"u + v - x", "u - v"});
  CHECK(two.etale);
}

TEST_CASE("avoiding maximal ideals inside an ideal") {
  auto a = PresentedAlgebra::free(Q, {"x", "y"});
  auto P = [&](const char* s) { return a.parse(s); };

  // one ideal, one generator suffices
  Poly g1 = prime_avoidance(a, {P("x")}, {{P("x - 1"), P("y")}});
  CHECK(a.str(g1) == "x");

  // two ideals force the pair stage
  Poly g2 = prime_avoidance(a, {P("x"), P("y")},
                            {{P("x - 1"), P("y")}, {P("x"), P("y - 1")}});
  CHECK(a.str(g2) == "x + y");

  // char 2, three ideals: only the product stage works
  CoeffField f2 = CoeffField::prime(2);
  auto b = PresentedAlgebra::free(f2, {"x", "y"});
  auto B = [&](const char* s) { return b.parse(s); };
  Poly g3 = prime_avoidance(
      b, {B("x"), B("y")},
      {{B("x"), B("y + 1")}, {B("y"), B("x + 1")}, {B("x + y"), B("x + 1")}});
  CHECK(b.str(g3) == "x^3 + x*y^2 + y^3");
  // certificate re-check: inside the ideal, outside every maximal ideal
  CHECK(b.ideal_contains({B("x"), B("y")}, g3));
  CHECK(!b.ideal_contains({B("x"), B("y + 1")}, g3));
  CHECK(!b.ideal_contains({B("y"), B("x + 1")}, g3));
  CHECK(!b.ideal_contains({B("x + y"), B("x + 1")}, g3));

  CHECK_THROWS_AS(prime_avoidance(a, {P("x")}, {{P("x"), P("y")}}), input_error);
  CHECK_THROWS_AS(
      prime_avoidance(a, {P("x")}, {{P("x"), P("y")}, {P("x"), P("y")}}),
      input_error);
}
