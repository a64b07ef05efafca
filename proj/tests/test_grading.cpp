#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affq/grading.hpp"

using namespace affq;

static const CoeffField Q = CoeffField::rationals();

static FgAbGroup::El el(std::initializer_list<long> v) {
  FgAbGroup::El e;
  for (long x : v) e.emplace_back(x);
  return e;
}

// Z-graded cone: Q[x,y]/(x^2 - y^2), deg x = deg y = 1
static MGrading cone_grading() {
  PresentedAlgebra a = PresentedAlgebra::make(
      Q, {"x", "y"}, {Poly::parse("x^2 - y^2", Q, {"x", "y"})});
  return MGrading::make(a, FgAbGroup::make(1, {}), {el({1}), el({1})});
}

// Z-graded plane with opposite weights: Q[x,y], deg x = 1, deg y = -1
static MGrading hyperbolic_grading() {
  return MGrading::make(PresentedAlgebra::free(Q, {"x", "y"}), FgAbGroup::make(1, {}),
                        {el({1}), el({-1})});
}

TEST_CASE("grading construction accepts exactly the homogeneous presentations") {
  MGrading g = cone_grading();
  CHECK(g.group().free_rank() == 1);
  CHECK(g.var_degrees()[0] == el({1}));
  CHECK(!g.is_trivial());

  // non-homogeneous relation is a hard error
  PresentedAlgebra bad = PresentedAlgebra::make(
      Q, {"x", "y"}, {Poly::parse("x^2 - y", Q, {"x", "y"})});
  CHECK_THROWS_AS(MGrading::make(bad, FgAbGroup::make(1, {}), {el({1}), el({1})}),
                  input_error);

  // one degree per visible generator, with the right coordinate count
  PresentedAlgebra plane = PresentedAlgebra::free(Q, {"x", "y"});
  CHECK_THROWS_AS(MGrading::make(plane, FgAbGroup::make(1, {}), {el({1})}), input_error);
  CHECK_THROWS_AS(MGrading::make(plane, FgAbGroup::make(1, {}),
                                 {el({1}), el({1, 0})}),
                  input_error);

  // companions pick up the negated degree; torsion degrees are reduced
  PresentedAlgebra torus = PresentedAlgebra::free(Q, {"x"}).localized({"x"});
  MGrading gt = MGrading::make(torus, FgAbGroup::make(0, {2}), {el({3})});
  CHECK(gt.var_degrees()[0] == el({1}));
  CHECK(gt.var_degrees()[1] == el({1}));  // -1 = 1 in Z/2
  MGrading gz = MGrading::make(torus, FgAbGroup::make(1, {}), {el({1})});
  CHECK(gz.var_degrees()[1] == el({-1}));

  // trivial group grades everything in degree zero
  MGrading g0 = MGrading::make(cone_grading().algebra(), FgAbGroup::trivial(),
                               {el({}), el({})});
  CHECK(g0.is_trivial());
  CHECK(g0.is_homogeneous(g0.algebra().parse("x^2 + y + 1")));
}

TEST_CASE("homogeneous components split and reassemble") {
  MGrading g = MGrading::make(PresentedAlgebra::free(Q, {"x"}), FgAbGroup::make(1, {}),
                              {el({1})});
  const PresentedAlgebra& a = g.algebra();

  auto parts = homogeneous_components(g, a.parse("x^3 + x"));
  CHECK(parts.size() == 2);
  CHECK(parts.at(el({3})) == a.parse("x^3"));
  CHECK(parts.at(el({1})) == a.parse("x"));

  CHECK(homogeneous_components(g, a.zero()).empty());

  MGrading h = hyperbolic_grading();
  auto hp = homogeneous_components(h, h.algebra().parse("x*y + x^2*y^2 + x"));
  CHECK(hp.size() == 2);
  CHECK(hp.at(el({0})) == h.algebra().parse("x*y + x^2*y^2"));
  CHECK(hp.at(el({1})) == h.algebra().parse("x"));

  CHECK(h.homogeneous_degree(h.algebra().parse("x^2*y")) == el({1}));
  CHECK(!h.homogeneous_degree(h.algebra().parse("x + y")).has_value());
  CHECK(h.homogeneous_degree(h.algebra().constant(7)) == el({0}));
}

TEST_CASE("reconstruction and multiplicativity on random polynomials") {
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 3);
  auto random_poly = [&](const PresentedAlgebra& a) {
    Poly f = a.zero();
    for (int t = 0; t < 4; ++t) {
      Mono m(std::vector<std::uint32_t>{static_cast<std::uint32_t>(exp(rng)),
                                        static_cast<std::uint32_t>(exp(rng))});
      f = f + Poly::term(a.field(), 2, m, coeff(rng));
    }
    return f;
  };

  for (const MGrading& g : {cone_grading(), hyperbolic_grading()}) {
    const PresentedAlgebra& a = g.algebra();
    for (int trial = 0; trial < 100; ++trial) {
      Poly f = random_poly(a), h = random_poly(a);
      Poly sum = a.zero();
      for (const auto& [d, part] : homogeneous_components(g, f)) {
        CHECK(g.homogeneous_degree(part) == d);
        sum = sum + part;
      }
      CHECK(sum == f);
      // products of homogeneous pieces land in the summed degree
      for (const auto& [df, pf] : homogeneous_components(g, a.nf(f)))
        for (const auto& [dh, ph] : homogeneous_components(g, a.nf(h))) {
          Poly prod = a.nf(pf * ph);
          if (prod.is_zero()) continue;
          CHECK(g.homogeneous_degree(prod) == g.group().add(df, dh));
        }
    }
  }
}

TEST_CASE("coaction sends a generator to itself tensor its character") {
  // Q[x], deg x = 1 in Z: x -> x (x) X
  MGrading g = MGrading::make(PresentedAlgebra::free(Q, {"x"}), FgAbGroup::make(1, {}),
                              {el({1})});
  Coaction c = coaction_from_grading(g);
  CHECK(c.rho.images()[0] == c.square.alg.parse("x*u1"));

  // trivial grading: a -> a (x) 1
  MGrading g0 = MGrading::make(PresentedAlgebra::free(Q, {"x"}), FgAbGroup::trivial(),
                               {el({})});
  Coaction c0 = coaction_from_grading(g0);
  CHECK(c0.rho.images() == RingMap::identity(g0.algebra()).images());

  // the cone: both generators have degree 1, the relation maps to rel (x) X^2
  Coaction cc = coaction_from_grading(cone_grading());
  CHECK(cc.rho.images()[0] == cc.square.alg.parse("x*u1"));
  CHECK(cc.rho.images()[1] == cc.square.alg.parse("y*u1"));
  CHECK(cc.rho.apply(cc.grading.algebra().parse("x^2 - y^2")).is_zero());

  // Z/2 on the punctured line: the companion also tensors with u1
  PresentedAlgebra torus = PresentedAlgebra::free(Q, {"x"}).localized({"x"});
  MGrading gt = MGrading::make(torus, FgAbGroup::make(0, {2}), {el({1})});
  Coaction ct = coaction_from_grading(gt);
  CHECK(ct.rho.images()[0] == ct.square.alg.parse("x*u1"));
  CHECK(ct.rho.images()[1] == ct.square.alg.parse("x_inv*u1"));
}

TEST_CASE("degree monomial ideals: minimal generators, saturation, units") {
  PresentedAlgebra plane = PresentedAlgebra::free(Q, {"x", "y"});
  MGrading g = MGrading::make(plane, FgAbGroup::make(1, {}), {el({1}), el({1})});

  DegreeIdeal j1 = degree_monomial_ideal(g, el({1}), 3);
  REQUIRE(j1.gens.size() == 2);
  CHECK(j1.gens[0] == plane.parse("x"));
  CHECK(j1.gens[1] == plane.parse("y"));
  CHECK(j1.saturated);
  CHECK(!j1.unit);

  // at bound 1 the last increment still produced generators
  CHECK(!degree_monomial_ideal(g, el({1}), 1).saturated);

  DegreeIdeal j0 = degree_monomial_ideal(g, el({0}), 2);
  REQUIRE(j0.gens.size() == 1);
  CHECK(j0.gens[0] == plane.one());
  CHECK(j0.unit);
  CHECK(j0.saturated);

  // nothing of negative degree in the polynomial ring
  DegreeIdeal jneg = degree_monomial_ideal(g, el({-1}), 3);
  CHECK(jneg.gens.empty());
  CHECK(!jneg.saturated);
  CHECK(!jneg.unit);

  CHECK_THROWS_AS(degree_monomial_ideal(g, el({1}), 0), input_error);

  // Z/3 on the punctured line: J_1 = (x, x_inv^2) contains 1 since x is a unit
  PresentedAlgebra torus = PresentedAlgebra::free(Q, {"x"}).localized({"x"});
  MGrading gt = MGrading::make(torus, FgAbGroup::make(0, {3}), {el({1})});
  DegreeIdeal jt = degree_monomial_ideal(gt, el({1}), 3);
  REQUIRE(jt.gens.size() == 2);
  CHECK(jt.gens[0] == torus.parse("x"));
  CHECK(jt.gens[1] == torus.parse("x_inv^2"));
  CHECK(jt.saturated);
  REQUIRE(jt.unit);
  Poly sum = torus.zero();
  for (std::size_t k = 0; k < jt.gens.size(); ++k)
    sum = sum + jt.unit_cofactors[k] * jt.gens[k];
  CHECK(torus.nf(sum - torus.one()).is_zero());
}

TEST_CASE("degree zero subalgebra of the punctured plane is one free generator") {
  PresentedAlgebra a = PresentedAlgebra::free(Q, {"x", "y"}).localized({"x"});
  MGrading g = MGrading::make(a, FgAbGroup::make(1, {}), {el({1}), el({1})});
  DegreeZeroSubalgebra z = degree_zero_subalgebra(g, 2);
  REQUIRE(z.gens.size() == 1);
  CHECK(z.gens[0] == a.parse("y*x_inv"));
  CHECK(z.alg.nvars() == 1);
  CHECK(z.alg.names()[0] == "u1");
  CHECK(z.alg.relations().gens().empty());
  CHECK(z.incl.images()[0] == a.parse("y*x_inv"));
  CHECK(z.certificate == "complete");
  CHECK(g.homogeneous_degree(z.gens[0]) == el({0}));
}

TEST_CASE("degree zero subalgebra of GL2 presents PGL2") {
  std::vector<std::string> n = {"x11", "x12", "x21", "x22", "dbar"};
  PresentedAlgebra gl2 = PresentedAlgebra::make(
      Q, n, {Poly::parse("(x11*x22 - x12*x21)*dbar - 1", Q, n)});
  MGrading g = MGrading::make(gl2, FgAbGroup::make(1, {}),
                              {el({1}), el({1}), el({1}), el({1}), el({-2})});

  DegreeZeroSubalgebra z = degree_zero_subalgebra(g, 3);
  // ten products x_ij*x_kl*dbar; the Cramer combinations strike out four
  REQUIRE(z.gens.size() == 6);
  CHECK(z.gens[0] == gl2.parse("x22^2*dbar"));
  CHECK(z.gens[1] == gl2.parse("x12*x22*dbar"));
  CHECK(z.gens[2] == gl2.parse("x21^2*dbar"));
  CHECK(z.gens[3] == gl2.parse("x11*x21*dbar"));
  CHECK(z.gens[4] == gl2.parse("x12^2*dbar"));
  CHECK(z.gens[5] == gl2.parse("x11^2*dbar"));
  CHECK(z.certificate == "complete");
  CHECK(z.alg.nvars() == 6);
  CHECK(!z.alg.relations().gens().empty());
  for (const Poly& p : z.gens) CHECK(g.homogeneous_degree(p) == el({0}));

  // the struck-out products are expressible in the kept ones, x11 is not
  SubalgebraTester t(gl2, z.gens);
  CHECK(t.contains(gl2.parse("x11*x22*dbar")));
  CHECK(t.contains(gl2.parse("x11*x12*dbar")));
  CHECK(t.contains(gl2.parse("x21*x22*dbar")));
  CHECK(!t.contains(gl2.parse("x11")));
}

TEST_CASE("trivial grading recovers the whole algebra as degree zero") {
  PresentedAlgebra a =
      PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^3", Q, {"x"})});
  MGrading g = MGrading::make(a, FgAbGroup::trivial(), {el({})});
  DegreeZeroSubalgebra z = degree_zero_subalgebra(g, 2);
  REQUIRE(z.gens.size() == 1);
  CHECK(z.gens[0] == a.parse("x"));
  REQUIRE(z.alg.relations().gens().size() == 1);
  CHECK(z.alg.relations().gens()[0] == z.alg.parse("u1^3"));
  CHECK(z.certificate == "complete");
}

TEST_CASE("graded module components over the cyclically graded line") {
  PresentedAlgebra line = PresentedAlgebra::free(Q, {"s"});
  MGrading g = MGrading::make(line, FgAbGroup::make(0, {3}), {el({1})});

  // the ideal (s) as a module on one generator of degree 1: its degree-0
  // part is generated by s^2 * e, i.e. by s^3 inside the line
  GradedModule ideal = GradedModule::make(g, {el({1})}, {});
  auto comp = graded_module_component(ideal, el({0}), 4);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0][0] == line.parse("s^2"));

  // free rank one on a degree-0 generator: the degree-0 part is A_0 itself
  GradedModule free1 = GradedModule::make(g, {el({0})}, {});
  auto c0 = graded_module_component(free1, el({0}), 4);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0][0] == line.one());

  // zero module
  GradedModule none = GradedModule::make(g, {}, {});
  CHECK(graded_module_component(none, el({0}), 4).empty());

  // homogeneous relation rows pass, mixed rows are rejected
  GradedModule two = GradedModule::make(
      g, {el({0}), el({1})}, {{line.parse("s"), line.constant(-1)}});
  auto c1 = graded_module_component(two, el({1}), 3);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0][0] == line.parse("s"));
  CHECK(c1[0][1].is_zero());
  CHECK(c1[1][0].is_zero());
  CHECK(c1[1][1] == line.one());
  CHECK_THROWS_AS(
      GradedModule::make(g, {el({0}), el({1})}, {{line.parse("s"), line.parse("s")}}),
      input_error);
  CHECK_THROWS_AS(
      GradedModule::make(g, {el({0})}, {{line.parse("s + 1")}}),
      input_error);
}
