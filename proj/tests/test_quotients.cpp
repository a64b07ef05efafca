#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affq/quotients.hpp"

using namespace affq;

static const CoeffField Q = CoeffField::rationals();

static FgAbGroup::El el(std::initializer_list<long> v) {
  FgAbGroup::El e;
  for (long x : v) e.emplace_back(x);
  return e;
}

// the punctured line k[x, x^-1]
static PresentedAlgebra torus(CoeffField f) {
  return PresentedAlgebra::free(f, {"x"}).localized({"x"});
}

// sign action of Z/2, x -> -x
static ConstantAction sign_action(const PresentedAlgebra& a) {
  return ConstantAction::cyclic(a, 2, RingMap::parse(a, a, {{"x", "-x"}}));
}

// GL2 as the localization of the 2x2 matrix algebra at the determinant
static PresentedAlgebra gl2(CoeffField f) {
  std::vector<std::string> n = {"x11", "x12", "x21", "x22", "dbar"};
  return PresentedAlgebra::make(
      f, n, {Poly::parse("(x11*x22 - x12*x21)*dbar - 1", f, n)});
}

static MGrading gl2_grading(CoeffField f) {
  return MGrading::make(gl2(f), FgAbGroup::make(1, {}),
                        {el({1}), el({1}), el({1}), el({1}), el({-2})});
}

static Certificate find_check(const std::vector<Certificate>& cs, const std::string& name) {
  for (const Certificate& c : cs)
    if (c.name == name) return c;
  FAIL("missing certificate: " << name);
  return {};
}

TEST_CASE("constant actions: construction validates the homomorphism property") {
  PresentedAlgebra t = torus(Q);
  ConstantAction act = sign_action(t);
  CHECK(act.group().order() == 2);
  CHECK(act.rho(0).images()[0] == t.parse("x"));
  CHECK(act.rho(1).images()[0] == t.parse("-x"));
  CHECK(act.rho(1).images()[1] == t.parse("-x_inv"));

  // x -> 2x has infinite order, so it cannot generate a Z/2 action
  CHECK_THROWS_AS(ConstantAction::cyclic(t, 2, RingMap::parse(t, t, {{"x", "2*x"}})),
                  input_error);

  // order 3 over F7: x -> 2x, since 2^3 = 1 mod 7
  PresentedAlgebra t7 = torus(CoeffField::prime(7));
  ConstantAction a7 = ConstantAction::cyclic(t7, 3, RingMap::parse(t7, t7, {{"x", "2*x"}}));
  CHECK(a7.group().order() == 3);
  CHECK(a7.rho(2).images()[0] == t7.parse("4*x"));

  // hand-rolled tables must carry the identity at the identity index
  ConstantGroupScheme z2 = ConstantGroupScheme::cyclic(Q, 2);
  CHECK_THROWS_AS(
      ConstantAction::make(z2, t, {RingMap::parse(t, t, {{"x", "-x"}}), RingMap::identity(t)}),
      input_error);
  // and the right number of maps
  CHECK_THROWS_AS(ConstantAction::make(z2, t, {RingMap::identity(t)}), input_error);
}

TEST_CASE("constant freeness: fixed ideals must be the unit ideal") {
  // on the affine line the origin is fixed: (2x) is not the unit ideal
  PresentedAlgebra line = PresentedAlgebra::free(Q, {"x"});
  ConstantAction bad = sign_action(line);
  ConstantFreenessReport r = freeness_check_constant(bad);
  CHECK(!r.free);
  CHECK(r.offending == 1);
  REQUIRE(r.fixed_ideal.size() == 1);
  CHECK(r.fixed_ideal[0] == line.parse("2*x"));

  // on the punctured line 2x is a unit
  CHECK(freeness_check_constant(sign_action(torus(Q))).free);

  // trivial group: vacuously free
  PresentedAlgebra t = torus(Q);
  CHECK(freeness_check_constant(ConstantAction::cyclic(t, 1, RingMap::identity(t))).free);

  // Z/3 scaling over F7
  PresentedAlgebra t7 = torus(CoeffField::prime(7));
  ConstantAction a7 = ConstantAction::cyclic(t7, 3, RingMap::parse(t7, t7, {{"x", "2*x"}}));
  CHECK(freeness_check_constant(a7).free);
}

TEST_CASE("relation of a constant action: product algebra with the twisted projection") {
  PresentedAlgebra t = torus(Q);
  EquivalenceRelationAff r = relation_from_constant_action(sign_action(t));
  CHECK(r.algebra().same(t));
  CHECK(r.rank() == 2);
  CHECK(r.total().nvars() == 4);  // x, x_inv, e0, e1

  const PresentedAlgebra& c = r.total();
  CHECK(c.nf(r.d2().images()[0] - c.parse("x")).is_zero());
  CHECK(c.nf(r.d1().images()[0] - c.parse("x*e0 - x*e1")).is_zero());

  // delta1 and delta2 agree on invariants and only there
  CHECK(c.nf(r.d1().apply(t.parse("x^2")) - r.d2().apply(t.parse("x^2"))).is_zero());
  CHECK(!c.nf(r.d1().apply(t.parse("x")) - r.d2().apply(t.parse("x"))).is_zero());

  // the basis is the idempotent family of the product decomposition
  CHECK(c.nf(r.view().basis()[0] - c.parse("e0")).is_zero());

  // trivial group: C collapses to A itself
  PresentedAlgebra cube = PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^3", Q, {"x"})});
  EquivalenceRelationAff tr =
      relation_from_constant_action(ConstantAction::cyclic(cube, 1, RingMap::identity(cube)));
  CHECK(tr.rank() == 1);
  for (std::size_t i = 0; i < cube.nvars(); ++i)
    CHECK(tr.total().nf(tr.d1().images()[i] - tr.d2().images()[i]).is_zero());

  // Z/3 over F7: rank three
  PresentedAlgebra t7 = torus(CoeffField::prime(7));
  ConstantAction a7 = ConstantAction::cyclic(t7, 3, RingMap::parse(t7, t7, {{"x", "2*x"}}));
  CHECK(relation_from_constant_action(a7).rank() == 3);

  // non-free sign action on the line: the pair map is not a monomorphism,
  // so the constructor refuses the relation
  PresentedAlgebra line = PresentedAlgebra::free(Q, {"x"});
  CHECK_THROWS_AS(relation_from_constant_action(sign_action(line)), input_error);
}

TEST_CASE("flf quotient of the sign action on the punctured line") {
  PresentedAlgebra t = torus(Q);
  EquivalenceRelationAff r = relation_from_constant_action(sign_action(t));
  QuotientResult q = quotient_flf(r, 4);

  REQUIRE(q.gens.size() == 2);
  CHECK(q.gens[0] == t.parse("x_inv^2"));
  CHECK(q.gens[1] == t.parse("x^2"));
  CHECK(q.inclusion.images() == q.gens);
  CHECK(q.b.nvars() == 2);
  REQUIRE(q.b.relations().gens().size() == 1);
  CHECK(q.b.relations().gens()[0] == q.b.parse("u1*u2 - 1"));
  CHECK(q.certificate == "complete");
  CHECK(all_passed(q.checks));

  // starving the search is inconclusive, not wrong
  CHECK_THROWS_AS(quotient_flf(r, 4, Budget{3}), budget_error);
}

TEST_CASE("flf quotient of the trivial relation returns the algebra itself") {
  PresentedAlgebra cube = PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^3", Q, {"x"})});
  EquivalenceRelationAff r =
      relation_from_constant_action(ConstantAction::cyclic(cube, 1, RingMap::identity(cube)));
  QuotientResult q = quotient_flf(r, 4);
  REQUIRE(q.gens.size() == 1);
  CHECK(q.gens[0] == cube.parse("x"));
  REQUIRE(q.b.relations().gens().size() == 1);
  CHECK(q.b.relations().gens()[0] == q.b.parse("u1^3"));
  CHECK(q.certificate == "complete");
}

TEST_CASE("flf quotient of the order-three scaling over F7") {
  PresentedAlgebra t7 = torus(CoeffField::prime(7));
  ConstantAction a7 = ConstantAction::cyclic(t7, 3, RingMap::parse(t7, t7, {{"x", "2*x"}}));
  EquivalenceRelationAff r = relation_from_constant_action(a7);
  QuotientResult q = quotient_flf(r, 3);
  REQUIRE(q.gens.size() == 2);
  CHECK(q.gens[0] == t7.parse("x_inv^3"));
  CHECK(q.gens[1] == t7.parse("x^3"));
  REQUIRE(q.b.relations().gens().size() == 1);
  CHECK(q.b.relations().gens()[0] == q.b.parse("u1*u2 - 1"));
  CHECK(q.certificate == "complete");
}

TEST_CASE("flf verification: integrality, free basis, tensor square") {
  PresentedAlgebra t = torus(Q);
  EquivalenceRelationAff r = relation_from_constant_action(sign_action(t));
  QuotientResult q = quotient_flf(r, 4);

  FlfVerification v = verify_flf_quotient(r, q);
  CHECK(v.ok());
  CHECK(find_check(v.checks, "equalizer").verdict == Verdict::pass);
  CHECK(find_check(v.checks, "integral").verdict == Verdict::pass);
  CHECK(find_check(v.checks, "free-rank").verdict == Verdict::pass);
  CHECK(find_check(v.checks, "tensor-square").verdict == Verdict::pass);

  REQUIRE(v.basis.size() == 2);
  CHECK(v.basis[0] == t.one());
  CHECK(v.basis[1] == t.parse("x"));

  // a tampered quotient whose generator is not invariant fails the equalizer
  QuotientResult fake = q;
  SubalgebraPresentation sp = present_subalgebra(t, {t.parse("x")}, {"u1"});
  fake.b = sp.alg;
  fake.inclusion = sp.incl;
  fake.gens = {t.parse("x")};
  FlfVerification vf = verify_flf_quotient(r, fake);
  CHECK(!vf.ok());
  CHECK(find_check(vf.checks, "equalizer").verdict == Verdict::fail);
}

TEST_CASE("tensor square over the invariants splits into the product algebra") {
  PresentedAlgebra t = torus(Q);
  EquivalenceRelationAff r = relation_from_constant_action(sign_action(t));
  QuotientResult q = quotient_flf(r, 4);

  TensorAlgebra tt = tensor_over({q.inclusion, q.inclusion});
  RingMap mu = map_from_tensor(tt, {r.d1(), r.d2()});
  const PresentedAlgebra& c = r.total();

  // frozen idempotent preimages: (1 +- x (x) x^-1)/2 hit the two components
  Poly w = tt.alg.nf((tt.alg.one() + tt.leg[0].images()[0] * tt.leg[1].images()[1])
                         .scaled(mpq_class(1, 2)));
  CHECK(c.nf(mu.apply(w) - c.parse("e0")).is_zero());
  Poly w2 = tt.alg.nf((tt.alg.one() - tt.leg[0].images()[0] * tt.leg[1].images()[1])
                          .scaled(mpq_class(1, 2)));
  CHECK(c.nf(mu.apply(w2) - c.parse("e1")).is_zero());
}

TEST_CASE("fiber squares of points over finite fields") {
  // sign action on the punctured line over F5, checked over F5 and F25
  PresentedAlgebra t5 = torus(CoeffField::prime(5));
  EquivalenceRelationAff r5 = relation_from_constant_action(sign_action(t5));
  QuotientResult q5 = quotient_flf(r5, 4);
  CHECK(fiber_square_points_check(r5, q5, 5));
  CHECK(fiber_square_points_check(r5, q5, 25));

  // trivial relation: only the diagonal
  PresentedAlgebra line5 = PresentedAlgebra::free(CoeffField::prime(5), {"x"});
  EquivalenceRelationAff tr =
      relation_from_constant_action(ConstantAction::cyclic(line5, 1, RingMap::identity(line5)));
  QuotientResult tq = quotient_flf(tr, 3);
  CHECK(fiber_square_points_check(tr, tq, 5));

  // a wrong quotient is detected: x^4 identifies too many points over F5
  QuotientResult wrong = q5;
  SubalgebraPresentation sp = present_subalgebra(t5, {t5.parse("x^4")}, {"u1"});
  wrong.b = sp.alg;
  wrong.inclusion = sp.incl;
  wrong.gens = {t5.parse("x^4")};
  CHECK(!fiber_square_points_check(r5, wrong, 5));

  // rational coefficients have no F_q points to enumerate
  PresentedAlgebra tq2 = torus(Q);
  EquivalenceRelationAff rq = relation_from_constant_action(sign_action(tq2));
  QuotientResult qq = quotient_flf(rq, 4);
  CHECK_THROWS_AS(fiber_square_points_check(rq, qq, 5), input_error);

  // mu_3 grading on the punctured line over F7: pairs (x, wx) with w^3 = 1
  PresentedAlgebra t7 = torus(CoeffField::prime(7));
  MGrading g7 = MGrading::make(t7, FgAbGroup::make(0, {3}), {el({1})});
  QuotientResult q7 = quotient_diag(g7, 4);
  CHECK(fiber_square_points_check(g7, q7, 7));
}

TEST_CASE("diagonalizable freeness: unit degree ideals per generator") {
  // scaling on the plane fixes the origin
  PresentedAlgebra plane = PresentedAlgebra::free(Q, {"x", "y"});
  MGrading scal = MGrading::make(plane, FgAbGroup::make(1, {}), {el({1}), el({1})});
  DiagFreenessReport r = freeness_check_diag(scal, 3);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.ideals.size() == 1);
  CHECK(!r.ideals[0].unit);
  REQUIRE(r.ideals[0].gens.size() == 2);
  CHECK(r.ideals[0].gens[0] == plane.parse("x"));
  CHECK(r.ideals[0].gens[1] == plane.parse("y"));

  // at bound 1 the enumeration has not saturated: inconclusive, not a refutation
  CHECK(freeness_check_diag(scal, 1).verdict == Verdict::inconclusive);

  // mu_2 on the punctured line: x is a unit of degree 1
  MGrading mu2 = MGrading::make(torus(Q), FgAbGroup::make(0, {2}), {el({1})});
  CHECK(freeness_check_diag(mu2, 3).verdict == Verdict::pass);

  // trivial character group: vacuously free
  MGrading triv = MGrading::make(plane, FgAbGroup::trivial(), {el({}), el({})});
  DiagFreenessReport tr = freeness_check_diag(triv, 2);
  CHECK(tr.verdict == Verdict::pass);
  CHECK(tr.ideals.empty());
}

TEST_CASE("diagonalizable quotient of the standard projective-line chart") {
  PresentedAlgebra a = PresentedAlgebra::free(Q, {"x", "y"}).localized({"x"});
  MGrading g = MGrading::make(a, FgAbGroup::make(1, {}), {el({1}), el({1})});
  QuotientResult q = quotient_diag(g, 2);
  REQUIRE(q.gens.size() == 1);
  CHECK(q.gens[0] == a.parse("y*x_inv"));
  CHECK(q.b.nvars() == 1);
  CHECK(q.b.relations().gens().empty());
  CHECK(q.certificate == "complete");
  CHECK(find_check(q.checks, "freeness").verdict == Verdict::pass);
  CHECK(find_check(q.checks, "torsor").verdict == Verdict::pass);
  CHECK(all_passed(q.checks));
}

TEST_CASE("diagonalizable quotient refuses non-free actions unless overridden") {
  PresentedAlgebra plane = PresentedAlgebra::free(Q, {"x", "y"});
  MGrading scal = MGrading::make(plane, FgAbGroup::make(1, {}), {el({1}), el({1})});
  CHECK_THROWS_AS(quotient_diag(scal, 3), input_error);
  // undecided freeness propagates as a budget problem
  CHECK_THROWS_AS(quotient_diag(scal, 1), budget_error);

  // override: the invariant ring of the scaling action is just the constants
  QuotientResult q = quotient_diag(scal, 3, true);
  CHECK(q.gens.empty());
  CHECK(q.b.nvars() == 0);
  CHECK(find_check(q.checks, "freeness").verdict == Verdict::fail);
  // no torsor claim is attached
  for (const Certificate& c : q.checks) CHECK(c.name != "torsor");
}

TEST_CASE("PGL2 as the degree-zero part of GL2, with the torsor certificates") {
  MGrading g = gl2_grading(Q);
  PresentedAlgebra a = g.algebra();

  // the classical cofactor identity behind the unit degree ideal
  CHECK(a.nf(a.parse("x11*(x22*dbar) - x12*(x21*dbar) - 1")).is_zero());

  QuotientResult q = quotient_diag(g, 3);
  CHECK(q.gens.size() == 6);
  CHECK(q.certificate == "complete");
  CHECK(find_check(q.checks, "torsor").verdict == Verdict::pass);
  CHECK(all_passed(q.checks));

  TorsorReport t = torsor_check(g, q, 3);
  CHECK(t.verdict == Verdict::pass);
  // surjectivity of the comparison map is certified on both grouplike generators
  CHECK(find_check(t.checks, "grouplike-cover u1").verdict == Verdict::pass);
  CHECK(find_check(t.checks, "grouplike-cover u1_inv").verdict == Verdict::pass);
}

TEST_CASE("point counts of PGL2 over small prime fields") {
  MGrading g3 = gl2_grading(CoeffField::prime(3));
  QuotientResult q3 = quotient_diag(g3, 3);
  CHECK(rational_points(g3.algebra(), 3).size() == 48);  // |GL2(F3)|
  CHECK(rational_points(q3.b, 3).size() == 24);          // |PGL2(F3)|
  CHECK(fiber_square_points_check(g3, q3, 3));

  MGrading g5 = gl2_grading(CoeffField::prime(5));
  QuotientResult q5 = quotient_diag(g5, 3);
  CHECK(rational_points(q5.b, 5).size() == 120);  // |PGL2(F5)|
}

TEST_CASE("torsor check fails where the degree ideal misses the unit") {
  PresentedAlgebra plane = PresentedAlgebra::free(Q, {"x", "y"});
  MGrading scal = MGrading::make(plane, FgAbGroup::make(1, {}), {el({1}), el({1})});
  QuotientResult q = quotient_diag(scal, 3, true);
  TorsorReport t = torsor_check(scal, q, 3);
  CHECK(t.verdict == Verdict::fail);
}

TEST_CASE("isomorphism search: bounded, two-sided, and never a refutation") {
  // two presentations of the coordinate ring of the punctured line
  PresentedAlgebra t = torus(Q);
  std::vector<std::string> n2 = {"u1", "u2"};
  PresentedAlgebra b = PresentedAlgebra::make(Q, n2, {Poly::parse("u1*u2 - 1", Q, n2)});
  IsoSearchResult iso = find_isomorphism(b, t, 2);
  REQUIRE(iso.found);
  CHECK(iso.fwd.source().same(b));
  CHECK(iso.fwd.target().same(t));
  // composites are the identity on generators
  for (std::size_t i = 0; i < b.nvars(); ++i)
    CHECK(b.nf(iso.bwd.apply(iso.fwd.images()[i])) == b.nf(b.var(i)));
  for (std::size_t i = 0; i < t.nvars(); ++i)
    CHECK(t.nf(iso.fwd.apply(iso.bwd.images()[i])) == t.nf(t.var(i)));

  // identical presentations match immediately
  CHECK(find_isomorphism(t, t, 2).found);

  // different dimensions: nothing is found (and nothing is claimed)
  PresentedAlgebra d2 = PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^2", Q, {"x"})});
  PresentedAlgebra d3 = PresentedAlgebra::make(Q, {"x"}, {Poly::parse("x^3", Q, {"x"})});
  CHECK(!find_isomorphism(d2, d3, 3).found);

  // mismatched coefficient fields are malformed input
  CHECK_THROWS_AS(find_isomorphism(t, torus(CoeffField::prime(5)), 2), input_error);
}

TEST_CASE("Kummer route agreement: grading route versus character route") {
  for (long n : {2, 3, 4}) {
    PresentedAlgebra t = torus(Q);
    MGrading g = MGrading::make(t, FgAbGroup::make(0, {n}), {el({1})});
    QuotientResult grad = quotient_diag(g, n + 1);
    REQUIRE(grad.gens.size() == 2);
    CHECK(grad.gens[1] == t.parse("x^" + std::to_string(n)));

    // character route: D(Z) modulo the kernel of Z ->> Z/n
    DiagonalizableGroupScheme gm{Q, FgAbGroup::make(1, {})};
    GroupHom u = GroupHom::make(gm.m, FgAbGroup::make(0, {n}), {{1}});
    DiagQuotient dq = diag_quotient(gm, u);
    DiagCarrier big = diag_carrier(gm);
    RingMap ident = RingMap::parse(big.alg, t, {{"u1", "x"}});

    // the two subalgebras of the punctured line coincide
    SubalgebraTester inside(t, grad.gens);
    for (const Poly& img : dq.carrier_incl.images())
      CHECK(inside.contains(t.nf(ident.apply(img))));
    std::vector<Poly> charside;
    for (const Poly& img : dq.carrier_incl.images()) charside.push_back(t.nf(ident.apply(img)));
    // carrier generators come with their companions, which close the span
    SubalgebraTester other(t, charside);
    for (const Poly& gen : grad.gens) CHECK(other.contains(gen));

    // and the presentations are exhibited isomorphic
    DiagCarrier small = diag_carrier(dq.group);
    IsoSearchResult iso = find_isomorphism(grad.b, small.alg, 2);
    CHECK(iso.found);
  }
}

TEST_CASE("gallery: the projective line from its two charts") {
  GalleryReport r = gallery("p1_charts", {/*bound=*/4});
  CHECK(r.verdict == Verdict::pass);
  bool saw_first = false, saw_second = false, saw_glue = false;
  for (const std::string& s : r.notes) {
    if (s.find("y*x_inv") != std::string::npos) saw_first = true;
    if (s.find("x*y_inv") != std::string::npos) saw_second = true;
    if (s.find("t -> t^-1") != std::string::npos) saw_glue = true;
  }
  CHECK(saw_first);
  CHECK(saw_second);
  CHECK(saw_glue);
}

TEST_CASE("gallery: PGL2") {
  GalleryReport r = gallery("pgl2", {/*bound=*/3});
  CHECK(r.verdict == Verdict::pass);
  CHECK(find_check(r.checks, "point-count-F3").detail.find("24") != std::string::npos);
  CHECK(find_check(r.checks, "point-count-F5").detail.find("120") != std::string::npos);
  CHECK(find_check(r.checks, "fiber-square-F3").verdict == Verdict::pass);
}

TEST_CASE("gallery: Kummer quotients of the torus") {
  for (std::uint64_t n : {2, 4}) {
    GalleryOptions opt;
    opt.bound = n + 1;
    opt.n = n;
    GalleryReport r = gallery("kummer_mu_n", opt);
    CHECK(r.verdict == Verdict::pass);
    CHECK(find_check(r.checks, "route-agreement").verdict == Verdict::pass);
    CHECK(find_check(r.checks, "fiber-square-F5").verdict == Verdict::pass);
    CHECK(find_check(r.checks, "fiber-square-F25").verdict == Verdict::pass);
  }
}

TEST_CASE("gallery: the sign action on the torus through the flf machinery") {
  GalleryReport r = gallery("gm_mod_mu2", {/*bound=*/4});
  CHECK(r.verdict == Verdict::pass);
  CHECK(find_check(r.checks, "free-rank").verdict == Verdict::pass);
  CHECK(find_check(r.checks, "tensor-square").verdict == Verdict::pass);
  CHECK(find_check(r.checks, "route-agreement").verdict == Verdict::pass);
  CHECK(find_check(r.checks, "fiber-square-F5").verdict == Verdict::pass);
  CHECK(find_check(r.checks, "fiber-square-F25").verdict == Verdict::pass);
  bool saw_basis = false;
  for (const std::string& s : r.notes)
    if (s.find("basis") != std::string::npos && s.find("x") != std::string::npos)
      saw_basis = true;
  CHECK(saw_basis);
}

TEST_CASE("gallery: non-free actions are rejected, with the invariants on record") {
  GalleryReport a1 = gallery("a1_z2_nonfree", {/*bound=*/4});
  CHECK(a1.verdict == Verdict::fail);
  CHECK(find_check(a1.checks, "freeness").verdict == Verdict::fail);
  CHECK(find_check(a1.checks, "freeness").detail.find("2*x") != std::string::npos);
  CHECK(find_check(a1.checks, "closed-immersion").verdict == Verdict::fail);
  bool saw_invariants = false;
  for (const std::string& s : a1.notes)
    if (s.find("x^2") != std::string::npos) saw_invariants = true;
  CHECK(saw_invariants);

  GalleryReport a2 = gallery("a2_gm_nonfree", {/*bound=*/3});
  CHECK(a2.verdict == Verdict::fail);
  Certificate f = find_check(a2.checks, "freeness");
  CHECK(f.verdict == Verdict::fail);
  CHECK(f.detail.find("x") != std::string::npos);
  CHECK(f.detail.find("y") != std::string::npos);
}

TEST_CASE("gallery: equivariant non-descent of the twisted ideal") {
  GalleryReport r = gallery("equivariant_nondescent", {/*bound=*/4, /*n=*/2});
  CHECK(r.verdict == Verdict::pass);
  bool saw = false;
  for (const std::string& s : r.notes)
    if (s.find("s^2") != std::string::npos) saw = true;
  CHECK(saw);
}

TEST_CASE("gallery: registry") {
  CHECK(gallery_names().size() == 7);
  for (const auto& [name, desc] : gallery_names()) CHECK(!desc.empty());
  CHECK_THROWS_AS(gallery("unknown_entry", {}), input_error);
}
