#include <doctest.h>

#include "dmk/parse.hpp"
#include "dmk/stdmodel.hpp"

using namespace dmk;

namespace {

Poly P1(const std::string& t) { return parse_poly(t, {"x"}); }

PolyMatrix mat1(const std::string& t) {
  PolyMatrix m(1, 1, 1);
  m.at(0, 0) = P1(t);
  return m;
}

WitnessPoint origin1() { return WitnessPoint::from_exact({Scalar(0)}); }

}  // namespace

TEST_CASE("model basics") {
  StdModel X(1, 1, {P1("x^2")});
  CHECK(X.n() == 1);
  CHECK(X.k() == 1);
  CHECK(X.vdim() == 0);
  CHECK(X.orient() == 1);
  CHECK(ideal_member(P1("x^3"), X.Is()));
  CHECK(!ideal_member(P1("x^2"), X.Is2()));
  CHECK(ideal_member(P1("x^4"), X.Is2()));
  CHECK_THROWS_AS(StdModel(1, 2, {P1("x")}), DimensionError);
}

TEST_CASE("witness membership respects section and domain") {
  StdModel X(1, 1, {P1("x^2 - x")}, {P1("x")});  // domain x > 0
  CHECK(X.is_witness(WitnessPoint::from_exact({Scalar(1)})));
  CHECK(!X.is_witness(origin1()));  // domain inequality is strict
  CHECK(!X.is_witness(WitnessPoint::from_exact({Scalar(2)})));  // s != 0
  CHECK(X.is_witness(WitnessPoint::from_float({1.0 + 1e-12}, 1e-9)));
}

TEST_CASE("manifold criterion distinguishes x from x^2") {
  StdModel cut(1, 1, {P1("x")});
  StdModel obstructed(1, 1, {P1("x^2")});
  CHECK(cut.is_manifold_at(origin1()));
  CHECK(!obstructed.is_manifold_at(origin1()));
}

TEST_CASE("morphism validity depends on fhat only mod the section ideal") {
  StdModel X(1, 1, {P1("x")});
  StdModel Y(1, 1, {P1("x^2")});
  std::vector<Poly> f{P1("x^2")};
  CHECK(validate_mor(X, Y, f, mat1("x^3")).valid);
  CHECK(validate_mor(X, Y, f, mat1("x")).valid);
  ValidationReport bad = validate_mor(X, Y, f, mat1("1"));
  CHECK(!bad.valid);
  CHECK(!bad.violations.empty());
}

TEST_CASE("morphism equality is congruence-class equality") {
  StdModel X(1, 1, {P1("x")});
  StdModel Y(1, 1, {P1("x^2")});
  StdMor a(X, Y, {P1("x^2")}, mat1("x^3"));
  StdMor b(X, Y, {P1("x^2")}, mat1("x"));          // fhat differs by x^3 - x in <x>
  StdMor c(X, Y, {P1("x^2 + x^3")}, mat1("x^3"));  // map differs by x^3 in <x^2>
  CHECK(mor_equal(a, b));
  CHECK(mor_equal(a, c));
  StdMor d(X, Y, {P1("x^2 + x")}, mat1("x^3"));  // map differs by x, not in <x^2>
  CHECK(!mor_equal(a, d));
}

TEST_CASE("composition and identity laws") {
  StdModel X(1, 1, {P1("x")});
  StdModel Y(1, 1, {P1("x^2")});
  StdMor f(X, Y, {P1("x^2")}, mat1("x"));
  CHECK(mor_equal(compose_mor(StdMor::identity(Y), f), f));
  CHECK(mor_equal(compose_mor(f, StdMor::identity(X)), f));

  StdModel Z(1, 1, {P1("x^4")});
  StdMor g(Y, Z, {P1("x")}, mat1("x^2"));
  StdMor gf = compose_mor(g, f);
  CHECK(mor_equal(gf, StdMor(X, Z, {P1("x^2")}, mat1("x^5"))));
}

TEST_CASE("image of a witness point is a witness of the target") {
  StdModel X(1, 1, {P1("x")});
  StdModel Y(1, 1, {P1("x^2")});
  StdMor f(X, Y, {P1("x^2")}, mat1("x"));
  WitnessPoint im = f.image_point(origin1());
  CHECK(Y.is_witness(im));
}

TEST_CASE("two-morphisms and their equality") {
  StdModel X(1, 1, {P1("x")});
  StdMor a = StdMor::identity(X);
  // b = a + Lambda . s with Lambda = [2]: map x + 2x, fhat 1 + 2.
  StdMor b(X, X, {P1("3*x")}, mat1("3"));
  CHECK(validate_2mor(a, b, mat1("2")).valid);
  CHECK(!validate_2mor(a, b, mat1("1")).valid);
  StdTwoMor t1(a, b, mat1("2"));
  StdTwoMor t2(a, b, mat1("2 + x"));  // Lambda mod <x>
  CHECK(two_mor_equal(t1, t2));

  // Vertical composition adds Lambda.
  StdMor c(X, X, {P1("4*x")}, mat1("4"));
  StdTwoMor t3(b, c, mat1("1"));
  StdTwoMor v = vcompose_2mor(t3, t1);
  CHECK(two_mor_equal(v, StdTwoMor(a, c, mat1("3"))));

  // Horizontal composition of identities is the identity.
  StdTwoMor h = hcompose_2mor(StdTwoMor::identity(a), StdTwoMor::identity(a));
  CHECK(two_mor_equal(h, StdTwoMor::identity(compose_mor(a, a))));
}

TEST_CASE("virtual cotangent complex") {
  StdModel X(1, 1, {P1("x^2")});
  VComplex c = cotangent_complex(X);
  CHECK(c.r1 == 1);
  CHECK(c.r2 == 1);
  CHECK(c.rank() == 0);
  CHECK(c.phi.at(0, 0) == P1("2*x"));
  CHECK(c.ring.same_presentation(X.ring()));
}

TEST_CASE("etale criterion worked examples") {
  StdModel Q(1, 1, {P1("x^2")});
  // Identity is etale everywhere.
  EtaleVerdict v1 = etale_at(StdMor::identity(Q), origin1());
  CHECK(v1.etale);
  CHECK(v1.classify_agrees);

  // Reflection on S_{R,R,x}: f = -x, fhat = -1.
  StdModel L(1, 1, {P1("x")});
  StdMor refl(L, L, {P1("-x")}, mat1("-1"));
  EtaleVerdict v2 = etale_at(refl, origin1());
  CHECK(v2.etale);
  CHECK(v2.classify_agrees);

  // f = x^2 into the obstructed model: the bundle row degenerates at 0.
  StdMor sq(L, Q, {P1("x^2")}, mat1("x^3"));
  EtaleVerdict v3 = etale_at(sq, origin1());
  CHECK(!v3.etale);
  CHECK(v3.classify_agrees);
}

TEST_CASE("classification: embeddings and submersions via the cotangent map") {
  // Canonical embedding of an obstructed model: omega is surjective
  // (immersion direction) but not injective.
  StdModel Q(1, 1, {P1("x^2")});
  StdMor emb = standard_embedding(Q);
  auto cls = classify_mor_at(emb, {origin1()});
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].cls.surjective);
  CHECK(!cls[0].cls.injective);
  CHECK(cls[0].witness_injective);

  // Coordinate projection of manifolds: omega injective, not surjective.
  StdModel plane(2, 0, {});
  StdModel line(1, 0, {});
  StdMor proj(plane, line, {parse_poly("x", {"x", "y"})}, PolyMatrix(0, 0, 2));
  auto pcls = classify_mor_at(proj, {WitnessPoint::from_exact({Scalar(0), Scalar(0)})});
  CHECK(pcls[0].cls.injective);
  CHECK(!pcls[0].cls.surjective);

  // Witness-level injectivity failure: fold map on two witnesses.
  StdModel twopts(1, 1, {P1("x^2 - 1")});
  StdModel target(1, 1, {P1("x^2 - 1")});
  StdMor fold(twopts, target, {P1("x^2 - 2")}, mat1("x^2 - 3"));
  auto fcls = classify_mor_at(fold, {WitnessPoint::from_exact({Scalar(1)}),
                                     WitnessPoint::from_exact({Scalar(-1)})});
  CHECK(!fcls[0].witness_injective);
}

TEST_CASE("validity is independent of domain shrinking") {
  StdModel X(1, 1, {P1("x")});
  StdModel Xs(1, 1, {P1("x")}, {P1("1 - x^2")});  // shrink to |x| < 1
  StdModel Y(1, 1, {P1("x^2")});
  std::vector<Poly> f{P1("x^2")};
  CHECK(validate_mor(X, Y, f, mat1("x")).valid == validate_mor(Xs, Y, f, mat1("x")).valid);
  CHECK(validate_mor(X, Y, f, mat1("1")).valid == validate_mor(Xs, Y, f, mat1("1")).valid);
}
