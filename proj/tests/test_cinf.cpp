#include <doctest.h>

#include <random>

#include "dmk/cinf.hpp"
#include "dmk/parse.hpp"

using namespace dmk;

namespace {

Poly P1(const std::string& t) { return parse_poly(t, {"x"}); }

FgRing dual_numbers() { return FgRing(1, Ideal(1, {P1("x^2")})); }

}  // namespace

TEST_CASE("quotient operations") {
  FgRing R = dual_numbers();
  Poly uv = parse_poly("u*v", {"u", "v"});
  CHECK(quotient_op(uv, {P1("x"), P1("x")}, R).is_zero());
  CHECK(quotient_op(parse_poly("u + v", {"u", "v"}), {P1("x"), P1("1")}, R) == P1("x + 1"));
  CHECK_THROWS_AS(quotient_op(uv, {P1("x")}, R), DimensionError);
}

TEST_CASE("quotient operations ignore the representative") {
  FgRing R(2, Ideal(2, {parse_poly("x^2 - y", {"x", "y"})}));
  Poly f = parse_poly("u^2 + 3*u*v - v", {"u", "v"});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(-2, 2), e(0, 1);
  for (int t = 0; t < 50; ++t) {
    Poly noise(2);
    for (int i = 0; i < 2; ++i) noise.add_term(Monomial{e(rng), e(rng)}, Scalar(coeff(rng)));
    Poly a = parse_poly("x + y", {"x", "y"});
    Poly b = parse_poly("y", {"x", "y"});
    Poly shifted = a + noise * R.ideal().generators()[0];
    CHECK(quotient_op(f, {shifted, b}, R) == quotient_op(f, {a, b}, R));
  }
}

TEST_CASE("ring equality is normal-form equality") {
  FgRing R = dual_numbers();
  CHECK(R.equal(P1("x^2 + x"), P1("x")));
  CHECK(!R.equal(P1("x"), P1("0")));
  CHECK(R.reduce(P1("x^3 + x^2 + 1")) == P1("1"));
}

TEST_CASE("ring morphism validity") {
  FgRing R = dual_numbers();
  FgRing free1 = FgRing::free_ring(1);
  // u -> x^2 maps <u> into <x^2>: fine.
  CHECK_NOTHROW(RingMor(FgRing(1, Ideal(1, {P1("x")})), R, {P1("x^2")}));
  // u -> x does not map <u^2>'s quotient structure... the ideal condition:
  // source <u> must land in the zero ideal of the free target.
  CHECK_THROWS_AS(RingMor(FgRing(1, Ideal(1, {P1("x")})), free1, {P1("x")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RingMor(free1, R, {}), DimensionError);
}

TEST_CASE("cotangent module of the dual numbers") {
  CotModule c = cotangent(dual_numbers());
  CHECK(c.rank == 1);
  CHECK(c.relations.rows() == 1);
  CHECK(c.relations.cols() == 1);
  CHECK(c.relations.at(0, 0) == P1("2*x"));
}

TEST_CASE("cotangent of a free ring has no relations") {
  CotModule c = cotangent(FgRing::free_ring(3));
  CHECK(c.rank == 3);
  CHECK(c.relations.rows() == 0);
}

TEST_CASE("cotangent pushforward and the chain rule") {
  FgRing R = dual_numbers();
  RingMor phi(FgRing::free_ring(1), R, {P1("x^2")});
  PolyMatrix p = cotangent_pushforward(phi);
  CHECK(p.rows() == 1);
  CHECK(p.at(0, 0) == P1("2*x"));

  // Functoriality: the matrix of a composite is the chain-rule product.
  // Images live in the target's variables, so the composite image is
  // g_i(f(x)) and its gradient is (Jg o f) . Jf.
  FgRing A = FgRing::free_ring(1), B = FgRing::free_ring(1), C = FgRing::free_ring(1);
  RingMor inner(A, B, {P1("x^2 + 1")});
  RingMor outer(B, C, {P1("x^3")});
  RingMor comp = outer.compose_after(inner);
  PolyMatrix lhs = cotangent_pushforward(comp);
  PolyMatrix rhs = cotangent_pushforward(inner).compose(outer.images()) *
                   cotangent_pushforward(outer);
  CHECK(lhs == rhs.reduce(C.ideal()));
}
