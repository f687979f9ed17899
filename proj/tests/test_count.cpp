#include <doctest.h>

#include "dmk/count.hpp"
#include "dmk/parse.hpp"

using namespace dmk;

namespace {

Poly P1(const std::string& t) { return parse_poly(t, {"x"}); }

CountProblem problem1(const std::string& s, double lo, double hi, int orient = 1) {
  CountProblem p{StdModel(1, 1, {P1(s)}, {}, orient), {{lo, hi}}};
  return p;
}

}  // namespace

TEST_CASE("signed counts of univariate sections") {
  CountReport a = virtual_count(problem1("x", -1, 1));
  CHECK(a.ok);
  CHECK(a.count == 1);

  CountReport b = virtual_count(problem1("x^2", -1, 1));
  CHECK(b.ok);
  CHECK(b.count == 0);

  CountReport c = virtual_count(problem1("x^3", -1, 1));
  CHECK(c.ok);
  CHECK(c.count == 1);
}

TEST_CASE("replicas agree across seeds and epsilons") {
  CountProblem p = problem1("x^3 - x", -2, 2);
  CountReport r = virtual_count(p);
  CHECK(r.ok);
  CHECK(r.count == 1);  // derivative signs +, -, + at the roots -1, 0, 1
  CHECK(r.replicas.size() == p.seeds.size() * p.epsilons.size());
  for (const auto& rep : r.replicas) CHECK(rep.count == r.count);
}

TEST_CASE("orientation reversal negates the count") {
  CountReport plus = virtual_count(problem1("x^3", -1, 1, +1));
  CountReport minus = virtual_count(problem1("x^3", -1, 1, -1));
  CHECK(plus.ok);
  CHECK(minus.ok);
  CHECK(minus.count == -plus.count);
}

TEST_CASE("count is additive over a box splitting") {
  CountReport whole = virtual_count(problem1("x^2 - 1", -2, 2));
  CountReport left = virtual_count(problem1("x^2 - 1", -2, 0));
  CountReport right = virtual_count(problem1("x^2 - 1", 0, 2));
  CHECK(whole.ok);
  CHECK(left.ok);
  CHECK(right.ok);
  CHECK(left.count == -1);
  CHECK(right.count == 1);
  CHECK(whole.count == left.count + right.count);
}

TEST_CASE("two-dimensional system with enumerable zeros") {
  // Zeros of (x^2 - y, y^2 - x) in the box: (0,0) with det -1 and (1,1)
  // with det 3, so the signed count is 0.
  std::vector<std::string> vars{"x", "y"};
  StdModel X(2, 2, {parse_poly("x^2 - y", vars), parse_poly("y^2 - x", vars)});
  CountProblem p{X, {{-2, 2}, {-2, 2}}};
  CountReport r = virtual_count(p);
  CHECK(r.ok);
  CHECK(r.count == 0);
  for (const auto& rep : r.replicas) CHECK(rep.zeros.size() == 2);
}

TEST_CASE("zero-dimensional model counts its orientation") {
  CountProblem p{StdModel(0, 0, {}, {}, -1), {}};
  CountReport r = virtual_count(p);
  CHECK(r.ok);
  CHECK(r.count == -1);
}

TEST_CASE("boundary zeros are rejected, not silently counted") {
  // s = x vanishes on the boundary of [0, 1]: certification must fail.
  CountReport r = virtual_count(problem1("x", 0, 1));
  CHECK(!r.ok);
  CHECK(!r.error.empty());
}

TEST_CASE("nonzero virtual dimension is rejected") {
  StdModel X(2, 1, {parse_poly("x", {"x", "y"})});
  CountProblem p{X, {{-1, 1}, {-1, 1}}};
  CountReport r = virtual_count(p);
  CHECK(!r.ok);
}

TEST_CASE("intersection number of two lines in the plane") {
  // x-axis and y-axis as maps of R into R^2. The count is -1 under the
  // committed orientation convention (the classical value up to the fixed
  // sign sigma = +1 and the ordering of the fibre coordinates).
  StdModel line(1, 0, {});
  std::vector<Poly> g{P1("x"), P1("0")};
  std::vector<Poly> h{P1("0"), P1("x")};
  CountReport r = intersection_number(line, g, line, h, 2, {{-1, 1}, {-1, 1}});
  CHECK(r.ok);
  CHECK(r.count == -1);
}

TEST_CASE("disjoint images have intersection number zero") {
  StdModel line(1, 0, {});
  std::vector<Poly> g{P1("x"), P1("0")};
  std::vector<Poly> h{P1("x"), P1("3")};
  CountReport r = intersection_number(line, g, line, h, 2, {{-1, 1}, {-1, 1}});
  CHECK(r.ok);
  CHECK(r.count == 0);
}
