/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tbelyi/belyi.hpp"

using namespace tbelyi;

namespace {

CurvePoint pt(long x, long y) { return CurvePoint(FieldElement(x), FieldElement(y)); }

std::set<CurvePoint> point_set(const std::vector<CurvePoint>& v) { return {v.begin(), v.end()}; }

// Resolved fiber points with e >= 2.
std::set<CurvePoint> ramified(const BelyiPair& pair) {
  std::set<CurvePoint> out;
  for (const auto& z : fibers(pair))
    for (const auto& p : z.points)
      if (p.order >= 2) out.insert(p.point);
  return out;
}

}  // namespace

TEST_CASE("pair construction validates the map") {
  EllipticCurve E(0, 0, 0, 0, 1);
  CHECK_THROWS_AS(BelyiPair("c", E, "5"), Error);
  CHECK_THROWS_AS(BelyiPair("m", E, CurveFunction::x(EllipticCurve(0, 0, 0, -1, 0))), Error);
  CHECK_THROWS_AS(BelyiPair("p", E, "(1-y"), Error);
}

TEST_CASE("fibers of the degree-3 map on y^2 = x^3 + 1") {
  EllipticCurve E(0, 0, 0, 0, 1);
  BelyiPair pair("t", E, "(1-y)/2");
  auto f = fibers(pair);
  REQUIRE(f[0].points.size() == 1);
  CHECK(f[0].points[0].point == pt(0, 1));
  CHECK(f[0].points[0].order == 3);
  CHECK(f[1].points[0].point == pt(0, -1));
  CHECK(f[2].points[0].point == CurvePoint::infinity());
}

TEST_CASE("critical points") {
  EllipticCurve E(0, 0, 0, 0, 1);
  BelyiPair t("t", E, "(1-y)/2");
  CriticalSet c = critical_points(t);
  CHECK(point_set(c.points) == std::set<CurvePoint>{CurvePoint::infinity(), pt(0, 1), pt(0, -1)});
  CHECK(c.unresolved.empty());

  EllipticCurve F(0, 0, 0, -1, 0);
  BelyiPair s("s", F, "x^2");
  CHECK(point_set(critical_points(s).points) ==
        std::set<CurvePoint>{CurvePoint::infinity(), pt(0, 0), pt(1, 0), pt(-1, 0)});

  // x on y^2 = x^3 + 1 ramifies over every 2-torsion point, including two quadratic ones
  BelyiPair x("x", E, "x");
  CriticalSet cx = critical_points(x);
  CHECK(cx.points.size() == 4);
}

TEST_CASE("Belyi test is tri-state") {
  EllipticCurve E(0, 0, 0, 0, 1);
  CHECK(is_belyi(BelyiPair("t", E, "(1-y)/2")).result == Tri::True);
  BelyiCheck bad = is_belyi(BelyiPair("x", E, "x"));
  CHECK(bad.result == Tri::False);
  REQUIRE(bad.offending_value);
  CHECK_FALSE(bad.offending_value->infinite);
  // x^3 + 2 ramifies over the roots of x^3 + 2 ... which are cubic and lie in the fiber over 0
  BelyiCheck cubic = is_belyi(BelyiPair("c", EllipticCurve(0, 0, 0, 1, 0), "x^3 + 2"));
  CHECK(cubic.result != Tri::True);
}

TEST_CASE("Jacobian test agrees with ramification from series") {
  struct Sample {
    EllipticCurve E;
    std::vector<CurvePoint> points;
  };
  std::vector<Sample> samples = {
      {EllipticCurve(0, 0, 0, 0, 1), {pt(0, 1), pt(0, -1), pt(2, 3), pt(2, -3), pt(-1, 0)}},
      {EllipticCurve(0, 0, 0, -1, 0), {pt(0, 0), pt(1, 0), pt(-1, 0)}},
      {EllipticCurve(1, 1, 1, 22, -9), {pt(9, -37), pt(1, -5)}},
  };
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto random_poly = [&](int deg) {
    std::vector<FieldElement> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(coef(rng));
    return FieldPolynomial(std::move(c));
  };
  int compared = 0, critical = 0;
  for (const auto& s : samples) {
    for (int trial = 0; trial < 40; ++trial) {
      const CurvePoint& P = s.points[static_cast<std::size_t>(trial) % s.points.size()];
      FieldPolynomial u = random_poly(2), v = random_poly(1), w = random_poly(2);
      if (w.is_zero() || (u.is_zero() && v.is_zero())) continue;
      // force a critical point at P half of the time: compose with (t - c)^2
      CurveFunction f(s.E, u, v, w);
      if (f.is_constant()) continue;
      if (trial % 2 == 0) {
        ExtendedValue c = cf_eval(f, P);
        if (!c.infinite) {
          CurveFunction g = f - CurveFunction::constant(s.E, c.value);
          f = g * g + f;
        }
      }
      if (f.is_constant()) continue;
      auto j = jacobian_vanishes(f, P);
      int e = ram_index(f, P);
      if (j) {
        CHECK(*j == (e >= 2));
        ++compared;
        critical += e >= 2;
      }
    }
  }
  CHECK(compared >= 80);
  CHECK(critical >= 10);
}

TEST_CASE("critical points of Belyi maps are exactly the ramified fiber points") {
  std::vector<BelyiPair> pairs = {
      BelyiPair("a", EllipticCurve(0, 0, 0, 0, 1), "(1-y)*(3+y)/4"),
      BelyiPair("b", EllipticCurve(0, 0, 0, 0, 1), "-x^3"),
      BelyiPair("c", EllipticCurve(0, 1, 0, 16, 180), "(4*y + x^2 + 56)/108"),
      BelyiPair("d", EllipticCurve(0, 0, 0, 6, -7), "(x-1)^3/27"),
      BelyiPair("e", EllipticCurve(0, 0, 0, 1, 0), "(x+1)^4/(8*x*(x^2+1))"),
  };
  for (const auto& p : pairs) {
    CAPTURE(p.label);
    CHECK(point_set(critical_points(p).points) == ramified(p));
    CHECK(is_belyi(p).result == Tri::True);
  }
}

TEST_CASE("subgroup closure and group structure") {
  EllipticCurve E(0, 0, 0, 0, 1);
  auto c3 = subgroup_closure(E, {pt(0, 1)});
  REQUIRE(c3);
  CHECK(c3->size() == 3);
  CHECK(group_structure(E, *c3) == GroupStructure{1, 3});
  auto c6 = subgroup_closure(E, {pt(2, 3)});
  REQUIRE(c6);
  CHECK(group_structure(E, *c6).to_string() == "Z6");
  EllipticCurve F(0, 0, 0, -1, 0);
  auto v4 = subgroup_closure(F, {pt(0, 0), pt(1, 0)});
  REQUIRE(v4);
  CHECK(group_structure(F, *v4).to_string() == "Z2 x Z2");
  CHECK_THROWS_AS(group_structure(E, {CurvePoint::infinity(), pt(0, 1)}), Error);
  // a point of infinite order: (3, 5) on y^2 = x^3 - 2
  EllipticCurve G(0, 0, 0, 0, -2);
  CHECK_FALSE(subgroup_closure(G, {pt(3, 5)}, 64).has_value());
}

TEST_CASE("group order statistics distinguish Z4 x Z2 from Z8") {
  // brute-force oracle over Z/n x Z/m
  auto count = [](int n, int m, int order) {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        int k = 1;
        while ((i * k) % n != 0 || (j * k) % m != 0) ++k;
        c += k == order;
      }
    return c;
  };
  CHECK(count(2, 4, 4) == 4);
  CHECK(count(1, 8, 8) == 4);
  CHECK(count(2, 4, 2) == 3);
  CHECK(parse_group("Z2xZ10") == GroupStructure{2, 10});
  CHECK(parse_group("Z_2 x Z_4") == GroupStructure{2, 4});
  CHECK(parse_group("Z8") == GroupStructure{1, 8});
  CHECK_THROWS_AS(parse_group("Z4xZ6"), Error);
  CHECK_THROWS_AS(parse_group("C8"), Error);
}

TEST_CASE("analysis report") {
  EllipticCurve E(0, 0, 0, 0, 1);
  QuasiCriticalReport r = analyze(BelyiPair("t", E, "(1-y)/2"));
  CHECK(r.degree == 3);
  CHECK(r.fiber_sums == std::array<int, 3>{3, 3, 3});
  CHECK(r.ram_multiset() == std::vector<int>{3, 3, 3});
  CHECK(r.all_torsion);
  REQUIRE(r.group);
  CHECK(r.group->to_string() == "Z3");
  int calls = 0;
  AnalysisOptions opts;
  opts.checkpoint = [&] {
    if (++calls > 2) throw Error(ErrorCode::Timeout, "stop");
  };
  CHECK_THROWS_AS(analyze(BelyiPair("t", E, "(1-y)/2"), opts), Error);
}

TEST_CASE("one-variable maps and dynamical decompositions") {
  OneVarMap g = OneVarMap::parse("4*z*(1-z)");
  CHECK(g.degree() == 2);
  CHECK(g.is_dynamical());
  CHECK(g.eval(ExtendedValue::finite(Rational(1, 2))) == ExtendedValue::finite(1));
  CHECK(g.eval(ExtendedValue::infinity()) == ExtendedValue::infinity());
  CHECK_FALSE(OneVarMap::parse("z^2 + 2").is_dynamical());
  OneVarMap h = OneVarMap::parse("(z^2+1)^2/(4*z^2)");
  CHECK(h.eval(ExtendedValue::finite(0)) == ExtendedValue::infinity());
  CHECK(h.eval(ExtendedValue::finite(1)) == ExtendedValue::finite(1));
  CHECK(OneVarMap::parse("z^2/z").degree() == 1);
  CHECK_THROWS_AS(OneVarMap::parse("1/(z-z)"), Error);
  CHECK_THROWS_AS(OneVarMap::parse("x + 1"), Error);

  EllipticCurve F(0, 0, 0, -1, 0);
  CurveFunction beta = CurveFunction::parse("1-x^2", F);
  CHECK(decompose_verify(beta, g, CurveFunction::parse("(x+1)/2", F)).ok());
  CHECK_FALSE(decompose_verify(beta, g, CurveFunction::parse("(x+2)/2", F)).composes);
  EllipticCurve G(0, 0, 0, 1, 0);
  CurveFunction b8 = CurveFunction::parse("(x+1)^4/(8*x*(x^2+1))", G);
  CHECK(decompose_verify(b8, h, CurveFunction::parse("sqrt(2)*x/y", G)).ok());
}
