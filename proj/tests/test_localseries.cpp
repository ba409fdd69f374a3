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

#include "tbelyi/funcfield.hpp"
#include "tbelyi/localseries.hpp"

using namespace tbelyi;

namespace {

PowerSeries series(int val, std::vector<long> c, int prec) {
  std::vector<FieldElement> f;
  for (long v : c) f.emplace_back(v);
  return PowerSeries::from_coefficients(val, std::move(f), prec);
}

EllipticCurve curve(long a1, long a2, long a3, long a4, long a6) {
  return EllipticCurve(a1, a2, a3, a4, a6);
}

}  // namespace

TEST_CASE("series arithmetic") {
  PowerSeries t = PowerSeries::variable(10);
  PowerSeries a = series(1, {1, 1}, 10);  // t + t^2
  PowerSeries r = a * t.inverse();
  CHECK(r.valuation() == 0);
  CHECK(r.coefficient(0) == FieldElement(1));
  CHECK(r.coefficient(1) == FieldElement(1));
  CHECK(r.coefficient(2).is_zero());

  PowerSeries g = PowerSeries::constant(1, 8) / series(0, {1, -1}, 8);
  for (int k = 0; k < 8; ++k) CHECK(g.coefficient(k) == FieldElement(1));
  CHECK(g.precision() == 8);

  PowerSeries q = series(3, {1, 2}, 12) / series(1, {1}, 12);
  CHECK(q.valuation() == 2);
  CHECK(q.coefficient(3) == FieldElement(2));
  CHECK_THROWS_AS(PowerSeries::zero(5).inverse(), Error);
}

TEST_CASE("precision is the minimum window") {
  PowerSeries a = series(0, {1, 2, 3}, 5), b = series(-2, {1}, 9);
  CHECK((a + b).precision() == 5);
  CHECK((a * b).precision() == 3);  // min(0 + 9, -2 + 5)
  PowerSeries z = series(0, {0, 0}, 4);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.valuation(), Error);
}

TEST_CASE("chart at O on y^2 = x^3 - x") {
  EllipticCurve E = curve(0, 0, 0, -1, 0);
  LocalChart c = branch_expand(E, CurvePoint::infinity(), 16);
  CHECK(c.kind == ChartKind::AtInfinity);
  CHECK(c.x.valuation() == -2);
  CHECK(c.y.valuation() == -3);
  CHECK(c.x.leading() == FieldElement(1));
  CHECK(c.y.leading() == FieldElement(1));
  CHECK(chart_residual(E, c).is_zero());
  // t = x / y
  PowerSeries ratio = c.x / c.y;
  CHECK(ratio.valuation() == 1);
  CHECK(ratio.coefficient(1) == FieldElement(1));
  CHECK(ratio.coefficient(2).is_zero());
}

TEST_CASE("chart at 2-torsion uses t = y") {
  EllipticCurve E = curve(0, 0, 0, -1, 0);
  LocalChart c = branch_expand(E, CurvePoint(0, 0), 12);
  CHECK(c.kind == ChartKind::YShift);
  CHECK(chart_residual(E, c).is_zero());
  // x = -t^2 + ...
  CHECK(c.x.valuation() == 2);
  CHECK(c.x.coefficient(2) == FieldElement(-1));
}

TEST_CASE("chart centred at an ordinary point") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  LocalChart c = branch_expand(E, CurvePoint(2, 3), 8);
  CHECK(c.kind == ChartKind::XShift);
  CHECK(c.y.coefficient(0) == FieldElement(3));
  CHECK(chart_residual(E, c).is_zero());
  CHECK_THROWS_AS(branch_expand(E, CurvePoint(1, 1), 8), Error);
}

TEST_CASE("charts satisfy the curve at quadratic points and on long forms") {
  EllipticCurve E = curve(1, 1, 1, 22, -9);
  CurvePoint P(FieldElement::quadratic(-1, 2, -5), FieldElement(3));
  for (const CurvePoint& Q : {P, CurvePoint(9, -37), CurvePoint(1, -5), CurvePoint::infinity()}) {
    LocalChart c = branch_expand(E, Q, 16);
    CHECK(chart_residual(E, c).is_zero());
  }
  EllipticCurve F = curve(1, 1, 1, -10, -10);
  // (-1, 0) satisfies 0 = -1 + 1 + 10 - 10; f_y = 2y + x + 1 = 0 there
  CurvePoint T(-1, 0);
  REQUIRE(on_curve(F, T));
  LocalChart c = branch_expand(F, T, 16);
  CHECK(c.kind == ChartKind::YShift);
  CHECK(chart_residual(F, c).is_zero());
}

TEST_CASE("ord and ramification examples") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CurveFunction beta = CurveFunction::parse("(1-y)/2", E);
  CHECK(ord_at(beta, CurvePoint(0, 1)) == 3);
  CHECK(ord_at(CurveFunction::constant(E, 1), CurvePoint(2, 3)) == 0);
  CHECK(ram_index(beta, CurvePoint(2, 3)) == 1);
  EllipticCurve F = curve(0, 0, 0, -1, 0);
  CHECK(ord_at(CurveFunction::x(F), CurvePoint::infinity()) == -2);
  CurveFunction sq = CurveFunction::parse("x^2", F);
  CHECK(ram_index(sq, CurvePoint(0, 0)) == 4);
  CHECK(ram_index(sq, CurvePoint::infinity()) == 4);
  EllipticCurve G = curve(0, 1, 0, 16, 180);
  CurveFunction b5 = CurveFunction::parse("(4*y + x^2 + 56)/108", G);
  CHECK(ram_index(b5, CurvePoint(22, -108)) == 1);
  CHECK(ram_index(b5, CurvePoint(-2, 12)) == 3);
}

TEST_CASE("precision retry resolves deep cancellation") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  // (1 - y)^9 vanishes to order 27 at (0, 1), beyond the default window
  CurveFunction f = CurveFunction::parse("(1-y)^9", E);
  CHECK(ord_at(f, CurvePoint(0, 1)) == 27);
}
