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

#include "tbelyi/divisor.hpp"

using namespace tbelyi;

namespace {

CurvePoint pt(long x, long y) { return CurvePoint(FieldElement(x), FieldElement(y)); }

// Line through P and Q (tangent when equal); its divisor is P + Q + R - 3 O with R = -(P + Q).
CurveFunction line(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.x() == Q.x() && (P.y() != Q.y() || negate(E, P) == P)) {
    return CurveFunction::x(E) - CurveFunction::constant(E, P.x());
  }
  FieldElement lambda;
  if (P == Q) {
    FieldElement X = P.x(), Y = P.y();
    lambda = (FieldElement(3) * X * X + FieldElement(2) * E.a2() * X + E.a4() - E.a1() * Y) /
             (FieldElement(2) * Y + E.a1() * X + E.a3());
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  return CurveFunction::y(E) - CurveFunction::constant(E, P.y()) -
         CurveFunction::constant(E, lambda) * (CurveFunction::x(E) - CurveFunction::constant(E, P.x()));
}

}  // namespace

TEST_CASE("divisor arithmetic") {
  EllipticCurve E(0, 0, 0, 0, 1);
  Divisor D(E);
  D.add(pt(0, 1), 2);
  D.add(CurvePoint::infinity(), -2);
  D.add(pt(0, 1), -2);
  CHECK(D.to_string() == "-2*O");
  CHECK(D.degree() == -2);
  CHECK_THROWS_AS(D.add(pt(1, 1), 1), Error);
  Divisor A(E), B(E);
  A.add(pt(2, 3), 1);
  B.add(pt(2, 3), 2);
  B.add(pt(-1, 0), 1);
  Divisor C = div_combine(2, A, -1, B);
  CHECK(C.coefficient(pt(2, 3)) == 0);
  CHECK(C.coefficient(pt(-1, 0)) == -1);
  CHECK(C.to_string() == "-(-1, 0)");
  CHECK_THROWS_AS(div_combine(1, A, 1, Divisor(EllipticCurve(0, 0, 0, -1, 0))), Error);
}

TEST_CASE("divisors of known functions") {
  EllipticCurve E(0, 0, 0, 0, 1);
  Divisor d = div_of_function(CurveFunction::parse("(1-y)/2", E));
  CHECK(d.to_string() == "-3*O + 3*(0, 1)");
  CHECK(principal_check(d).principal);
  EllipticCurve F(0, 0, 0, -1, 0);
  Divisor dx = div_of_function(CurveFunction::x(F));
  CHECK(dx.coefficient(pt(0, 0)) == 2);
  CHECK(dx.coefficient(CurvePoint::infinity()) == -2);
  Divisor dy = div_of_function(CurveFunction::y(F));
  CHECK(dy.coefficient(pt(1, 0)) == 1);
  CHECK(dy.coefficient(pt(-1, 0)) == 1);
  CHECK(dy.coefficient(pt(0, 0)) == 1);
  CHECK(dy.coefficient(CurvePoint::infinity()) == -3);
  CHECK(div_of_function(CurveFunction::constant(F, 7)).empty());
}

TEST_CASE("principality needs degree zero and trivial sum") {
  EllipticCurve E(0, 0, 0, 0, 1);
  Divisor D(E);
  D.add(pt(0, 1), 1);
  D.add(CurvePoint::infinity(), -1);
  PrincipalCheck c = principal_check(D);
  CHECK_FALSE(c.principal);
  CHECK(c.degree == 0);
  CHECK(c.sum == pt(0, 1));
  Divisor T(E);
  T.add(pt(0, 1), 3);
  T.add(CurvePoint::infinity(), -3);
  CHECK(principal_check(T).principal);
  Divisor U(E);
  U.add(pt(2, 3), 1);
  CHECK_FALSE(principal_check(U).principal);
  CHECK(principal_check(U).degree == 1);
}

TEST_CASE("unresolved zero sets refuse to form a divisor") {
  EllipticCurve E(0, 0, 0, 0, 1);
  try {
    div_of_function(CurveFunction::parse("x^3 - 2", E));
    FAIL("expected a throw");
  } catch (const UnresolvedFiberError& e) {
    CHECK(e.code() == ErrorCode::UnresolvedFiber);
    REQUIRE(e.factors().size() == 1);
    CHECK(e.factors()[0].factor.degree() == 3);
  }
}

TEST_CASE("pullback of 0 - oo is the divisor of the map") {
  EllipticCurve E(0, 0, 0, 0, 1);
  CurveFunction beta = CurveFunction::parse("(1-y)/2", E);
  Divisor p = pullback(beta, {{ExtendedValue::finite(0), 1}, {ExtendedValue::infinity(), -1}});
  CHECK(p == div_of_function(beta));
  Divisor q = pullback(beta, {{ExtendedValue::finite(1), 1}});
  CHECK(q.to_string() == "3*(0, -1)");
  CHECK(pullback(beta, {{ExtendedValue::finite(0), 1}, {ExtendedValue::finite(1), 1}, {ExtendedValue::infinity(), 1}})
            .degree() == 9);
  CHECK_THROWS_AS(pullback(CurveFunction::constant(E, 2), {{ExtendedValue::finite(0), 1}}), Error);
}

TEST_CASE("divisors of random line products are principal") {
  struct Sample {
    EllipticCurve E;
    std::vector<CurvePoint> points;
  };
  std::vector<Sample> samples = {
      {EllipticCurve(0, 0, 0, 0, 1), {pt(0, 1), pt(0, -1), pt(2, 3), pt(2, -3), pt(-1, 0)}},
      {EllipticCurve(0, 0, 0, -2, 5), {pt(-2, 1), pt(-2, -1), pt(1, 2), pt(1, -2), pt(2, 3)}},
      {EllipticCurve(1, 1, 1, 22, -9), {pt(9, -37), pt(1, -5)}},
  };
  std::mt19937 rng(7);
  int checked = 0;
  for (const auto& s : samples) {
    for (const auto& P : s.points) REQUIRE(on_curve(s.E, P));
    std::uniform_int_distribution<std::size_t> pick(0, s.points.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
      CurveFunction f = CurveFunction::constant(s.E, 1);
      Divisor expected(s.E);
      for (int k = 0; k < 3; ++k) {
        const CurvePoint &P = s.points[pick(rng)], &Q = s.points[pick(rng)];
        CurveFunction l = line(s.E, P, Q);
        // oracle: the line meets the curve at P, Q and -(P + Q)
        Divisor dl(s.E);
        if (l.v().is_zero()) {
          dl.add(P, 1);
          dl.add(negate(s.E, P), 1);
          dl.add(CurvePoint::infinity(), -2);
        } else {
          dl.add(P, 1);
          dl.add(Q, 1);
          dl.add(negate(s.E, point_add(s.E, P, Q)), 1);
          dl.add(CurvePoint::infinity(), -3);
        }
        bool invert = (rng() & 1) != 0;
        f = invert ? f / l : f * l;
        expected = div_combine(1, expected, invert ? -1 : 1, dl);
      }
      if (f.is_constant()) continue;
      Divisor d = div_of_function(f);
      CHECK(d == expected);
      CHECK(principal_check(d).principal);
      ++checked;
    }
  }
  CHECK(checked >= 30);
}
