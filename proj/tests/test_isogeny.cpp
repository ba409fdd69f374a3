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

#include "tbelyi/isogeny.hpp"

using namespace tbelyi;

namespace {

CurvePoint pt(long x, long y) { return CurvePoint(FieldElement(x), FieldElement(y)); }

// Independent oracle: [m] on the generic point through the chord-tangent law
// in the function field.
std::pair<CurveFunction, CurveFunction> chord_multiple(const EllipticCurve& E, int m) {
  auto c = [&](long a) { return CurveFunction::constant(E, FieldElement(a)); };
  auto k = [&](const FieldElement& a) { return CurveFunction::constant(E, a); };
  CurveFunction x = CurveFunction::x(E), y = CurveFunction::y(E);
  CurveFunction X = x, Y = y;
  for (int i = 2; i <= m; ++i) {
    CurveFunction lambda = (i == 2) ? (c(3) * x * x + c(2) * k(E.a2()) * x + k(E.a4()) - k(E.a1()) * y) /
                                          (c(2) * y + k(E.a1()) * x + k(E.a3()))
                                    : (Y - y) / (X - x);
    CurveFunction nu = y - lambda * x;
    CurveFunction X3 = lambda * lambda + k(E.a1()) * lambda - k(E.a2()) - x - X;
    Y = -(lambda + k(E.a1())) * X3 - nu - k(E.a3());
    X = X3;
  }
  return {X, Y};
}

}  // namespace

TEST_CASE("division polynomials vanish on torsion") {
  EllipticCurve E(0, 0, 0, 0, 1);
  // (0, +-1) has order 3, (2, 3) has order 6
  CurveFunction psi3 = division_polynomial(E, 3);
  CHECK(cf_eval(psi3, pt(0, 1)) == ExtendedValue::finite(0));
  CHECK(cf_eval(division_polynomial(E, 6), pt(2, 3)) == ExtendedValue::finite(0));
  CHECK(cf_eval(division_polynomial(E, 5), pt(2, 3)) != ExtendedValue::finite(0));
  CHECK(cf_degree(psi3) == 8);  // m^2 - 1 zeros
  CHECK_THROWS_AS(division_polynomial(EllipticCurve(1, 0, 0, 0, 1), 3), Error);
}

TEST_CASE("multiplication maps agree with the chord construction and with scalar_mul") {
  std::vector<std::pair<EllipticCurve, std::vector<CurvePoint>>> samples = {
      {EllipticCurve(0, 0, 0, 0, 1), {pt(2, 3), pt(0, 1), pt(-1, 0)}},
      {EllipticCurve(0, 0, 0, -2, 5), {pt(1, 2), pt(2, 3), pt(-2, 1)}},
      {EllipticCurve(0, 1, 0, 16, 180), {pt(22, -108), pt(-2, 12), pt(4, -18)}},
  };
  for (const auto& [E, pts] : samples) {
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(m);
      IsogenyMap mm = mul_by_m(E, m);
      auto [X, Y] = chord_multiple(E, m);
      CHECK(mm.xi == X);
      CHECK(mm.omega == Y);
      for (const auto& P : pts) CHECK(isogeny_apply(mm, P) == scalar_mul(E, m, P));
      CHECK(mm.degree() == m * m);
    }
  }
}

TEST_CASE("isogeny verification") {
  EllipticCurve E(0, 0, 0, 0, 1);
  IsogenyMap two = mul_by_m(E, 2);
  IsogenyCheck ok = isogeny_verify(two, {pt(2, 3), pt(0, 1), pt(-1, 0), CurvePoint::infinity()});
  CHECK(ok.ok());
  CHECK(ok.pairs_checked == 10);
  // x |-> x, y |-> -y is an automorphism; x |-> x + 1 is not a map to the same curve
  IsogenyMap neg = IsogenyMap::parse(E, E, "x", "-y");
  CHECK(isogeny_verify(neg, {pt(2, 3), pt(0, 1)}).ok());
  IsogenyMap bad = IsogenyMap::parse(E, E, "x+1", "y");
  IsogenyCheck b = isogeny_verify(bad, {pt(2, 3)});
  CHECK_FALSE(b.lands_on_target);
  CHECK_FALSE(b.diagnostic.empty());
  CHECK_THROWS_AS(IsogenyMap::parse(E, E, "3", "y"), Error);
}

TEST_CASE("a 2-isogeny onto y^2 = x^3 + 1") {
  EllipticCurve S(0, 0, 0, -15, 22), T(0, 0, 0, 0, 1);
  IsogenyMap psi = IsogenyMap::parse(S, T, "(x^2-2*x-3)/(4*(x-2))", "(x^2-4*x+7)*y/(8*(x-2)^2)");
  CHECK(psi.degree() == 2);
  CHECK(isogeny_verify(psi, {pt(3, 2), pt(-1, 6), pt(2, 0), pt(3, -2)}).ok());
  BelyiPair phi("t", T, "(1-y)/2");
  CurveFunction beta = compose_map(phi.map, psi);
  CHECK(beta == CurveFunction::parse("(8*(x-2)^2 - (x^2-4*x+7)*y)/(16*(x-2)^2)", S));
  MainTheoremReport r = verify_main_theorem(phi, psi, "c");
  CHECK(r.ok());
  CHECK(r.expected_degree == 6);
  CHECK(r.belyi == Tri::True);
  REQUIRE(r.report.group);
  CHECK(r.report.group->to_string() == "Z6");
  CHECK_THROWS_AS(compose_map(CurveFunction::x(S), psi), Error);
}

TEST_CASE("family of multiplication maps") {
  auto fam = generate_family(2);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].ok());
  CHECK(fam[0].expected_degree == 3);
  const MainTheoremReport& r = fam[1];
  CHECK(r.ok());
  CHECK(r.expected_degree == 12);
  CHECK(r.report.unresolved.empty());
  REQUIRE(r.report.group);
  CHECK(r.report.group->to_string() == "Z2 x Z6");
  CHECK(r.report.closure->size() == 12);
  CHECK(r.belyi == Tri::True);
}
