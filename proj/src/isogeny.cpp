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

#include "tbelyi/isogeny.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tbelyi {

IsogenyMap::IsogenyMap(EllipticCurve source_, EllipticCurve target_, CurveFunction xi_, CurveFunction omega_)
    : source(std::move(source_)), target(std::move(target_)), xi(std::move(xi_)), omega(std::move(omega_)) {
  if (!(xi.curve() == source) || !(omega.curve() == source))
    throw Error(ErrorCode::CurveMismatch, "isogeny coordinates must be functions on the source curve");
  if (xi.is_constant()) throw Error(ErrorCode::ConstantFunction, "isogeny with constant x-coordinate");
}

IsogenyMap IsogenyMap::parse(const EllipticCurve& source, const EllipticCurve& target, std::string_view xi,
                             std::string_view omega) {
  return IsogenyMap(source, target, CurveFunction::parse(xi, source), CurveFunction::parse(omega, source));
}

int IsogenyMap::degree(int precision) const {
  int d = cf_degree(xi, precision);
  if (d % 2 != 0) throw Error(ErrorCode::InvalidArgument, "x-coordinate of odd degree " + std::to_string(d));
  return d / 2;
}

CurvePoint isogeny_apply(const IsogenyMap& psi, const CurvePoint& P, int precision) {
  if (P.is_infinity()) return P;
  ExtendedValue X = cf_eval(psi.xi, P, precision);
  if (X.infinite) return CurvePoint::infinity();
  ExtendedValue Y = cf_eval(psi.omega, P, precision);
  if (Y.infinite) throw Error(ErrorCode::NotOnCurve, "omega has a pole where xi is finite at " + P.to_string());
  return CurvePoint(X.value, Y.value);
}

IsogenyCheck isogeny_verify(const IsogenyMap& psi, const std::vector<CurvePoint>& samples, int precision) {
  IsogenyCheck out;
  const EllipticCurve& T = psi.target;
  const CurveFunction &X = psi.xi, &Y = psi.omega;
  auto c = [&](const FieldElement& a) { return CurveFunction::constant(psi.source, a); };
  CurveFunction residual = Y * Y + c(T.a1()) * X * Y + c(T.a3()) * Y -
                           (((X + c(T.a2())) * X + c(T.a4())) * X + c(T.a6()));
  out.lands_on_target = residual.is_zero();
  if (!out.lands_on_target) out.diagnostic = "image does not satisfy the target equation";
  out.fixes_origin = ord_at(X, CurvePoint::infinity(), precision) < 0;
  if (!out.fixes_origin && out.diagnostic.empty()) out.diagnostic = "O is not sent to O";
  // the group law on images only makes sense once they lie on the target
  if (!out.lands_on_target || !out.fixes_origin) return out;
  out.additive = true;
  for (std::size_t i = 0; i < samples.size() && out.additive; ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const CurvePoint &P = samples[i], &Q = samples[j];
      CurvePoint lhs = isogeny_apply(psi, point_add(psi.source, P, Q), precision);
      CurvePoint rhs = point_add(T, isogeny_apply(psi, P, precision), isogeny_apply(psi, Q, precision));
      ++out.pairs_checked;
      if (!(lhs == rhs)) {
        out.additive = false;
        if (out.diagnostic.empty())
          out.diagnostic = "psi(P + Q) != psi(P) + psi(Q) for P = " + P.to_string() + ", Q = " + Q.to_string();
        break;
      }
    }
  }
  return out;
}

namespace {

void require_no_odd_terms(const EllipticCurve& E) {
  if (!E.a1().is_zero() || !E.a3().is_zero())
    throw Error(ErrorCode::UnsupportedForm, "division polynomials here need a1 = a3 = 0: " + E.to_string());
}

}  // namespace

CurveFunction division_polynomial(const EllipticCurve& E, int n) {
  require_no_odd_terms(E);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative division polynomial index");
  auto c = [&](const FieldElement& a) { return CurveFunction::constant(E, a); };
  auto num = [&](long k) { return c(FieldElement(k)); };
  CurveFunction x = CurveFunction::x(E);
  std::map<int, CurveFunction> memo;
  FieldElement b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
  memo.emplace(0, num(0));
  memo.emplace(1, num(1));
  memo.emplace(2, num(2) * CurveFunction::y(E));
  memo.emplace(3, (((num(3) * x + c(b2)) * x + c(FieldElement(3) * b4)) * x + c(FieldElement(3) * b6)) * x + c(b8));
  CurveFunction quartic_part =
      (((((num(2) * x + c(b2)) * x + c(FieldElement(5) * b4)) * x + c(FieldElement(10) * b6)) * x +
        c(FieldElement(10) * b8)) * x + c(b2 * b8 - b4 * b6)) * x + c(b4 * b8 - b6 * b6);
  memo.emplace(4, memo.at(2) * quartic_part);
  std::function<CurveFunction(int)> psi = [&](int k) -> CurveFunction {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    int h = k / 2;
    CurveFunction r = num(0);
    if (k % 2 == 1) {
      r = psi(h + 2) * psi(h).pow(3) - psi(h - 1) * psi(h + 1).pow(3);
    } else {
      r = (psi(h + 2) * psi(h - 1).pow(2) - psi(h - 2) * psi(h + 1).pow(2)) * psi(h) / memo.at(2);
    }
    memo.emplace(k, r);
    return r;
  };
  return psi(n);
}

IsogenyMap mul_by_m(const EllipticCurve& E, int m) {
  require_no_odd_terms(E);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplier must be positive");
  CurveFunction pm = division_polynomial(E, m);
  CurveFunction xi = CurveFunction::x(E) - division_polynomial(E, m - 1) * division_polynomial(E, m + 1) / (pm * pm);
  CurveFunction omega = division_polynomial(E, 2 * m) / (CurveFunction::constant(E, FieldElement(2)) * pm.pow(4));
  return IsogenyMap(E, E, xi, omega);
}

CurveFunction compose_map(const CurveFunction& phi, const IsogenyMap& psi) {
  if (!(phi.curve() == psi.target)) throw Error(ErrorCode::CurveMismatch, "phi is not defined on the isogeny target");
  auto lift = [&](const FieldElement& a) { return CurveFunction::constant(psi.source, a); };
  CurveFunction u = phi.u().eval_in(psi.xi, lift), v = phi.v().eval_in(psi.xi, lift), w = phi.w().eval_in(psi.xi, lift);
  return (u + v * psi.omega) / w;
}

BelyiPair compose_pair(const BelyiPair& phi, const IsogenyMap& psi, const std::string& label) {
  return BelyiPair(label, psi.source, compose_map(phi.map, psi));
}

MainTheoremReport verify_main_theorem(const BelyiPair& phi, const IsogenyMap& psi, const std::string& label,
                                      const AnalysisOptions& options) {
  MainTheoremReport out;
  auto checkpoint = [&] {
    if (options.checkpoint) options.checkpoint();
  };
  BelyiPair beta = compose_pair(phi, psi, label);
  out.pair = beta;
  checkpoint();
  out.report = analyze(beta, options);
  checkpoint();
  out.belyi = is_belyi(beta, options.precision).result;
  if (out.belyi == Tri::False) out.violations.push_back("composition has a critical value outside {0, 1, oo}");

  out.expected_degree = cf_degree(phi.map, options.precision) * psi.degree(options.precision);
  out.degree_ok = true;
  for (int s : out.report.fiber_sums) out.degree_ok = out.degree_ok && s == out.expected_degree;
  if (!out.degree_ok) out.violations.push_back("fiber sums differ from deg phi * deg psi");

  std::vector<FiberPoint> points = out.report.all_points();
  out.torsion_ok = std::all_of(points.begin(), points.end(), [](const FiberPoint& p) { return p.order.has_value(); });
  if (!out.torsion_ok) out.violations.push_back("a resolved quasi-critical point has no torsion order within the bound");
  out.group_ok = out.report.group.has_value();
  if (!out.group_ok) out.violations.push_back("resolved quasi-critical points do not close into a bounded group");

  checkpoint();
  std::map<CurvePoint, int> base;
  for (const auto& z : fibers(phi, options.precision))
    for (const auto& p : z.points) base[p.point] = p.order;
  out.maps_into_base = true;
  out.unramified = true;
  for (const auto& p : points) {
    CurvePoint image = isogeny_apply(psi, p.point, options.precision);
    auto it = base.find(image);
    if (it == base.end()) {
      out.maps_into_base = false;
      out.violations.push_back("psi" + p.point.to_string() + " = " + image.to_string() + " is not quasi-critical for phi");
      continue;
    }
    if (it->second != p.e) {
      out.unramified = false;
      out.violations.push_back("ramification at " + p.point.to_string() + " is " + std::to_string(p.e) + ", expected " +
                               std::to_string(it->second));
    }
  }
  return out;
}

std::vector<MainTheoremReport> generate_family(int max_m, const AnalysisOptions& options) {
  EllipticCurve E(0, 0, 0, 0, 1, "36/a/4");
  BelyiPair phi("3T1-3_3_3-a", E, "(1-y)/2");
  std::vector<MainTheoremReport> out;
  for (int m = 1; m <= max_m; ++m) {
    if (options.checkpoint) options.checkpoint();
    out.push_back(verify_main_theorem(phi, mul_by_m(E, m), phi.label + "[" + std::to_string(m) + "]", options));
  }
  return out;
}

}  // namespace tbelyi
