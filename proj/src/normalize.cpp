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

#include "tbelyi/normalize.hpp"

namespace tbelyi {

namespace {

std::array<ZeroSet, 3> resolved_fibers(const BelyiPair& pair, int precision) {
  auto f = fibers(pair, precision);
  for (Fiber fb : kFibers) {
    const ZeroSet& z = f[static_cast<std::size_t>(fb)];
    if (!z.unresolved.empty())
      throw UnresolvedFiberError(std::string("fiber ") + fiber_name(fb) + " of " + pair.label +
                                     " has points of degree > 2",
                                 z.unresolved);
  }
  return f;
}

QuasiSum sums_of(const BelyiPair& pair, const std::array<ZeroSet, 3>& f) {
  QuasiSum q;
  q.degree = f[0].order_sum();
  for (std::size_t k = 0; k < 3; ++k) {
    CurvePoint s;
    for (const auto& p : f[k].points) s = point_add(pair.curve, s, scalar_mul(pair.curve, p.order, p.point));
    q.fiber_sums[k] = s;
    if (f[k].order_sum() != q.degree)
      throw Error(ErrorCode::FiberSumMismatch, "fiber degrees differ for " + pair.label);
  }
  if (!(q.fiber_sums[0] == q.fiber_sums[1]) || !(q.fiber_sums[0] == q.fiber_sums[2]))
    throw Error(ErrorCode::FiberSumMismatch, "fiber point sums differ for " + pair.label + ": " +
                                                 q.fiber_sums[0].to_string() + ", " + q.fiber_sums[1].to_string() +
                                                 ", " + q.fiber_sums[2].to_string());
  q.common = q.fiber_sums[0];
  return q;
}

}  // namespace

QuasiSum quasi_sum(const BelyiPair& pair, int precision) { return sums_of(pair, resolved_fibers(pair, precision)); }

std::optional<CurvePoint> find_translate(const EllipticCurve& E, int N, const CurvePoint& Q0,
                                         const std::vector<CurvePoint>& candidates) {
  if (Q0.is_infinity()) return CurvePoint::infinity();
  for (const auto& P : candidates) {
    if (scalar_mul(E, N, P) == Q0) return P;
  }
  return std::nullopt;
}

CurveFunction translate_map(const CurveFunction& beta, const CurvePoint& P0) {
  const EllipticCurve& E = beta.curve();
  if (!on_curve(E, P0)) throw Error(ErrorCode::NotOnCurve, P0.to_string());
  if (P0.is_infinity()) return beta;
  auto c = [&](const FieldElement& a) { return CurveFunction::constant(E, a); };
  CurveFunction x = CurveFunction::x(E), y = CurveFunction::y(E);
  CurveFunction lambda = (y - c(P0.y())) / (x - c(P0.x()));
  CurveFunction nu = y - lambda * x;
  CurveFunction X3 = lambda * lambda + c(E.a1()) * lambda - c(E.a2()) - x - c(P0.x());
  CurveFunction Y3 = -(lambda + c(E.a1())) * X3 - nu - c(E.a3());
  auto lift = [&](const FieldElement& a) { return c(a); };
  return (beta.u().eval_in(X3, lift) + beta.v().eval_in(X3, lift) * Y3) / beta.w().eval_in(X3, lift);
}

std::array<PrincipalCheck, 3> verify_divisor_shapes(const BelyiPair& pair, const CurvePoint& P0, int precision) {
  auto f = resolved_fibers(pair, precision);
  std::array<PrincipalCheck, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    Divisor D(pair.curve);
    for (const auto& p : f[k].points) D.add(point_sub(pair.curve, p.point, P0), p.order);
    D.add(CurvePoint::infinity(), -f[k].order_sum());
    out[k] = principal_check(D);
  }
  return out;
}

NormalizationCertificate normalize(const BelyiPair& pair, const AnalysisOptions& options) {
  NormalizationCertificate cert;
  cert.label = pair.label;
  auto f = resolved_fibers(pair, options.precision);
  cert.sums = sums_of(pair, f);
  if (options.checkpoint) options.checkpoint();
  std::vector<CurvePoint> generators;
  for (const auto& z : f)
    for (const auto& p : z.points) generators.push_back(p.point);
  std::vector<CurvePoint> candidates = generators;
  if (auto closure = subgroup_closure(pair.curve, generators, options.closure_bound)) candidates = *closure;
  cert.translate = find_translate(pair.curve, cert.sums.degree, cert.sums.common, candidates);
  if (!cert.translate) {
    cert.note = "no P0 with [" + std::to_string(cert.sums.degree) + "]P0 = " + cert.sums.common.to_string() +
                " among " + std::to_string(candidates.size()) + " candidates";
    return cert;
  }
  if (options.checkpoint) options.checkpoint();
  cert.normalized_map = translate_map(pair.map, *cert.translate);
  auto checks = verify_divisor_shapes(pair, *cert.translate, options.precision);
  for (std::size_t k = 0; k < 3; ++k) cert.principal[k] = checks[k].principal;
  return cert;
}

}  // namespace tbelyi
