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

#include "tbelyi/divisor.hpp"

namespace tbelyi {

long Divisor::coefficient(const CurvePoint& P) const {
  auto it = terms_.find(P);
  return it == terms_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [P, n] : terms_) d += n;
  return d;
}

void Divisor::add(const CurvePoint& P, long n) {
  if (n == 0) return;
  if (!on_curve(curve_, P)) throw Error(ErrorCode::NotOnCurve, P.to_string() + " is not on the divisor's curve");
  long& slot = terms_[P];
  slot += n;
  if (slot == 0) terms_.erase(P);
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [P, n] : terms_) {
    long a = n < 0 ? -n : n;
    std::string term = (a == 1 ? "" : std::to_string(a) + "*") + P.to_string();
    if (out.empty()) {
      out = (n < 0 ? "-" : "") + term;
    } else {
      out += (n < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

Divisor div_combine(long a, const Divisor& D1, long b, const Divisor& D2) {
  if (!(D1.curve() == D2.curve())) throw Error(ErrorCode::CurveMismatch, "divisors on different curves");
  Divisor out(D1.curve());
  for (const auto& [P, n] : D1.terms()) out.add(P, a * n);
  for (const auto& [P, n] : D2.terms()) out.add(P, b * n);
  return out;
}

namespace {

void require_resolved(const ZeroSet& z, const std::string& what) {
  if (z.unresolved.empty()) return;
  std::string msg = what + " has points over fields of degree > 2:";
  for (const auto& u : z.unresolved) msg += " [" + u.factor.to_string("x") + "]";
  throw UnresolvedFiberError(msg, z.unresolved);
}

}  // namespace

Divisor div_of_function(const CurveFunction& f, int precision) {
  Divisor D(f.curve());
  if (f.is_constant()) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "divisor of the zero function");
    return D;
  }
  ZeroSet zeros = zeros_of(f, precision);
  ZeroSet poles = zeros_of(f.inverse(), precision);
  require_resolved(zeros, "zero set of " + f.to_string());
  require_resolved(poles, "pole set of " + f.to_string());
  for (const auto& z : zeros.points) D.add(z.point, z.order);
  for (const auto& p : poles.points) D.add(p.point, -p.order);
  return D;
}

PrincipalCheck principal_check(const Divisor& D) {
  PrincipalCheck out;
  out.degree = D.degree();
  for (const auto& [P, n] : D.terms()) out.sum = point_add(D.curve(), out.sum, scalar_mul(D.curve(), n, P));
  out.principal = out.degree == 0 && out.sum.is_infinity();
  return out;
}

ZeroSet fiber_over(const CurveFunction& phi, const ExtendedValue& q, int precision) {
  if (q.infinite) return zeros_of(phi.inverse(), precision);
  return zeros_of(phi - CurveFunction::constant(phi.curve(), q.value), precision);
}

Divisor pullback(const CurveFunction& phi, const ValueDivisor& D, int precision) {
  if (phi.is_constant()) throw Error(ErrorCode::ConstantFunction, "pullback along a constant map");
  Divisor out(phi.curve());
  for (const auto& [q, n] : D) {
    if (n == 0) continue;
    ZeroSet fiber = fiber_over(phi, q, precision);
    require_resolved(fiber, "fiber over " + q.to_string());
    for (const auto& z : fiber.points) out.add(z.point, n * z.order);
  }
  return out;
}

}  // namespace tbelyi
