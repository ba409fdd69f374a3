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

#include "tbelyi/curve.hpp"

#include <algorithm>

namespace tbelyi {

EllipticCurve::EllipticCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4,
                             FieldElement a6, std::string label)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      label_(std::move(label)) {
  if (discriminant().is_zero())
    throw Error(ErrorCode::SingularCurve, "curve " + to_string() + " has zero discriminant");
}

EllipticCurve EllipticCurve::short_form(const FieldElement& a, const FieldElement& b, std::string label) {
  return EllipticCurve(0, 0, 0, a, b, std::move(label));
}

FieldElement EllipticCurve::b2() const { return a1() * a1() + FieldElement(4) * a2(); }
FieldElement EllipticCurve::b4() const { return FieldElement(2) * a4() + a1() * a3(); }
FieldElement EllipticCurve::b6() const { return a3() * a3() + FieldElement(4) * a6(); }
FieldElement EllipticCurve::b8() const {
  return a1() * a1() * a6() + FieldElement(4) * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() -
         a4() * a4();
}

FieldElement EllipticCurve::discriminant() const {
  FieldElement c2 = b2(), c4 = b4(), c6 = b6(), c8 = b8();
  return -c2 * c2 * c8 - FieldElement(8) * c4 * c4 * c4 - FieldElement(27) * c6 * c6 +
         FieldElement(9) * c2 * c4 * c6;
}

bool EllipticCurve::is_short() const { return a1().is_zero() && a2().is_zero() && a3().is_zero(); }

bool EllipticCurve::is_rational() const {
  return std::all_of(a_.begin(), a_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

FieldPolynomial EllipticCurve::rhs() const { return FieldPolynomial{a6(), a4(), a2(), FieldElement(1)}; }
FieldPolynomial EllipticCurve::linear() const { return FieldPolynomial{a3(), a1()}; }

FieldElement EllipticCurve::equation(const FieldElement& x, const FieldElement& y) const {
  return y * y + a1() * x * y + a3() * y - (((x + a2()) * x + a4()) * x + a6());
}

FieldElement EllipticCurve::partial_x(const FieldElement& x, const FieldElement& y) const {
  return a1() * y - (FieldElement(3) * x * x + FieldElement(2) * a2() * x + a4());
}

FieldElement EllipticCurve::partial_y(const FieldElement& x, const FieldElement& y) const {
  return FieldElement(2) * y + a1() * x + a3();
}

std::string EllipticCurve::to_string() const {
  std::string lhs = "y^2";
  FieldPolynomial lin = linear();
  if (!lin.is_zero()) lhs += " + (" + lin.to_string("x") + ")*y";
  return lhs + " = " + rhs().to_string("x");
}

std::vector<Integer> CurvePoint::radicands() const {
  std::vector<Integer> out = x_.radicands();
  for (const auto& r : y_.radicands()) out.push_back(r);
  return out;
}

std::string CurvePoint::to_string() const {
  if (infinite_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

std::strong_ordering CurvePoint::operator<=>(const CurvePoint& other) const {
  if (infinite_ != other.infinite_) return infinite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (infinite_) return std::strong_ordering::equal;
  if (auto c = x_ <=> other.x_; c != 0) return c;
  return y_ <=> other.y_;
}

bool on_curve(const EllipticCurve& E, const CurvePoint& P) {
  return P.is_infinity() || E.equation(P.x(), P.y()).is_zero();
}

namespace {

void require_on_curve(const EllipticCurve& E, const CurvePoint& P) {
  if (!on_curve(E, P)) throw Error(ErrorCode::NotOnCurve, P.to_string() + " is not on " + E.to_string());
}

CurvePoint add_unchecked(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const FieldElement &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
  FieldElement lambda, nu;
  if (x1 == x2) {
    // vertical line through P and its negative
    if ((y1 + y2 + E.a1() * x2 + E.a3()).is_zero()) return CurvePoint::infinity();
    FieldElement den = FieldElement(2) * y1 + E.a1() * x1 + E.a3();
    lambda = (FieldElement(3) * x1 * x1 + FieldElement(2) * E.a2() * x1 + E.a4() - E.a1() * y1) / den;
    nu = (-x1 * x1 * x1 + E.a4() * x1 + FieldElement(2) * E.a6() - E.a3() * y1) / den;
  } else {
    FieldElement dx = x2 - x1;
    lambda = (y2 - y1) / dx;
    nu = (y1 * x2 - y2 * x1) / dx;
  }
  FieldElement x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  FieldElement y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return CurvePoint(x3, y3);
}

}  // namespace

CurvePoint negate(const EllipticCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (P.is_infinity()) return P;
  return CurvePoint(P.x(), -P.y() - E.a1() * P.x() - E.a3());
}

CurvePoint point_add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  return add_unchecked(E, P, Q);
}

CurvePoint point_sub(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  return point_add(E, P, negate(E, Q));
}

CurvePoint scalar_mul(const EllipticCurve& E, const Integer& n, const CurvePoint& P) {
  require_on_curve(E, P);
  Integer k = abs(n);
  CurvePoint base = sgn(n) < 0 ? negate(E, P) : P;
  CurvePoint acc;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = add_unchecked(E, acc, base);
    k >>= 1;
    if (sgn(k) > 0) base = add_unchecked(E, base, base);
  }
  return acc;
}

std::optional<int> point_order(const EllipticCurve& E, const CurvePoint& P, int bound) {
  require_on_curve(E, P);
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "order bound must be positive");
  CurvePoint acc = P;
  for (int n = 1; n <= bound; ++n) {
    if (acc.is_infinity()) return n;
    acc = add_unchecked(E, acc, P);
  }
  return std::nullopt;
}

}  // namespace tbelyi
