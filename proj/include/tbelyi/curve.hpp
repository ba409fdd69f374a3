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

#ifndef TBELYI_CURVE_HPP
#define TBELYI_CURVE_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tbelyi/numfield.hpp"
#include "tbelyi/poly.hpp"

namespace tbelyi {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
class EllipticCurve {
 public:
  EllipticCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6,
                std::string label = "");
  /// Short form y^2 = x^3 + a x + b.
  static EllipticCurve short_form(const FieldElement& a, const FieldElement& b, std::string label = "");

  const FieldElement& a1() const { return a_[0]; }
  const FieldElement& a2() const { return a_[1]; }
  const FieldElement& a3() const { return a_[2]; }
  const FieldElement& a4() const { return a_[3]; }
  const FieldElement& a6() const { return a_[4]; }
  const std::string& label() const { return label_; }

  FieldElement b2() const;
  FieldElement b4() const;
  FieldElement b6() const;
  FieldElement b8() const;
  FieldElement discriminant() const;
  bool is_short() const;
  bool is_rational() const;

  /// x^3 + a2 x^2 + a4 x + a6.
  FieldPolynomial rhs() const;
  /// a1 x + a3, the y-linear coefficient.
  FieldPolynomial linear() const;

  /// f(x, y) = y^2 + a1 xy + a3 y - rhs(x); zero on the curve.
  FieldElement equation(const FieldElement& x, const FieldElement& y) const;
  FieldElement partial_x(const FieldElement& x, const FieldElement& y) const;
  FieldElement partial_y(const FieldElement& x, const FieldElement& y) const;

  /// Same coefficients (labels ignored).
  bool operator==(const EllipticCurve& other) const { return a_ == other.a_; }
  std::string to_string() const;

 private:
  std::array<FieldElement, 5> a_;
  std::string label_;
};

/// An affine point or the point at infinity O.
class CurvePoint {
 public:
  CurvePoint() = default;  // O
  CurvePoint(FieldElement x, FieldElement y) : infinite_(false), x_(std::move(x)), y_(std::move(y)) {}
  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinite_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  std::vector<Integer> radicands() const;

  /// "O" or "(x, y)".
  std::string to_string() const;

  bool operator==(const CurvePoint& other) const {
    return infinite_ == other.infinite_ && x_ == other.x_ && y_ == other.y_;
  }
  /// Total order: O first, then by x, then by y.
  std::strong_ordering operator<=>(const CurvePoint& other) const;

 private:
  bool infinite_ = true;
  FieldElement x_, y_;
};

bool on_curve(const EllipticCurve& E, const CurvePoint& P);
CurvePoint negate(const EllipticCurve& E, const CurvePoint& P);
CurvePoint point_add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint point_sub(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint scalar_mul(const EllipticCurve& E, const Integer& n, const CurvePoint& P);
/// Least n <= bound with [n]P = O.
std::optional<int> point_order(const EllipticCurve& E, const CurvePoint& P, int bound);

}  // namespace tbelyi

#endif
