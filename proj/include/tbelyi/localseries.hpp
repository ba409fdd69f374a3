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

#ifndef TBELYI_LOCALSERIES_HPP
#define TBELYI_LOCALSERIES_HPP

#include <string>
#include <vector>

#include "tbelyi/curve.hpp"
#include "tbelyi/numfield.hpp"
#include "tbelyi/poly.hpp"

namespace tbelyi {

/// Truncated Laurent series sum_{k < precision} c_k t^k.
///
/// Coefficients at exponents >= precision are unknown. A series whose known
/// coefficients all vanish is "zero to precision"; its valuation is unknown.
class PowerSeries {
 public:
  PowerSeries() = default;  // zero with precision 0
  /// Precision of exactly known series (constants, polynomials in t).
  static constexpr int kExact = 1 << 24;

  static PowerSeries zero(int precision);
  static PowerSeries constant(const FieldElement& c, int precision);
  /// The uniformizer t.
  static PowerSeries variable(int precision);
  /// c[i] is the coefficient of t^(valuation + i).
  static PowerSeries from_coefficients(int valuation, std::vector<FieldElement> c, int precision);

  bool is_zero() const { return c_.empty(); }
  /// Lowest exponent with a nonzero coefficient; throws PrecisionExhausted when zero to precision.
  int valuation() const;
  int precision() const { return prec_; }
  /// Known coefficient of t^k (k < precision).
  FieldElement coefficient(int k) const;
  const FieldElement& leading() const;

  PowerSeries truncated(int precision) const;
  /// t -> -t.
  PowerSeries reflected() const;
  PowerSeries scaled(const FieldElement& c) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  PowerSeries inverse() const;

  std::string to_string() const;

 private:
  void normalize();

  int val_ = 0;                  // exponent of c_[0]
  std::vector<FieldElement> c_;  // c_[0] != 0 unless empty
  int prec_ = 0;
};

enum class ChartKind { XShift, YShift, AtInfinity };

/// Local parametrization of E around one point: x = x(t), y = y(t).
struct LocalChart {
  CurvePoint point;
  ChartKind kind = ChartKind::XShift;
  PowerSeries x;
  PowerSeries y;
  /// Relative precision requested when the chart was built.
  int precision = 0;
};

/// t = x - x0 away from the 2-torsion, t = y - y0 at affine 2-torsion
/// points, t = x/y at O (x = t^-2 + ..., y = t^-3 + ...).
LocalChart branch_expand(const EllipticCurve& E, const CurvePoint& P, int precision);

/// f(x(t), y(t)) truncated; zero to the chart's precision for a valid chart.
PowerSeries chart_residual(const EllipticCurve& E, const LocalChart& chart);

/// (u + v y) / w composed with the chart.
PowerSeries expand_quotient(const LocalChart& chart, const FieldPolynomial& u, const FieldPolynomial& v,
                            const FieldPolynomial& w);

/// p(s) by Horner's rule.
PowerSeries evaluate(const FieldPolynomial& p, const PowerSeries& s);

}  // namespace tbelyi

#endif
