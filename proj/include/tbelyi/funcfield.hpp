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

#ifndef TBELYI_FUNCFIELD_HPP
#define TBELYI_FUNCFIELD_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbelyi/curve.hpp"
#include "tbelyi/factor.hpp"
#include "tbelyi/localseries.hpp"

namespace tbelyi {

inline constexpr int kDefaultPrecision = 16;
inline constexpr int kMaxPrecision = 256;

/// A rational function (u(x) + v(x) y) / w(x) on an elliptic curve.
///
/// Canonical form: gcd(u, v, w) = 1, w monic, then everything scaled by the
/// positive rational that makes the rational parts of all coefficients
/// coprime integers. Two functions are equal iff their canonical forms are.
class CurveFunction {
 public:
  CurveFunction(EllipticCurve curve, FieldPolynomial u, FieldPolynomial v, FieldPolynomial w);

  static CurveFunction constant(const EllipticCurve& E, const FieldElement& c);
  static CurveFunction x(const EllipticCurve& E);
  static CurveFunction y(const EllipticCurve& E);
  /// Arithmetic over x, y, integer literals, sqrt(INT), + - * / ^.
  static CurveFunction parse(std::string_view text, const EllipticCurve& E);

  const EllipticCurve& curve() const { return curve_; }
  const FieldPolynomial& u() const { return u_; }
  const FieldPolynomial& v() const { return v_; }
  const FieldPolynomial& w() const { return w_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_constant() const;
  std::optional<FieldElement> constant_value() const;
  /// All coefficients rational.
  bool is_rational() const;

  /// (u + v y)(u + v ybar) with ybar = -y - a1 x - a3; a polynomial in x.
  FieldPolynomial norm() const;

  CurveFunction operator-() const;
  friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g);
  CurveFunction inverse() const;
  CurveFunction pow(int exponent) const;

  /// Text in the parse grammar; parse(to_string()) reproduces the function.
  std::string to_string() const;

  bool operator==(const CurveFunction& other) const {
    return curve_ == other.curve_ && u_ == other.u_ && v_ == other.v_ && w_ == other.w_;
  }

 private:
  void canonicalize();

  EllipticCurve curve_;
  FieldPolynomial u_, v_, w_;
};

/// A value in Q-bar or infinity.
struct ExtendedValue {
  bool infinite = false;
  FieldElement value;

  static ExtendedValue infinity() { return {true, FieldElement()}; }
  static ExtendedValue finite(const FieldElement& v) { return {false, v}; }
  bool operator==(const ExtendedValue& other) const {
    return infinite == other.infinite && value == other.value;
  }
  std::string to_string() const { return infinite ? "oo" : value.to_string(); }
};

/// f composed with a chart.
PowerSeries expand(const CurveFunction& f, const LocalChart& chart);

/// ord_P(f) from a chart. Throws PrecisionExhausted when f vanishes to the
/// chart's precision.
int ord_at(const CurveFunction& f, const LocalChart& chart);
/// ord_P(f), doubling the precision up to kMaxPrecision as needed.
int ord_at(const CurveFunction& f, const CurvePoint& P, int precision = kDefaultPrecision);

/// e_f(P): ord_P(f - f(P)) at finite values, -ord_P(f) at poles.
int ram_index(const CurveFunction& f, const CurvePoint& P, int precision = kDefaultPrecision);

ExtendedValue cf_eval(const CurveFunction& f, const CurvePoint& P, int precision = kDefaultPrecision);

/// k with f = k g, if one exists.
std::optional<FieldElement> equal_up_to_constant(const CurveFunction& f, const CurveFunction& g);

/// Runs body(precision) for precision = start, 2 start, ... up to kMaxPrecision
/// while it throws PrecisionExhausted.
int with_precision_retry(int start, const std::function<int(int)>& body);

// Zero sets ---------------------------------------------------------------

struct LocalZero {
  CurvePoint point;
  int order = 0;
};

/// Zeros lying over the roots of an irreducible factor of degree >= 3 (or
/// over a quadratic x whose y-coordinates need a degree-4 field).
struct UnresolvedFactor {
  RationalPolynomial factor;  // monic, in x
  int multiplicity = 0;       // order of the factor in the norm of f
  int points_per_root = 1;

  int order_sum() const { return multiplicity * factor.degree(); }
  int point_count() const { return points_per_root * factor.degree(); }
};

struct ZeroSet {
  std::vector<LocalZero> points;  // sorted by point
  std::vector<UnresolvedFactor> unresolved;

  int order_sum() const;
  int point_count() const;
};

/// Zeros of f with their orders. Needs rational coefficients.
ZeroSet zeros_of(const CurveFunction& f, int precision = kDefaultPrecision);

/// Number of zeros with multiplicity; cross-checked against the pole count.
int cf_degree(const CurveFunction& f, int precision = kDefaultPrecision);

}  // namespace tbelyi

#endif
