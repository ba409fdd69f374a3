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

#ifndef TBELYI_DIVISOR_HPP
#define TBELYI_DIVISOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tbelyi/funcfield.hpp"

namespace tbelyi {

/// Thrown when a zero or pole set has points outside fields of degree <= 2.
class UnresolvedFiberError : public Error {
 public:
  UnresolvedFiberError(const std::string& what, std::vector<UnresolvedFactor> factors)
      : Error(ErrorCode::UnresolvedFiber, what), factors_(std::move(factors)) {}
  const std::vector<UnresolvedFactor>& factors() const { return factors_; }

 private:
  std::vector<UnresolvedFactor> factors_;
};

/// Finite formal sum of points on one curve; zero coefficients are never stored.
class Divisor {
 public:
  explicit Divisor(EllipticCurve curve) : curve_(std::move(curve)) {}

  const EllipticCurve& curve() const { return curve_; }
  const std::map<CurvePoint, long>& terms() const { return terms_; }
  long coefficient(const CurvePoint& P) const;
  long degree() const;
  bool empty() const { return terms_.empty(); }

  /// Adds n (P); throws NotOnCurve.
  void add(const CurvePoint& P, long n);

  /// "3*(0, 1) - 3*O"; "0" when empty.
  std::string to_string() const;
  bool operator==(const Divisor& other) const { return curve_ == other.curve_ && terms_ == other.terms_; }

 private:
  EllipticCurve curve_;
  std::map<CurvePoint, long> terms_;
};

/// a D1 + b D2.
Divisor div_combine(long a, const Divisor& D1, long b, const Divisor& D2);

/// Zeros minus poles of f, each with its order.
Divisor div_of_function(const CurveFunction& f, int precision = kDefaultPrecision);

struct PrincipalCheck {
  bool principal = false;
  long degree = 0;
  CurvePoint sum;  // the group-law sum of n_P P
};

/// Degree zero and the sum of n_P P is O.
PrincipalCheck principal_check(const Divisor& D);

/// A divisor on the value line: finite values or infinity with coefficients.
using ValueDivisor = std::vector<std::pair<ExtendedValue, long>>;

/// Points of phi^-1(q) with their ramification indices.
ZeroSet fiber_over(const CurveFunction& phi, const ExtendedValue& q, int precision = kDefaultPrecision);

/// sum over q of n_q * sum_{phi(P) = q} e_phi(P) (P).
Divisor pullback(const CurveFunction& phi, const ValueDivisor& D, int precision = kDefaultPrecision);

}  // namespace tbelyi

#endif
