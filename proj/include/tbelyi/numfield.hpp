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

#ifndef TBELYI_NUMFIELD_HPP
#define TBELYI_NUMFIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbelyi/error.hpp"

namespace tbelyi {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Writes |n| = s^2 * r with r squarefree and returns (s, sign(n) * r).
///
/// Trial division runs up to 10^5; a cofactor that is not a perfect square
/// is taken to be squarefree.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

/// An exact algebraic number in a multiquadratic field: a finite sum
/// c_1 + c_2 sqrt(s_2) + ... with rational c_i and distinct squarefree
/// radicands s_i. sqrt(s) for s < 0 means i*sqrt(|s|).
///
/// A number with radicands {1, d} is the usual a + b*sqrt(d) of Q(sqrt(d)).
/// Mixed radicands appear when the group law combines points from different
/// quadratic fields.
class FieldElement {
 public:
  struct Term {
    Integer radicand;
    Rational coeff;
    bool operator==(const Term& other) const {
      return radicand == other.radicand && coeff == other.coeff;
    }
  };

  FieldElement() = default;
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(d) for any nonzero integer d; d is reduced to its squarefree part.
  static FieldElement quadratic(const Rational& a, const Rational& b, const Integer& d);
  /// sqrt(d) for an integer d.
  static FieldElement radical(const Integer& d);
  static FieldElement parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  Rational rational_part() const;
  /// Coefficient of sqrt(radicand); zero if absent.
  Rational coefficient(const Integer& radicand) const;
  const std::vector<Term>& terms() const { return terms_; }
  /// Non-unit radicands in canonical order.
  std::vector<Integer> radicands() const;
  /// The d of the smallest field Q(sqrt(d)) holding this number; 1 for rationals,
  /// nullopt when more than one non-unit radicand is present.
  std::optional<Integer> quadratic_radicand() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs);
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  /// Nontrivial embedding of Q(sqrt(d)) composed with the identity: a + b*sqrt(d) -> a - b*sqrt(d).
  /// Requires quadratic_radicand() to exist.
  FieldElement conjugate() const;
  /// The automorphism negating every sqrt(s) whose radicand has odd
  /// valuation in the given basis element of the radicand group.
  FieldElement flip(const std::vector<Integer>& basis, std::size_t index) const;

  /// Square root inside the field generated by this number's radicands
  /// together with `field` (e.g. {-5} asks for a root in Q(sqrt(-5))).
  std::optional<FieldElement> sqrt(const std::vector<Integer>& field = {}) const;
  /// Square root allowed to adjoin new radicands (stays multiquadratic).
  std::optional<FieldElement> sqrt_extending() const;

  std::string to_string() const;

  bool operator==(const FieldElement& other) const { return terms_ == other.terms_; }
  std::strong_ordering operator<=>(const FieldElement& other) const;

 private:
  explicit FieldElement(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void add_term(const Integer& radicand, const Rational& coeff);

  std::vector<Term> terms_;  // sorted by radicand_less, no zero coefficients
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
std::string to_string(const FieldElement& x);

/// Canonical order on radicands: 1, -1, 2, -2, 3, -3, ...
bool radicand_less(const Integer& lhs, const Integer& rhs);

/// Product sqrt(s) * sqrt(t) = factor * sqrt(radicand).
struct RadicalProduct {
  Rational factor;
  Integer radicand;
};
RadicalProduct multiply_radicals(const Integer& s, const Integer& t);

/// Independent generators (mod squares) of the radicand group spanned by the input.
std::vector<Integer> radicand_basis(const std::vector<Integer>& radicands);
/// True if s lies in the group generated by basis (mod squares).
bool radicand_in_span(const Integer& s, const std::vector<Integer>& basis);

}  // namespace tbelyi

#endif
