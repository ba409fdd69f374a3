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

#ifndef TBELYI_POLY_HPP
#define TBELYI_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tbelyi/error.hpp"
#include "tbelyi/numfield.hpp"

namespace tbelyi {

// Dense univariate polynomial over a field T, coefficients in ascending degree.
template <class T>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const T& c) {  // NOLINT(google-explicit-constructor)
    if (!tbelyi::is_zero(c)) coeffs_.push_back(c);
  }
  UPoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<T>{T(0), T(1)}); }
  static UPoly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (tbelyi::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += T(a.coeffs_[i] * b.coeffs_[j]);
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& rhs) { return *this = *this * rhs; }
  UPoly scaled(const T& c) const {
    if (tbelyi::is_zero(c)) return UPoly();
    UPoly r = *this;
    for (auto& k : r.coeffs_) k = T(k * c);
    return r;
  }
  bool operator==(const UPoly& other) const { return coeffs_ == other.coeffs_; }

  UPoly pow(unsigned e) const {
    UPoly result(T(1)), base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Quotient and remainder; throws on division by the zero polynomial.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<T> rem = coeffs_;
    std::vector<T> quo(coeffs_.size() - d.coeffs_.size() + 1, T(0));
    T inv_lead = T(T(1) / d.leading());
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      const T& top = rem[k + d.coeffs_.size() - 1];
      if (tbelyi::is_zero(top)) continue;
      T q = T(top * inv_lead);
      quo[k] = q;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= T(q * d.coeffs_[j]);
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  bool divides(const UPoly& other) const { return (other % *this).is_zero(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(T(T(1) / leading()));
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<T> out(coeffs_.size() - 1, T(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = T(coeffs_[i] * T(static_cast<long>(i)));
    return UPoly(std::move(out));
  }

  T eval(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = T(acc * at + *it);
    return acc;
  }

  /// Horner evaluation into another algebra R (series, curve functions, ...).
  template <class R, class Lift>
  R eval_in(const R& at, Lift lift) const {
    R acc = lift(T(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + lift(*it);
    return acc;
  }

  /// Text in the map grammar, e.g. "3*x^2 - x + 1/2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && tbelyi::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    UPoly<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <class T>
std::string UPoly<T>::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const T& c = coeffs_[k];
    if (tbelyi::is_zero(c)) continue;
    std::string cs = tbelyi::to_string(c);
    bool simple = cs.find_first_of(" ") == std::string::npos;
    bool negative = simple && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    std::string mono;
    if (k == 0) {
      mono = cs;
    } else {
      mono = (cs == "1") ? "" : cs + "*";
      mono += var;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (first) {
      out = (negative ? "-" : "") + mono;
    } else {
      out += (negative ? " - " : " + ") + mono;
    }
    first = false;
  }
  return out;
}

using RationalPolynomial = UPoly<Rational>;
using FieldPolynomial = UPoly<FieldElement>;

inline FieldPolynomial to_field(const RationalPolynomial& p) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return FieldPolynomial(std::move(c));
}

/// Rational image of p; nullopt when some coefficient is irrational.
inline std::optional<RationalPolynomial> to_rational(const FieldPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& e : p.coeffs()) {
    if (!e.is_rational()) return std::nullopt;
    c.push_back(e.rational_part());
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace tbelyi

#endif
