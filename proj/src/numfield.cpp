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

#include "tbelyi/numfield.hpp"

#include <algorithm>
#include <map>

#include "tbelyi/expr.hpp"

namespace tbelyi {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::UnresolvedFiber: return "UnresolvedFiber";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnsupportedForm: return "UnsupportedForm";
    case ErrorCode::FiberSumMismatch: return "FiberSumMismatch";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d))
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  return make_rational(Integer(strip_plus(n)), Integer(strip_plus(d)));
}

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
  Integer m = abs(n);
  Integer square = 1, free = 1;
  auto strip = [&](unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2 == 1) free *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= 100000 && Integer(p) * p <= m; p += 2) strip(p);
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      square *= r;
    } else {
      free *= m;
    }
  }
  if (sgn(n) < 0) free = -free;
  return {square, free};
}

bool radicand_less(const Integer& lhs, const Integer& rhs) {
  int c = mpz_cmpabs(lhs.get_mpz_t(), rhs.get_mpz_t());
  if (c != 0) return c < 0;
  return sgn(lhs) > sgn(rhs);
}

RadicalProduct multiply_radicals(const Integer& s, const Integer& t) {
  Integer as = abs(s), at = abs(t);
  Integer g = gcd(as, at);
  Integer r = (as / g) * (at / g);
  bool neg_s = sgn(s) < 0, neg_t = sgn(t) < 0;
  if (neg_s && neg_t) return {Rational(-g), r};
  if (neg_s || neg_t) return {Rational(g), -r};
  return {Rational(g), r};
}

namespace {

// Enumerates the radicand group generated by basis, tagging each element with its bitmask.
std::vector<std::pair<Integer, unsigned>> enumerate_group(const std::vector<Integer>& basis) {
  std::vector<std::pair<Integer, unsigned>> group{{Integer(1), 0u}};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::size_t n = group.size();
    for (std::size_t i = 0; i < n; ++i) {
      group.emplace_back(multiply_radicals(group[i].first, basis[j]).radicand,
                         group[i].second | (1u << j));
    }
  }
  return group;
}

}  // namespace

std::vector<Integer> radicand_basis(const std::vector<Integer>& radicands) {
  std::vector<Integer> basis;
  std::vector<std::pair<Integer, unsigned>> group{{Integer(1), 0u}};
  for (const auto& s : radicands) {
    bool present = std::any_of(group.begin(), group.end(), [&](const auto& g) { return g.first == s; });
    if (present) continue;
    if (basis.size() >= 16) throw Error(ErrorCode::FieldMismatch, "too many independent radicands");
    basis.push_back(s);
    group = enumerate_group(basis);
  }
  return basis;
}

bool radicand_in_span(const Integer& s, const std::vector<Integer>& basis) {
  auto group = enumerate_group(basis);
  return std::any_of(group.begin(), group.end(), [&](const auto& g) { return g.first == s; });
}

FieldElement::FieldElement(long value) {
  if (value != 0) terms_.push_back({Integer(1), Rational(value)});
}

FieldElement::FieldElement(const Rational& value) {
  if (!tbelyi::is_zero(value)) terms_.push_back({Integer(1), value});
}

FieldElement FieldElement::radical(const Integer& d) {
  if (sgn(d) == 0) return FieldElement();
  auto [square, free] = squarefree_split(d);
  FieldElement r;
  r.add_term(free, Rational(square));
  return r;
}

FieldElement FieldElement::quadratic(const Rational& a, const Rational& b, const Integer& d) {
  FieldElement r(a);
  if (!tbelyi::is_zero(b)) {
    if (sgn(d) == 0) throw Error(ErrorCode::InvalidArgument, "quadratic field with d = 0");
    r += FieldElement(b) * radical(d);
  }
  return r;
}

void FieldElement::add_term(const Integer& radicand, const Rational& coeff) {
  if (tbelyi::is_zero(coeff)) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, const Integer& r) { return radicand_less(t.radicand, r); });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coeff += coeff;
    if (tbelyi::is_zero(it->coeff)) terms_.erase(it);
  } else {
    terms_.insert(it, Term{radicand, coeff});
  }
}

bool FieldElement::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }

bool FieldElement::is_one() const {
  return terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].coeff == 1;
}

Rational FieldElement::rational_part() const { return coefficient(Integer(1)); }

Rational FieldElement::coefficient(const Integer& radicand) const {
  for (const auto& t : terms_)
    if (t.radicand == radicand) return t.coeff;
  return Rational(0);
}

std::vector<Integer> FieldElement::radicands() const {
  std::vector<Integer> out;
  for (const auto& t : terms_)
    if (t.radicand != 1) out.push_back(t.radicand);
  return out;
}

std::optional<Integer> FieldElement::quadratic_radicand() const {
  auto rs = radicands();
  if (rs.empty()) return Integer(1);
  if (rs.size() == 1) return rs[0];
  return std::nullopt;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  for (const auto& t : rhs.terms_) add_term(t.radicand, t.coeff);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  for (const auto& t : rhs.terms_) add_term(t.radicand, -t.coeff);
  return *this;
}

FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return FieldElement();
  if (lhs.is_rational()) {
    FieldElement r = rhs;
    for (auto& t : r.terms_) t.coeff *= lhs.terms_[0].coeff;
    return r;
  }
  if (rhs.is_rational()) {
    FieldElement r = lhs;
    for (auto& t : r.terms_) t.coeff *= rhs.terms_[0].coeff;
    return r;
  }
  FieldElement r;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      RadicalProduct p = multiply_radicals(a.radicand, b.radicand);
      r.add_term(p.radicand, Rational(a.coeff * b.coeff * p.factor));
    }
  }
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  *this = *this * rhs;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  *this = *this * rhs.inverse();
  return *this;
}

FieldElement FieldElement::flip(const std::vector<Integer>& basis, std::size_t index) const {
  auto group = enumerate_group(basis);
  FieldElement r;
  for (const auto& t : terms_) {
    auto it = std::find_if(group.begin(), group.end(), [&](const auto& g) { return g.first == t.radicand; });
    if (it == group.end()) throw Error(ErrorCode::FieldMismatch, "radicand outside the given basis");
    bool odd = (it->second >> index) & 1u;
    r.add_term(t.radicand, odd ? Rational(-t.coeff) : t.coeff);
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return FieldElement(Rational(1 / terms_[0].coeff));
  // Multiply by conjugates one generator at a time until the value is rational.
  std::vector<Integer> basis = radicand_basis(radicands());
  FieldElement acc(1), cur = *this;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    FieldElement c = cur.flip(basis, j);
    acc *= c;
    cur *= c;
  }
  if (!cur.is_rational() || cur.is_zero())
    throw Error(ErrorCode::DivisionByZero, "norm did not reduce to a nonzero rational");
  Rational inv = 1 / cur.terms_[0].coeff;
  return acc * FieldElement(inv);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::conjugate() const {
  if (!quadratic_radicand())
    throw Error(ErrorCode::FieldMismatch, "conjugate of a number outside a single quadratic field");
  FieldElement r = *this;
  for (auto& t : r.terms_)
    if (t.radicand != 1) t.coeff = -t.coeff;
  return r;
}

namespace {

FieldElement normalize_sign(FieldElement r) {
  if (!r.is_zero() && sgn(r.terms().front().coeff) < 0) r = -r;
  return r;
}

}  // namespace

std::optional<FieldElement> FieldElement::sqrt_extending() const {
  if (is_zero()) return FieldElement();
  if (is_rational()) {
    const Rational& q = terms_[0].coeff;
    // sqrt(n/d) = sqrt(n*d)/d
    Integer nd = q.get_num() * q.get_den();
    auto [square, free] = squarefree_split(nd);
    FieldElement r;
    r.add_term(free, make_rational(square, q.get_den()));
    return r;
  }
  auto d = quadratic_radicand();
  if (!d) return std::nullopt;
  const Rational a = rational_part();
  const Rational b = coefficient(*d);
  // a + b sqrt(d) has a multiquadratic square root iff its norm is a rational square.
  Rational norm = a * a - b * b * Rational(*d);
  if (sgn(norm) < 0) return std::nullopt;
  Integer nn = norm.get_num(), nd = norm.get_den();
  if (!mpz_perfect_square_p(nn.get_mpz_t()) || !mpz_perfect_square_p(nd.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), nn.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), nd.get_mpz_t());
  Rational c = make_rational(rn, rd);
  auto alpha = FieldElement(Rational((a + c) / 2)).sqrt_extending();
  auto beta = FieldElement(Rational((a - c) / 2)).sqrt_extending();
  for (int sign : {1, -1}) {
    FieldElement r = *alpha + FieldElement(sign) * *beta;
    if (r * r == *this) return normalize_sign(r);
  }
  return std::nullopt;
}

std::optional<FieldElement> FieldElement::sqrt(const std::vector<Integer>& field) const {
  auto r = sqrt_extending();
  if (!r) return std::nullopt;
  std::vector<Integer> generators = radicands();
  for (const auto& d : field) generators.push_back(squarefree_split(d).second);
  std::vector<Integer> basis = radicand_basis(generators);
  for (const auto& s : r->radicands())
    if (!radicand_in_span(s, basis)) return std::nullopt;
  return normalize_sign(*r);
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (t.radicand == 1) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + t.radicand.get_str() + ")";
    }
    first = false;
  }
  return out;
}

std::string to_string(const FieldElement& x) { return x.to_string(); }

FieldElement FieldElement::parse(std::string_view text) {
  ExprAlgebra<FieldElement> algebra;
  algebra.constant = [](const FieldElement& c) { return c; };
  return parse_expression(text, algebra);
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[i];
    if (a.radicand != b.radicand)
      return radicand_less(a.radicand, b.radicand) ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.coeff, b.coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

}  // namespace tbelyi
