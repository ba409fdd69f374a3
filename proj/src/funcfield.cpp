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

#include "tbelyi/funcfield.hpp"

#include <algorithm>

#include "tbelyi/expr.hpp"

namespace tbelyi {

namespace {

FieldPolynomial scale_poly(const FieldPolynomial& p, const FieldElement& c) { return p.scaled(c); }

void require_same_curve(const CurveFunction& f, const CurveFunction& g) {
  if (!(f.curve() == g.curve()))
    throw Error(ErrorCode::CurveMismatch, "functions live on different curves");
}

bool simple_token(const std::string& s) {
  return s.find_first_of(" *^") == std::string::npos && s.find('-', 1) == std::string::npos;
}

}  // namespace

CurveFunction::CurveFunction(EllipticCurve curve, FieldPolynomial u, FieldPolynomial v, FieldPolynomial w)
    : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {
  canonicalize();
}

void CurveFunction::canonicalize() {
  if (w_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "function with zero denominator");
  if (u_.is_zero() && v_.is_zero()) {
    w_ = FieldPolynomial(FieldElement(1));
    return;
  }
  FieldPolynomial g = gcd(gcd(u_, v_), w_);
  if (g.degree() > 0) {
    u_ = u_ / g;
    v_ = v_ / g;
    w_ = w_ / g;
  }
  FieldElement lead_inv = w_.leading().inverse();
  u_ = scale_poly(u_, lead_inv);
  v_ = scale_poly(v_, lead_inv);
  w_ = scale_poly(w_, lead_inv);

  Integer den_lcm = 1, num_gcd = 0;
  for (const FieldPolynomial* p : {&u_, &v_, &w_})
    for (const auto& c : p->coeffs())
      for (const auto& t : c.terms()) den_lcm = lcm(den_lcm, t.coeff.get_den());
  for (const FieldPolynomial* p : {&u_, &v_, &w_})
    for (const auto& c : p->coeffs())
      for (const auto& t : c.terms()) num_gcd = gcd(num_gcd, t.coeff.get_num() * (den_lcm / t.coeff.get_den()));
  FieldElement s(make_rational(den_lcm, num_gcd));
  if (!s.is_one()) {
    u_ = scale_poly(u_, s);
    v_ = scale_poly(v_, s);
    w_ = scale_poly(w_, s);
  }
}

CurveFunction CurveFunction::constant(const EllipticCurve& E, const FieldElement& c) {
  return CurveFunction(E, FieldPolynomial(c), FieldPolynomial(), FieldPolynomial(FieldElement(1)));
}

CurveFunction CurveFunction::x(const EllipticCurve& E) {
  return CurveFunction(E, FieldPolynomial::x(), FieldPolynomial(), FieldPolynomial(FieldElement(1)));
}

CurveFunction CurveFunction::y(const EllipticCurve& E) {
  return CurveFunction(E, FieldPolynomial(), FieldPolynomial(FieldElement(1)), FieldPolynomial(FieldElement(1)));
}

CurveFunction CurveFunction::parse(std::string_view text, const EllipticCurve& E) {
  ExprAlgebra<CurveFunction> algebra;
  algebra.variable = [&E, text](std::string_view name) {
    if (name == "x") return CurveFunction::x(E);
    if (name == "y") return CurveFunction::y(E);
    throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "' in '" + std::string(text) + "'");
  };
  algebra.constant = [&E](const FieldElement& c) { return CurveFunction::constant(E, c); };
  try {
    return parse_expression(text, algebra);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero)
      throw Error(ErrorCode::ZeroDenominator, "division by zero in '" + std::string(text) + "'");
    throw;
  }
}

bool CurveFunction::is_constant() const { return v_.is_zero() && u_.degree() <= 0 && w_.degree() == 0; }

std::optional<FieldElement> CurveFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return u_.coeff(0) / w_.coeff(0);
}

bool CurveFunction::is_rational() const {
  for (const FieldPolynomial* p : {&u_, &v_, &w_})
    for (const auto& c : p->coeffs())
      if (!c.is_rational()) return false;
  return true;
}

FieldPolynomial CurveFunction::norm() const {
  return u_ * u_ - u_ * v_ * curve_.linear() - v_ * v_ * curve_.rhs();
}

CurveFunction CurveFunction::operator-() const { return CurveFunction(curve_, -u_, -v_, w_); }

CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) {
  require_same_curve(f, g);
  return CurveFunction(f.curve_, f.u_ * g.w_ + g.u_ * f.w_, f.v_ * g.w_ + g.v_ * f.w_, f.w_ * g.w_);
}

CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) { return f + (-g); }

CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
  require_same_curve(f, g);
  const EllipticCurve& E = f.curve_;
  FieldPolynomial vv = f.v_ * g.v_;
  return CurveFunction(E, f.u_ * g.u_ + vv * E.rhs(), f.u_ * g.v_ + g.u_ * f.v_ - vv * E.linear(), f.w_ * g.w_);
}

CurveFunction CurveFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
  return CurveFunction(curve_, w_ * (u_ - v_ * curve_.linear()), -(w_ * v_), norm());
}

CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) {
  require_same_curve(f, g);
  return f * g.inverse();
}

CurveFunction CurveFunction::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CurveFunction result = constant(curve_, 1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string CurveFunction::to_string() const {
  std::string num;
  if (!u_.is_zero()) num = u_.to_string("x");
  if (!v_.is_zero()) {
    bool negative = false;
    std::string vt;
    if (v_.degree() == 0) {
      std::string cs = v_.coeff(0).to_string();
      if (simple_token(cs)) {
        negative = cs[0] == '-';
        if (negative) cs = cs.substr(1);
        vt = cs == "1" ? "y" : cs + "*y";
      } else {
        vt = "(" + cs + ")*y";
      }
    } else {
      vt = "(" + v_.to_string("x") + ")*y";
    }
    if (num.empty()) {
      num = (negative ? "-" : "") + vt;
    } else {
      num += (negative ? " - " : " + ") + vt;
    }
  }
  if (num.empty()) num = "0";
  if (w_.degree() == 0 && w_.coeff(0).is_one()) return num;
  std::string den = w_.to_string("x");
  if (!simple_token(den) || den[0] == '-') den = "(" + den + ")";
  if (!simple_token(num)) num = "(" + num + ")";
  return num + "/" + den;
}

PowerSeries expand(const CurveFunction& f, const LocalChart& chart) {
  return expand_quotient(chart, f.u(), f.v(), f.w());
}

int ord_at(const CurveFunction& f, const LocalChart& chart) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "ord of the zero function");
  PowerSeries s = expand(f, chart);
  return s.valuation();
}

int with_precision_retry(int start, const std::function<int(int)>& body) {
  int precision = std::max(start, 4);
  for (;;) {
    try {
      return body(precision);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || precision >= kMaxPrecision) throw;
    }
    precision = std::min(precision * 2, kMaxPrecision);
  }
}

int ord_at(const CurveFunction& f, const CurvePoint& P, int precision) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "ord of the zero function");
  return with_precision_retry(precision, [&](int p) { return ord_at(f, branch_expand(f.curve(), P, p)); });
}

int ram_index(const CurveFunction& f, const CurvePoint& P, int precision) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantFunction, "ramification of a constant function");
  return with_precision_retry(precision, [&](int p) {
    PowerSeries s = expand(f, branch_expand(f.curve(), P, p));
    int v = s.valuation();
    if (v != 0) return v < 0 ? -v : v;
    PowerSeries shifted = s - PowerSeries::constant(s.leading(), PowerSeries::kExact);
    return shifted.valuation();
  });
}

ExtendedValue cf_eval(const CurveFunction& f, const CurvePoint& P, int precision) {
  if (!on_curve(f.curve(), P)) throw Error(ErrorCode::NotOnCurve, P.to_string() + " is not on the curve");
  if (auto c = f.constant_value()) return ExtendedValue::finite(*c);
  if (!P.is_infinity()) {
    FieldElement den = f.w().eval(P.x());
    if (!den.is_zero()) return ExtendedValue::finite((f.u().eval(P.x()) + f.v().eval(P.x()) * P.y()) / den);
  }
  ExtendedValue out;
  with_precision_retry(precision, [&](int p) {
    PowerSeries s = expand(f, branch_expand(f.curve(), P, p));
    int v = s.valuation();
    if (v > 0) {
      out = ExtendedValue::finite(FieldElement());
    } else if (v < 0) {
      out = ExtendedValue::infinity();
    } else {
      out = ExtendedValue::finite(s.leading());
    }
    return v;
  });
  return out;
}

std::optional<FieldElement> equal_up_to_constant(const CurveFunction& f, const CurveFunction& g) {
  if (f.is_zero() || g.is_zero() || !(f.curve() == g.curve())) return std::nullopt;
  return (f / g).constant_value();
}

// Zero sets ---------------------------------------------------------------

int ZeroSet::order_sum() const {
  int total = 0;
  for (const auto& z : points) total += z.order;
  for (const auto& u : unresolved) total += u.order_sum();
  return total;
}

int ZeroSet::point_count() const {
  int total = static_cast<int>(points.size());
  for (const auto& u : unresolved) total += u.point_count();
  return total;
}

namespace {

int multiplicity_in(const RationalPolynomial& p, RationalPolynomial q) {
  int m = 0;
  while (!q.is_zero() && q.degree() >= p.degree()) {
    auto [quo, rem] = q.divmod(p);
    if (!rem.is_zero()) break;
    q = quo;
    ++m;
  }
  return m;
}

// Points (x0, y) where u + v y vanishes; nullopt when y needs a degree-4 field.
std::optional<std::vector<CurvePoint>> points_over(const CurveFunction& f, const FieldElement& x0) {
  const EllipticCurve& E = f.curve();
  FieldElement v0 = f.v().eval(x0);
  if (!v0.is_zero()) return std::vector<CurvePoint>{CurvePoint(x0, -f.u().eval(x0) / v0)};
  FieldElement L = E.linear().eval(x0), R = E.rhs().eval(x0);
  FieldElement disc = L * L + FieldElement(4) * R;
  FieldElement half(Rational(1, 2));
  if (disc.is_zero()) return std::vector<CurvePoint>{CurvePoint(x0, -L * half)};
  auto s = disc.sqrt_extending();
  if (!s) return std::nullopt;
  return std::vector<CurvePoint>{CurvePoint(x0, (-L + *s) * half), CurvePoint(x0, (-L - *s) * half)};
}

int points_per_root(const CurveFunction& f, const RationalPolynomial& p) {
  auto u = to_rational(f.u()), v = to_rational(f.v());
  bool both = (u->is_zero() || p.divides(*u)) && (v->is_zero() || p.divides(*v));
  if (!both) return 1;
  auto two_division = to_rational(f.curve().linear() * f.curve().linear() +
                                  f.curve().rhs().scaled(FieldElement(4)));
  return p.divides(*two_division) ? 1 : 2;
}

}  // namespace

ZeroSet zeros_of(const CurveFunction& f, int precision) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantFunction, "zeros of a constant function");
  if (!f.is_rational() || !f.curve().is_rational())
    throw Error(ErrorCode::FieldMismatch, "fiber solving needs rational coefficients: " + f.to_string());
  RationalPolynomial N = *to_rational(f.norm());
  RationalPolynomial w = *to_rational(f.w());
  ZeroSet out;
  if (!N.is_zero() && N.degree() > 0) {
    Factorization fac = factor_deg_le2(N);
    for (const auto& piece : fac.pieces) {
      int mu = piece.multiplicity - 2 * multiplicity_in(piece.factor, w);
      if (!piece.resolved()) {
        if (mu > 0) out.unresolved.push_back({piece.factor, mu, points_per_root(f, piece.factor)});
        continue;
      }
      bool needs_quartic = false;
      for (const auto& x0 : piece.roots) {
        auto pts = points_over(f, x0);
        if (!pts) {
          needs_quartic = true;
          continue;
        }
        for (const auto& P : *pts) {
          int k = ord_at(f, P, precision);
          if (k > 0) out.points.push_back({P, k});
        }
      }
      if (needs_quartic && mu > 0) out.unresolved.push_back({piece.factor, mu, 2});
    }
  }
  int at_infinity = ord_at(f, CurvePoint::infinity(), precision);
  if (at_infinity > 0) out.points.push_back({CurvePoint::infinity(), at_infinity});
  std::sort(out.points.begin(), out.points.end(),
            [](const LocalZero& a, const LocalZero& b) { return a.point < b.point; });
  return out;
}

int cf_degree(const CurveFunction& f, int precision) {
  int zeros = zeros_of(f, precision).order_sum();
  int poles = zeros_of(f.inverse(), precision).order_sum();
  if (zeros != poles)
    throw Error(ErrorCode::FiberSumMismatch, "zero count " + std::to_string(zeros) + " differs from pole count " +
                                                 std::to_string(poles) + " for " + f.to_string());
  return zeros;
}

}  // namespace tbelyi
