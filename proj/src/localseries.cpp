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

#include "tbelyi/localseries.hpp"

#include <algorithm>

namespace tbelyi {

PowerSeries PowerSeries::zero(int precision) {
  PowerSeries s;
  s.prec_ = precision;
  s.val_ = precision;
  return s;
}

PowerSeries PowerSeries::constant(const FieldElement& c, int precision) {
  return from_coefficients(0, {c}, precision);
}

PowerSeries PowerSeries::variable(int precision) {
  return from_coefficients(1, {FieldElement(1)}, precision);
}

PowerSeries PowerSeries::from_coefficients(int valuation, std::vector<FieldElement> c, int precision) {
  PowerSeries s;
  s.val_ = valuation;
  s.c_ = std::move(c);
  s.prec_ = precision;
  s.normalize();
  return s;
}

void PowerSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<int>(lead);
  }
  if (val_ >= prec_) c_.clear();
  if (static_cast<int>(c_.size()) > prec_ - val_) c_.resize(static_cast<std::size_t>(prec_ - val_));
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) val_ = prec_;
}

int PowerSeries::valuation() const {
  if (c_.empty())
    throw Error(ErrorCode::PrecisionExhausted,
                "series is zero to precision " + std::to_string(prec_) + "; valuation unknown");
  return val_;
}

FieldElement PowerSeries::coefficient(int k) const {
  if (k >= prec_) throw Error(ErrorCode::PrecisionExhausted, "coefficient beyond series precision");
  if (k < val_ || k - val_ >= static_cast<int>(c_.size())) return FieldElement();
  return c_[static_cast<std::size_t>(k - val_)];
}

const FieldElement& PowerSeries::leading() const {
  valuation();
  return c_.front();
}

PowerSeries PowerSeries::truncated(int precision) const {
  PowerSeries s = *this;
  s.prec_ = std::min(prec_, precision);
  s.normalize();
  return s;
}

PowerSeries PowerSeries::reflected() const {
  PowerSeries s = *this;
  for (std::size_t i = 0; i < s.c_.size(); ++i)
    if ((static_cast<long>(val_) + static_cast<long>(i)) % 2 != 0) s.c_[i] = -s.c_[i];
  return s;
}

PowerSeries PowerSeries::scaled(const FieldElement& c) const {
  PowerSeries s = *this;
  for (auto& k : s.c_) k = k * c;
  s.normalize();
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s = *this;
  for (auto& k : s.c_) k = -k;
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int prec = std::min(a.prec_, b.prec_);
  int lo = std::min(a.val_, b.val_);
  if (lo >= prec) return PowerSeries::zero(prec);
  auto extent = [lo](const PowerSeries& s) { return s.c_.empty() ? lo : s.val_ + static_cast<int>(s.c_.size()); };
  int hi = std::min(prec, std::max(extent(a), extent(b)));
  std::vector<FieldElement> c(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int k = a.val_ + static_cast<int>(i) - lo;
    if (k < static_cast<int>(c.size())) c[static_cast<std::size_t>(k)] += a.c_[i];
  }
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    int k = b.val_ + static_cast<int>(i) - lo;
    if (k < static_cast<int>(c.size())) c[static_cast<std::size_t>(k)] += b.c_[i];
  }
  return PowerSeries::from_coefficients(lo, std::move(c), prec);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  long pa = static_cast<long>(a.val_) + b.prec_, pb = static_cast<long>(b.val_) + a.prec_;
  int prec = static_cast<int>(std::min({pa, pb, static_cast<long>(PowerSeries::kExact)}));
  if (a.c_.empty() || b.c_.empty()) return PowerSeries::zero(prec);
  int val = a.val_ + b.val_;
  std::size_t n = std::min(static_cast<std::size_t>(std::max(0, prec - val)), a.c_.size() + b.c_.size() - 1);
  std::vector<FieldElement> c(n);
  for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PowerSeries::from_coefficients(val, std::move(c), prec);
}

PowerSeries PowerSeries::inverse() const {
  if (c_.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of a series that is zero to precision");
  int rel = prec_ - val_;
  if (c_.size() == 1) {
    int out_prec = prec_ >= kExact ? kExact : -val_ + rel;
    return from_coefficients(-val_, {c_[0].inverse()}, out_prec);
  }
  if (prec_ >= kExact)
    throw Error(ErrorCode::PrecisionExhausted, "inverse of an exact polynomial needs a finite precision");
  std::vector<FieldElement> b(static_cast<std::size_t>(rel));
  FieldElement inv0 = c_[0].inverse();
  b[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    FieldElement acc;
    for (int i = 1; i <= k && i < static_cast<int>(c_.size()); ++i) {
      if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
      acc += c_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    }
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return from_coefficients(-val_, std::move(b), -val_ + rel);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    int k = val_ + static_cast<int>(i);
    std::string term = "(" + c_[i].to_string() + ")";
    if (k != 0) term += "*t^" + std::to_string(k);
    out += (out.empty() ? "" : " + ") + term;
  }
  if (prec_ < kExact) out += (out.empty() ? "" : " + ") + std::string("O(t^") + std::to_string(prec_) + ")";
  return out.empty() ? "0" : out;
}

PowerSeries evaluate(const FieldPolynomial& p, const PowerSeries& s) {
  if (p.is_zero()) return PowerSeries::zero(PowerSeries::kExact);
  const auto& c = p.coeffs();
  PowerSeries acc = PowerSeries::constant(c.back(), PowerSeries::kExact);
  for (int k = p.degree() - 1; k >= 0; --k)
    acc = acc * s + PowerSeries::constant(c[static_cast<std::size_t>(k)], PowerSeries::kExact);
  return acc;
}

namespace {

int newton_rounds(int precision) {
  int rounds = 2;
  for (int reach = 1; reach < precision; reach *= 2) ++rounds;
  return rounds;
}

PowerSeries exact_constant(const FieldElement& c) { return PowerSeries::constant(c, PowerSeries::kExact); }

}  // namespace

PowerSeries chart_residual(const EllipticCurve& E, const LocalChart& chart) {
  const PowerSeries &X = chart.x, &Y = chart.y;
  return Y * Y + evaluate(E.linear(), X) * Y - evaluate(E.rhs(), X);
}

LocalChart branch_expand(const EllipticCurve& E, const CurvePoint& P, int precision) {
  if (precision < 4) throw Error(ErrorCode::InvalidArgument, "series precision must be at least 4");
  if (!on_curve(E, P)) throw Error(ErrorCode::NotOnCurve, P.to_string() + " is not on " + E.to_string());
  LocalChart chart;
  chart.point = P;
  chart.precision = precision;
  const PowerSeries t = PowerSeries::variable(PowerSeries::kExact);
  const FieldPolynomial lin = E.linear(), rhs = E.rhs(), drhs = E.rhs().derivative();

  if (P.is_infinity()) {
    // w = -1/y as a series in z = -x/y, from
    // w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.
    const int wprec = precision + 3;
    const PowerSeries z = t;
    const PowerSeries z2 = z * z, z3 = z2 * z;
    const PowerSeries a1 = exact_constant(E.a1()), a2 = exact_constant(E.a2()), a3 = exact_constant(E.a3()),
                      a4 = exact_constant(E.a4()), a6 = exact_constant(E.a6());
    const PowerSeries one = exact_constant(1), two = exact_constant(2), three = exact_constant(3);
    PowerSeries w = z3.truncated(wprec);
    for (int round = newton_rounds(wprec); round > 0; --round) {
      PowerSeries w2 = w * w;
      PowerSeries H = w - (z3 + a1 * z * w + a2 * z2 * w + a3 * w2 + a4 * z * w2 + a6 * w2 * w);
      PowerSeries dH = one - a1 * z - a2 * z2 - two * a3 * w - two * a4 * z * w - three * a6 * w2;
      w = (w - H / dH).truncated(wprec);
    }
    chart.kind = ChartKind::AtInfinity;
    chart.x = (z / w).reflected();
    chart.y = (-(one / w)).reflected();
    return chart;
  }

  const FieldElement fy = E.partial_y(P.x(), P.y());
  const FieldElement fx = E.partial_x(P.x(), P.y());
  if (!fy.is_zero()) {
    chart.kind = ChartKind::XShift;
    chart.x = exact_constant(P.x()) + t;
    const PowerSeries lx = evaluate(lin, chart.x), rx = evaluate(rhs, chart.x);
    PowerSeries Y = PowerSeries::constant(P.y(), precision);
    for (int round = newton_rounds(precision); round > 0; --round) {
      PowerSeries F = Y * Y + lx * Y - rx;
      PowerSeries dF = exact_constant(2) * Y + lx;
      Y = (Y - F / dF).truncated(precision);
    }
    chart.y = Y;
    return chart;
  }
  if (fx.is_zero()) throw Error(ErrorCode::SingularPoint, P.to_string() + " is singular");
  chart.kind = ChartKind::YShift;
  chart.y = exact_constant(P.y()) + t;
  const PowerSeries& Y = chart.y;
  const PowerSeries a1 = exact_constant(E.a1()), a3 = exact_constant(E.a3());
  PowerSeries X = PowerSeries::constant(P.x(), precision);
  for (int round = newton_rounds(precision); round > 0; --round) {
    PowerSeries G = Y * Y + a1 * X * Y + a3 * Y - evaluate(rhs, X);
    PowerSeries dG = a1 * Y - evaluate(drhs, X);
    X = (X - G / dG).truncated(precision);
  }
  chart.x = X;
  return chart;
}

PowerSeries expand_quotient(const LocalChart& chart, const FieldPolynomial& u, const FieldPolynomial& v,
                            const FieldPolynomial& w) {
  PowerSeries num = evaluate(u, chart.x) + evaluate(v, chart.x) * chart.y;
  PowerSeries den = evaluate(w, chart.x);
  if (den.is_zero()) throw Error(ErrorCode::PrecisionExhausted, "denominator vanishes to working precision");
  // exact polynomials in t get the chart's relative window
  if (den.precision() >= PowerSeries::kExact) den = den.truncated(den.valuation() + chart.precision);
  if (num.precision() >= PowerSeries::kExact && !num.is_zero())
    num = num.truncated(num.valuation() + chart.precision);
  return num / den;
}

}  // namespace tbelyi
