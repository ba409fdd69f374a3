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

#include "tbelyi/belyi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tbelyi/expr.hpp"

namespace tbelyi {

BelyiPair::BelyiPair(std::string label_, EllipticCurve curve_, CurveFunction map_)
    : label(std::move(label_)), curve(std::move(curve_)), map(std::move(map_)) {
  if (!(map.curve() == curve)) throw Error(ErrorCode::CurveMismatch, "map of " + label + " lives on another curve");
  if (map.is_constant()) throw Error(ErrorCode::ConstantFunction, "map of " + label + " is constant");
}

BelyiPair::BelyiPair(std::string label_, const EllipticCurve& curve_, std::string_view map_text)
    : BelyiPair(std::move(label_), curve_, CurveFunction::parse(map_text, curve_)) {}

const char* fiber_name(Fiber f) {
  switch (f) {
    case Fiber::B:
      return "B";
    case Fiber::W:
      return "W";
    case Fiber::F:
      return "F";
  }
  return "?";
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    case Tri::Unknown:
      return "unknown";
  }
  return "?";
}

std::array<ZeroSet, 3> fibers(const BelyiPair& pair, int precision) {
  const CurveFunction& beta = pair.map;
  return {zeros_of(beta, precision), zeros_of(beta - CurveFunction::constant(pair.curve, 1), precision),
          zeros_of(beta.inverse(), precision)};
}

// Critical points ----------------------------------------------------------

std::vector<QuotientRep> jacobian_reps(const CurveFunction& f) {
  const EllipticCurve& E = f.curve();
  const FieldPolynomial &u = f.u(), &v = f.v(), &w = f.w();
  FieldPolynomial N = f.norm();
  FieldPolynomial gg = gcd(N, w);
  FieldPolynomial wr = w / gg, Nr = N / gg;
  // u + v ybar = (u - v L) - v y
  FieldPolynomial c0 = wr * (u - v * E.linear()), c1 = -(wr * v);
  return {
      {u, v, w, FieldPolynomial()},
      {Nr, FieldPolynomial(), c0, c1},
      {w, FieldPolynomial(), u, v},
      {c0, c1, Nr, FieldPolynomial()},
  };
}

std::optional<bool> jacobian_vanishes(const CurveFunction& f, const CurvePoint& P) {
  if (P.is_infinity()) return std::nullopt;
  const EllipticCurve& E = f.curve();
  const FieldElement &X = P.x(), &Y = P.y();
  for (const auto& r : jacobian_reps(f)) {
    FieldElement h = r.d0.eval(X) + r.d1.eval(X) * Y;
    if (h.is_zero()) continue;
    FieldElement g = r.n0.eval(X) + r.n1.eval(X) * Y;
    FieldElement gx = r.n0.derivative().eval(X) + r.n1.derivative().eval(X) * Y, gy = r.n1.eval(X);
    FieldElement hx = r.d0.derivative().eval(X) + r.d1.derivative().eval(X) * Y, hy = r.d1.eval(X);
    FieldElement J = E.partial_x(X, Y) * (gy * h - g * hy) - E.partial_y(X, Y) * (gx * h - g * hx);
    return J.is_zero();
  }
  return std::nullopt;
}

std::pair<FieldPolynomial, FieldPolynomial> jacobian_numerator(const CurveFunction& f) {
  const EllipticCurve& E = f.curve();
  const FieldPolynomial &u = f.u(), &v = f.v(), &w = f.w();
  FieldPolynomial L = E.linear(), R = E.rhs();
  FieldPolynomial P0 = u.derivative() * w - u * w.derivative();
  FieldPolynomial P1 = v.derivative() * w - v * w.derivative();
  FieldPolynomial two(FieldElement(2));
  FieldPolynomial A = -(R.derivative() * v * w) - L * P0 - two * P1 * R;
  FieldPolynomial B = (v * w).scaled(E.a1()) - two * P0 + L * P1;
  return {A, B};
}

namespace {

void collect_candidates(const CurveFunction& f, int precision, std::set<CurvePoint>& points,
                        std::vector<RationalPolynomial>& unresolved) {
  auto [A, B] = jacobian_numerator(f);
  if (B.is_zero() && A.degree() <= 0) return;
  ZeroSet z = zeros_of(CurveFunction(f.curve(), A, B, FieldPolynomial(FieldElement(1))), precision);
  for (const auto& p : z.points) points.insert(p.point);
  for (const auto& u : z.unresolved) {
    if (std::find(unresolved.begin(), unresolved.end(), u.factor) == unresolved.end())
      unresolved.push_back(u.factor);
  }
}

}  // namespace

CriticalSet critical_points(const BelyiPair& pair, int precision) {
  const CurveFunction& beta = pair.map;
  std::set<CurvePoint> candidates;
  CriticalSet out;
  collect_candidates(beta, precision, candidates, out.unresolved);
  collect_candidates(beta.inverse(), precision, candidates, out.unresolved);
  for (const auto& P : candidates) {
    std::optional<bool> vanishes = jacobian_vanishes(beta, P);
    bool critical = vanishes ? *vanishes : ram_index(beta, P, precision) >= 2;
    if (critical) out.points.push_back(P);
  }
  if (ram_index(beta, CurvePoint::infinity(), precision) >= 2) out.points.push_back(CurvePoint::infinity());
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.unresolved.begin(), out.unresolved.end(),
            [](const RationalPolynomial& a, const RationalPolynomial& b) {
              return a.to_string() < b.to_string();
            });
  return out;
}

BelyiCheck is_belyi(const BelyiPair& pair, int precision) {
  BelyiCheck out;
  CriticalSet crit = critical_points(pair, precision);
  for (const auto& P : crit.points) {
    ExtendedValue v = cf_eval(pair.map, P, precision);
    if (v.infinite || v.value.is_zero() || v.value.is_one()) continue;
    out.result = Tri::False;
    out.offending_point = P;
    out.offending_value = v;
    return out;
  }
  const CurveFunction& beta = pair.map;
  std::vector<RationalPolynomial> norms;
  for (const CurveFunction& g : {beta, beta - CurveFunction::constant(pair.curve, 1), beta.inverse()}) {
    if (auto n = to_rational(g.norm())) norms.push_back(*n);
  }
  for (const auto& p : crit.unresolved) {
    bool covered = std::any_of(norms.begin(), norms.end(), [&](const RationalPolynomial& n) { return p.divides(n); });
    if (!covered) out.uncovered.push_back(p);
  }
  out.result = out.uncovered.empty() ? Tri::True : Tri::Unknown;
  return out;
}

// Torsion and groups ---------------------------------------------------------

std::optional<std::vector<CurvePoint>> subgroup_closure(const EllipticCurve& E, const std::vector<CurvePoint>& points,
                                                        int size_bound) {
  std::set<CurvePoint> generators;
  for (const auto& P : points) {
    if (!on_curve(E, P)) throw Error(ErrorCode::NotOnCurve, P.to_string());
    if (!P.is_infinity()) generators.insert(P);
  }
  std::set<CurvePoint> group{CurvePoint::infinity()};
  std::vector<CurvePoint> frontier{CurvePoint::infinity()};
  while (!frontier.empty()) {
    std::vector<CurvePoint> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        CurvePoint s = point_add(E, e, g);
        if (group.insert(s).second) {
          if (static_cast<int>(group.size()) > size_bound) return std::nullopt;
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<CurvePoint>(group.begin(), group.end());
}

std::string GroupStructure::to_string() const {
  if (n == 1) return "Z" + std::to_string(m);
  return "Z" + std::to_string(n) + " x Z" + std::to_string(m);
}

namespace {

std::map<int, int> order_histogram(int n, int m) {
  std::map<int, int> h;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      int a = n / std::gcd(i, n), b = m / std::gcd(j, m);
      ++h[std::lcm(a, b)];
    }
  }
  return h;
}

}  // namespace

GroupStructure group_structure(const EllipticCurve& E, const std::vector<CurvePoint>& elements) {
  std::set<CurvePoint> G(elements.begin(), elements.end());
  if (G.empty() || !G.count(CurvePoint::infinity())) throw Error(ErrorCode::NotAGroup, "missing the identity");
  std::vector<CurvePoint> v(G.begin(), G.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!G.count(negate(E, v[i]))) throw Error(ErrorCode::NotAGroup, "no inverse for " + v[i].to_string());
    for (std::size_t j = i; j < v.size(); ++j) {
      if (!G.count(point_add(E, v[i], v[j])))
        throw Error(ErrorCode::NotAGroup, "not closed: " + v[i].to_string() + " + " + v[j].to_string());
    }
  }
  const int size = static_cast<int>(v.size());
  std::map<int, int> histogram;
  int exponent = 1;
  for (const auto& P : v) {
    auto k = point_order(E, P, size);
    if (!k) throw Error(ErrorCode::NotAGroup, "element of unbounded order " + P.to_string());
    ++histogram[*k];
    exponent = std::max(exponent, *k);
  }
  if (size % exponent != 0 || exponent % (size / exponent) != 0)
    throw Error(ErrorCode::NotAGroup, "order " + std::to_string(size) + " with exponent " + std::to_string(exponent) +
                                          " is not of the form Z/n x Z/m");
  GroupStructure gs{size / exponent, exponent};
  if (order_histogram(gs.n, gs.m) != histogram)
    throw Error(ErrorCode::NotAGroup, "element orders do not match " + gs.to_string());
  return gs;
}

GroupStructure parse_group(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '_') s += c;
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw Error(ErrorCode::ParseError, "bad group '" + std::string(text) + "'");
    std::size_t end = s.find('x', pos);
    std::string num = s.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad group '" + std::string(text) + "'");
    parts.push_back(std::stoi(num));
    pos = end == std::string::npos ? s.size() : end + 1;
  }
  if (parts.size() == 1) return {1, parts[0]};
  if (parts.size() == 2) {
    int n = std::min(parts[0], parts[1]), m = std::max(parts[0], parts[1]);
    if (n <= 0 || m % n != 0) throw Error(ErrorCode::ParseError, "group not in invariant-factor form");
    return {n, m};
  }
  throw Error(ErrorCode::ParseError, "bad group '" + std::string(text) + "'");
}

// Analysis -----------------------------------------------------------------

std::vector<FiberPoint> QuasiCriticalReport::all_points() const {
  std::vector<FiberPoint> out;
  for (const auto& f : fibers) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<int> QuasiCriticalReport::ram_multiset() const {
  std::vector<int> out;
  for (const auto& p : all_points()) out.push_back(p.e);
  std::sort(out.begin(), out.end());
  return out;
}

QuasiCriticalReport analyze(const BelyiPair& pair, const AnalysisOptions& options) {
  auto checkpoint = [&] {
    if (options.checkpoint) options.checkpoint();
  };
  QuasiCriticalReport r;
  r.label = pair.label;
  const CurveFunction& beta = pair.map;
  const CurveFunction targets[3] = {beta, beta - CurveFunction::constant(pair.curve, 1), beta.inverse()};
  bool torsion = true;
  std::vector<CurvePoint> resolved;
  for (Fiber fb : kFibers) {
    checkpoint();
    auto k = static_cast<std::size_t>(fb);
    ZeroSet z = zeros_of(targets[k], options.precision);
    r.fiber_sums[k] = z.order_sum();
    for (const auto& u : z.unresolved) r.unresolved.push_back({fb, u});
    for (const auto& p : z.points) {
      FiberPoint fp{p.point, p.order, point_order(pair.curve, p.point, options.torsion_bound)};
      torsion = torsion && fp.order.has_value();
      resolved.push_back(p.point);
      r.fibers[k].push_back(fp);
    }
  }
  r.degree = r.fiber_sums[0];
  r.all_torsion = torsion && r.unresolved.empty();
  checkpoint();
  if (torsion) {
    r.closure = subgroup_closure(pair.curve, resolved, options.closure_bound);
    if (r.closure) {
      checkpoint();
      r.group = group_structure(pair.curve, *r.closure);
    }
  }
  return r;
}

// Dynamical decomposition -----------------------------------------------------

OneVarMap::OneVarMap(FieldPolynomial p, FieldPolynomial q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "one-variable map with zero denominator");
  if (p_.is_zero()) {
    q_ = FieldPolynomial(FieldElement(1));
    return;
  }
  FieldPolynomial g = gcd(p_, q_);
  p_ = p_ / g;
  q_ = q_ / g;
  FieldElement lc = q_.leading().inverse();
  p_ = p_.scaled(lc);
  q_ = q_.scaled(lc);
}

namespace {

struct Frac {
  FieldPolynomial p, q;
  Frac operator+(const Frac& o) const { return {p * o.q + o.p * q, q * o.q}; }
  Frac operator-(const Frac& o) const { return {p * o.q - o.p * q, q * o.q}; }
  Frac operator*(const Frac& o) const { return {p * o.p, q * o.q}; }
  Frac operator/(const Frac& o) const {
    if (o.p.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero in a one-variable map");
    return {p * o.q, q * o.p};
  }
  Frac operator-() const { return {-p, q}; }
};

}  // namespace

OneVarMap OneVarMap::parse(std::string_view text, const std::string& var) {
  ExprAlgebra<Frac> algebra;
  algebra.variable = [&](std::string_view name) -> Frac {
    if (name != var) throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
    return {FieldPolynomial::x(), FieldPolynomial(FieldElement(1))};
  };
  algebra.constant = [](const FieldElement& c) -> Frac {
    return {FieldPolynomial(c), FieldPolynomial(FieldElement(1))};
  };
  Frac f = parse_expression(text, algebra);
  return OneVarMap(f.p, f.q);
}

int OneVarMap::degree() const { return std::max(p_.degree(), q_.degree()); }

ExtendedValue OneVarMap::eval(const ExtendedValue& z) const {
  if (z.infinite) {
    if (p_.is_zero() || p_.degree() < q_.degree()) return ExtendedValue::finite(FieldElement(0));
    if (p_.degree() > q_.degree()) return ExtendedValue::infinity();
    return ExtendedValue::finite(p_.leading() / q_.leading());
  }
  FieldElement d = q_.eval(z.value);
  if (d.is_zero()) return ExtendedValue::infinity();
  return ExtendedValue::finite(p_.eval(z.value) / d);
}

bool OneVarMap::is_dynamical() const {
  for (const auto& z : {ExtendedValue::finite(FieldElement(0)), ExtendedValue::finite(FieldElement(1)),
                        ExtendedValue::infinity()}) {
    ExtendedValue v = eval(z);
    if (!(v.infinite || v.value.is_zero() || v.value.is_one())) return false;
  }
  return true;
}

CurveFunction OneVarMap::compose(const CurveFunction& phi) const {
  const EllipticCurve& E = phi.curve();
  auto lift = [&](const FieldElement& c) { return CurveFunction::constant(E, c); };
  return p_.eval_in(phi, lift) / q_.eval_in(phi, lift);
}

std::string OneVarMap::to_string(const std::string& var) const {
  if (q_.degree() == 0) return "(" + p_.scaled(q_.leading().inverse()).to_string(var) + ")";
  return "(" + p_.to_string(var) + ")/(" + q_.to_string(var) + ")";
}

DecompositionCheck decompose_verify(const CurveFunction& beta, const OneVarMap& gamma, const CurveFunction& phi) {
  DecompositionCheck out;
  out.dynamical = gamma.is_dynamical();
  out.composes = beta.curve() == phi.curve() && gamma.compose(phi) == beta;
  return out;
}

}  // namespace tbelyi
