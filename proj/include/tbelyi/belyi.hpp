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

#ifndef TBELYI_BELYI_HPP
#define TBELYI_BELYI_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tbelyi/divisor.hpp"

namespace tbelyi {

/// A map beta: E -> P^1 with a name.
struct BelyiPair {
  std::string label;
  EllipticCurve curve;
  CurveFunction map;

  BelyiPair(std::string label, EllipticCurve curve, CurveFunction map);
  BelyiPair(std::string label, const EllipticCurve& curve, std::string_view map_text);
};

enum class Fiber { B = 0, W = 1, F = 2 };
const char* fiber_name(Fiber f);
inline constexpr std::array<Fiber, 3> kFibers = {Fiber::B, Fiber::W, Fiber::F};

/// Zeros of beta, beta - 1 and 1/beta.
std::array<ZeroSet, 3> fibers(const BelyiPair& pair, int precision = kDefaultPrecision);

// Critical points ----------------------------------------------------------

/// J(P) = f_x dg/dy - f_y dg/dx for g = num/den, multiplied by den^2, where
/// num = n0 + n1 y and den = d0 + d1 y. Valid when den(P) != 0.
struct QuotientRep {
  FieldPolynomial n0, n1, d0, d1;
};

/// Representations of beta tried in order by jacobian_vanishes.
std::vector<QuotientRep> jacobian_reps(const CurveFunction& f);

/// Whether dbeta vanishes at an affine P, or nullopt when every
/// representation has a vanishing denominator there.
std::optional<bool> jacobian_vanishes(const CurveFunction& f, const CurvePoint& P);

/// (A, B) with A + B y = J(f) w^2 reduced modulo the curve equation.
std::pair<FieldPolynomial, FieldPolynomial> jacobian_numerator(const CurveFunction& f);

struct CriticalSet {
  std::vector<CurvePoint> points;               // sorted
  std::vector<RationalPolynomial> unresolved;   // x-factors of degree >= 3
};

CriticalSet critical_points(const BelyiPair& pair, int precision = kDefaultPrecision);

enum class Tri { False = 0, True = 1, Unknown = 2 };
const char* tri_name(Tri t);

struct BelyiCheck {
  Tri result = Tri::Unknown;
  std::optional<CurvePoint> offending_point;
  std::optional<ExtendedValue> offending_value;
  std::vector<RationalPolynomial> uncovered;  // unresolved critical factors not inside a fiber
};

/// Every critical point has a critical value in {0, 1, oo}.
BelyiCheck is_belyi(const BelyiPair& pair, int precision = kDefaultPrecision);

// Torsion and groups ---------------------------------------------------------

/// The subgroup generated by points, or nullopt once it exceeds size_bound.
std::optional<std::vector<CurvePoint>> subgroup_closure(const EllipticCurve& E, const std::vector<CurvePoint>& points,
                                                        int size_bound = 64);

/// Z/n x Z/m with n | m; n == 1 is cyclic.
struct GroupStructure {
  int n = 1;
  int m = 1;
  int order() const { return n * m; }
  std::string to_string() const;  // "Z6" or "Z2 x Z6"
  bool operator==(const GroupStructure&) const = default;
};

/// Verifies closure under the group law and identifies the group by its order
/// statistics. Throws NotAGroup.
GroupStructure group_structure(const EllipticCurve& E, const std::vector<CurvePoint>& elements);

/// Parses "Z6", "Z2xZ6", "Z2 x Z6", "Z_2 x Z_6".
GroupStructure parse_group(std::string_view text);

// Analysis -----------------------------------------------------------------

struct AnalysisOptions {
  int torsion_bound = 24;
  int closure_bound = 64;
  int precision = kDefaultPrecision;
  /// Called between stages; may throw to abandon the analysis.
  std::function<void()> checkpoint;
};

struct FiberPoint {
  CurvePoint point;
  int e = 0;
  std::optional<int> order;  // torsion order, when within the bound
};

struct UnresolvedEntry {
  Fiber fiber;
  UnresolvedFactor factor;
};

struct QuasiCriticalReport {
  std::string label;
  int degree = 0;
  std::array<std::vector<FiberPoint>, 3> fibers;
  std::array<int, 3> fiber_sums{};
  std::vector<UnresolvedEntry> unresolved;
  bool all_torsion = false;
  std::optional<std::vector<CurvePoint>> closure;  // of the resolved points
  std::optional<GroupStructure> group;

  std::vector<FiberPoint> all_points() const;
  /// Sorted ramification indices of resolved points.
  std::vector<int> ram_multiset() const;
};

QuasiCriticalReport analyze(const BelyiPair& pair, const AnalysisOptions& options = {});

// Dynamical decomposition -----------------------------------------------------

/// p(z)/q(z) in lowest terms with q monic.
class OneVarMap {
 public:
  OneVarMap(FieldPolynomial p, FieldPolynomial q);
  /// Same grammar as curve maps with one variable, z by default.
  static OneVarMap parse(std::string_view text, const std::string& var = "z");

  const FieldPolynomial& p() const { return p_; }
  const FieldPolynomial& q() const { return q_; }
  int degree() const;
  ExtendedValue eval(const ExtendedValue& z) const;
  /// Maps {0, 1, oo} into itself.
  bool is_dynamical() const;
  /// gamma o phi.
  CurveFunction compose(const CurveFunction& phi) const;
  std::string to_string(const std::string& var = "z") const;

 private:
  FieldPolynomial p_, q_;
};

struct DecompositionCheck {
  bool dynamical = false;
  bool composes = false;
  bool ok() const { return dynamical && composes; }
};

DecompositionCheck decompose_verify(const CurveFunction& beta, const OneVarMap& gamma, const CurveFunction& phi);

}  // namespace tbelyi

#endif
