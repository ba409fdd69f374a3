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

#ifndef TBELYI_ISOGENY_HPP
#define TBELYI_ISOGENY_HPP

#include <string>
#include <vector>

#include "tbelyi/belyi.hpp"

namespace tbelyi {

/// psi: source -> target, (x, y) |-> (xi, omega) with xi, omega functions on the source.
struct IsogenyMap {
  EllipticCurve source;
  EllipticCurve target;
  CurveFunction xi;
  CurveFunction omega;

  IsogenyMap(EllipticCurve source, EllipticCurve target, CurveFunction xi, CurveFunction omega);
  static IsogenyMap parse(const EllipticCurve& source, const EllipticCurve& target, std::string_view xi,
                          std::string_view omega);
  /// Degree of xi divided by two.
  int degree(int precision = kDefaultPrecision) const;
};

/// psi(P); O maps to O and so does every pole of xi.
CurvePoint isogeny_apply(const IsogenyMap& psi, const CurvePoint& P, int precision = kDefaultPrecision);

struct IsogenyCheck {
  bool lands_on_target = false;  // (xi, omega) satisfies the target equation identically
  bool fixes_origin = false;     // xi has a pole at O
  bool additive = false;         // psi(P + Q) = psi(P) + psi(Q) on the sample pairs
  int pairs_checked = 0;
  std::string diagnostic;
  bool ok() const { return lands_on_target && fixes_origin && additive; }
};

IsogenyCheck isogeny_verify(const IsogenyMap& psi, const std::vector<CurvePoint>& samples,
                            int precision = kDefaultPrecision);

/// Division polynomial psi_n as a function on E; needs a1 = a3 = 0.
CurveFunction division_polynomial(const EllipticCurve& E, int n);

/// Multiplication by m from division polynomials; needs a1 = a3 = 0.
IsogenyMap mul_by_m(const EllipticCurve& E, int m);

/// phi o psi on the source of psi.
CurveFunction compose_map(const CurveFunction& phi, const IsogenyMap& psi);
BelyiPair compose_pair(const BelyiPair& phi, const IsogenyMap& psi, const std::string& label);

struct MainTheoremReport {
  std::optional<BelyiPair> pair;  // phi o psi
  QuasiCriticalReport report;
  Tri belyi = Tri::Unknown;
  int expected_degree = 0;
  bool degree_ok = false;
  bool torsion_ok = false;   // every resolved point has finite order within the bound
  bool group_ok = false;     // the closure of the resolved points is a finite group
  bool maps_into_base = false;  // psi sends resolved points into the quasi-critical set of phi
  bool unramified = false;      // e_beta(P) = e_phi(psi(P)) for resolved points
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the composition theorem for phi o psi; unresolved points are reported, not failed.
MainTheoremReport verify_main_theorem(const BelyiPair& phi, const IsogenyMap& psi, const std::string& label,
                                      const AnalysisOptions& options = {});

/// (1 - y)/2 on y^2 = x^3 + 1 composed with [m] for m = 1..max_m.
std::vector<MainTheoremReport> generate_family(int max_m, const AnalysisOptions& options = {});

}  // namespace tbelyi

#endif
