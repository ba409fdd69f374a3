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

#ifndef TBELYI_NORMALIZE_HPP
#define TBELYI_NORMALIZE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tbelyi/belyi.hpp"

namespace tbelyi {

/// Group-law sums of e_P P over each fiber; all three agree for a map of degree N.
struct QuasiSum {
  int degree = 0;
  std::array<CurvePoint, 3> fiber_sums;
  CurvePoint common;  // Q0
};

/// Throws UnresolvedFiber when a fiber has points of degree > 2 and
/// FiberSumMismatch when the three sums differ.
QuasiSum quasi_sum(const BelyiPair& pair, int precision = kDefaultPrecision);

/// Some P0 among the candidates with [N] P0 = Q0.
std::optional<CurvePoint> find_translate(const EllipticCurve& E, int N, const CurvePoint& Q0,
                                         const std::vector<CurvePoint>& candidates);

/// P |-> beta(P + P0).
CurveFunction translate_map(const CurveFunction& beta, const CurvePoint& P0);

/// Principality of sum e_P (P - P0) - N (O) for each fiber.
std::array<PrincipalCheck, 3> verify_divisor_shapes(const BelyiPair& pair, const CurvePoint& P0,
                                                    int precision = kDefaultPrecision);

struct NormalizationCertificate {
  std::string label;
  QuasiSum sums;
  std::optional<CurvePoint> translate;
  std::optional<CurveFunction> normalized_map;
  std::array<bool, 3> principal{};
  std::string note;  // set when no translate was found
  bool ok() const { return translate && principal[0] && principal[1] && principal[2]; }
};

/// Searches the subgroup generated by the fiber points (bounded) for P0.
NormalizationCertificate normalize(const BelyiPair& pair, const AnalysisOptions& options = {});

}  // namespace tbelyi

#endif
