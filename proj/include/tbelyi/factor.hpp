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

#ifndef TBELYI_FACTOR_HPP
#define TBELYI_FACTOR_HPP

#include <utility>
#include <vector>

#include "tbelyi/numfield.hpp"
#include "tbelyi/poly.hpp"

namespace tbelyi {

/// One monic factor of a rational polynomial. Factors of degree <= 2 are
/// irreducible over Q and carry their roots; a factor with no roots is the
/// part left after every linear and quadratic factor was removed (its
/// irreducible pieces all have degree >= 3).
struct FactorPiece {
  RationalPolynomial factor;
  int multiplicity = 1;
  std::vector<FieldElement> roots;

  bool resolved() const { return !roots.empty(); }
};

struct Factorization {
  Rational leading;
  std::vector<FactorPiece> pieces;

  std::vector<std::pair<FieldElement, int>> roots() const;
  std::vector<std::pair<RationalPolynomial, int>> unresolved() const;
  /// leading * prod(piece^multiplicity); equals the input exactly.
  RationalPolynomial expand() const;
};

/// Monic squarefree factors s_i with p = lc * prod s_i^i (Yun).
std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p);

/// Splits p over Q into its roots in Q and quadratic fields plus the
/// remaining factors of degree >= 3. Throws ZeroPolynomial on p = 0.
Factorization factor_deg_le2(const RationalPolynomial& p);

/// The two roots of monic x^2 + b x + c.
std::pair<FieldElement, FieldElement> quadratic_roots(const Rational& b, const Rational& c);

}  // namespace tbelyi

#endif
