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

// Linear and quadratic factors of rational polynomials.
//
// For a squarefree primitive f in Z[x] of degree >= 3 we pick a prime p with
// f squarefree mod p, find the linear and irreducible quadratic factors mod p
// (distinct-degree plus Cantor-Zassenhaus splitting), Hensel-lift each
// candidate past the Mignotte bound for degree-2 factors and keep the lifts
// that divide f over Z. A degree <= 2 factor of f over Z reduces to a
// product of at most two such modular factors, so the search is complete.

#include "tbelyi/factor.hpp"

#include <algorithm>
#include <random>

namespace tbelyi {

namespace {

using ZPoly = std::vector<Integer>;  // ascending coefficients

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return reduce(std::move(r), m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return reduce(std::move(r), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r), m);
}

ZPoly scale(const ZPoly& a, const Integer& c, const Integer& m) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return reduce(std::move(r), m);
}

Integer invert(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::DivisionByZero, "non-invertible residue");
  return r;
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly rem = reduce(a, m);
  if (deg(rem) < deg(b)) return {{}, rem};
  Integer inv = invert(b.back(), m);
  ZPoly quo(rem.size() - b.size() + 1);
  for (int k = deg(rem) - deg(b); k >= 0; --k) {
    Integer top = mod(rem[k + b.size() - 1], m);
    if (sgn(top) == 0) continue;
    Integer q = mod(top * inv, m);
    quo[k] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = mod(rem[k + j] - q * b[j], m);
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

ZPoly make_monic(const ZPoly& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, invert(a.back(), p), p);
}

ZPoly gcd_mod(ZPoly a, ZPoly b, const Integer& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    ZPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
std::pair<ZPoly, ZPoly> ext_gcd_mod(const ZPoly& a, const ZPoly& b, const Integer& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error(ErrorCode::InvalidArgument, "factors are not coprime mod p");
  Integer inv = invert(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& p) {
  ZPoly result{Integer(1)};
  base = divmod(base, f, p).second;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod(mul(result, base, p), f, p).second;
    e >>= 1;
    if (sgn(e) > 0) base = divmod(mul(base, base, p), f, p).second;
  }
  return result;
}

ZPoly derivative(const ZPoly& a, const Integer& m) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return reduce(std::move(r), m);
}

// Splits a product of distinct monic irreducibles of degree d mod p.
void equal_degree_split(const ZPoly& g, int d, const Integer& p, std::mt19937_64& rng,
                        std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  for (;;) {
    ZPoly a(deg(g));
    for (auto& c : a) c = Integer(static_cast<unsigned long>(rng() % p.get_ui()));
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly b = sub(powmod(a, e, g, p), ZPoly{Integer(1)}, p);
    ZPoly h = gcd_mod(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic  ->  same mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divmod(mul(s, e, m2), h, m2);
  ZPoly g_new = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
  ZPoly h_new = add(h, r, m2);
  ZPoly b = sub(add(mul(s, g_new, m2), mul(t, h_new, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = divmod(mul(s, b, m2), h_new, m2);
  s = sub(s, d, m2);
  t = sub(t, add(mul(t, b, m2), mul(c, g_new, m2), m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly r = a;
  Integer half = m / 2;
  for (auto& c : r) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(r);
  return r;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (sgn(g) != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && sgn(a.back()) < 0)
    for (auto& c : a) c = -c;
  return a;
}

RationalPolynomial to_rational_poly(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

// Primitive integer multiple of a nonzero rational polynomial.
ZPoly to_integer_poly(const RationalPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  ZPoly out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return primitive(out);
}

bool is_prime(unsigned long n) { return mpz_probab_prime_p(Integer(n).get_mpz_t(), 25) > 0; }

// All primitive integer factors of degree 1 or 2 of a squarefree primitive f, deg f >= 3.
std::vector<ZPoly> small_factors(const ZPoly& f) {
  const Integer lc = f.back();
  Integer p = 0;
  for (unsigned long cand = 3;; cand += 2) {
    if (!is_prime(cand)) continue;
    Integer pc(cand);
    if (sgn(mod(lc, pc)) == 0) continue;
    ZPoly fm = reduce(f, pc);
    if (deg(gcd_mod(fm, derivative(fm, pc), pc)) == 0) {
      p = pc;
      break;
    }
    if (cand > 100000) throw Error(ErrorCode::InvalidArgument, "no good prime for factoring");
  }
  ZPoly fbar = make_monic(reduce(f, p), p);
  const ZPoly x{Integer(0), Integer(1)};

  std::mt19937_64 rng(0x5eed);
  std::vector<ZPoly> linear, quadratic;
  ZPoly xp = powmod(x, p, fbar, p);
  ZPoly g1 = gcd_mod(sub(xp, x, p), fbar, p);
  if (deg(g1) > 0) equal_degree_split(g1, 1, p, rng, linear);
  ZPoly rest = divmod(fbar, g1, p).first;
  if (deg(rest) >= 2) {
    ZPoly xp2 = powmod(x, p * p, rest, p);
    ZPoly g2 = gcd_mod(sub(xp2, x, p), rest, p);
    if (deg(g2) > 0) equal_degree_split(g2, 2, p, rng, quadratic);
  }

  // Mignotte: coefficients of lc * (monic degree-2 factor) are below 4 |lc| |f|_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = 8 * abs(lc) * (root + 1) + 1;

  auto lift = [&](const ZPoly& factor) {
    ZPoly h = factor;
    ZPoly g = scale(divmod(fbar, factor, p).first, lc, p);
    auto [s, t] = ext_gcd_mod(g, h, p);
    Integer m = p;
    while (m <= bound) {
      Integer m2 = m * m;
      hensel_step(f, g, h, s, t, m2);
      m = m2;
    }
    return std::make_pair(h, m);
  };
  auto try_candidate = [&](const ZPoly& h, const Integer& m) -> std::optional<ZPoly> {
    ZPoly cand = primitive(symmetric(scale(h, lc, m), m));
    if (deg(cand) < 1) return std::nullopt;
    if ((to_rational_poly(f) % to_rational_poly(cand)).is_zero()) return cand;
    return std::nullopt;
  };

  std::vector<ZPoly> found;
  std::vector<std::pair<ZPoly, Integer>> lifted_linear;
  std::vector<bool> used;
  for (const auto& l : linear) {
    auto [h, m] = lift(l);
    lifted_linear.emplace_back(h, m);
    if (auto c = try_candidate(h, m)) {
      found.push_back(*c);
      used.push_back(true);
    } else {
      used.push_back(false);
    }
  }
  for (std::size_t i = 0; i < lifted_linear.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < lifted_linear.size(); ++j) {
      if (used[j]) continue;
      const Integer& m = lifted_linear[i].second;
      ZPoly prod = mul(lifted_linear[i].first, lifted_linear[j].first, m);
      if (auto c = try_candidate(prod, m)) {
        found.push_back(*c);
        used[i] = used[j] = true;
        break;
      }
    }
  }
  for (const auto& q : quadratic) {
    auto [h, m] = lift(q);
    if (auto c = try_candidate(h, m)) found.push_back(*c);
  }
  return found;
}

}  // namespace

std::pair<FieldElement, FieldElement> quadratic_roots(const Rational& b, const Rational& c) {
  Rational disc = b * b - 4 * c;
  FieldElement r = *FieldElement(disc).sqrt_extending();
  FieldElement half_b(Rational(-b / 2));
  FieldElement half_r = r * FieldElement(Rational(1, 2));
  return {half_b + half_r, half_b - half_r};
}

std::vector<std::pair<FieldElement, int>> Factorization::roots() const {
  std::vector<std::pair<FieldElement, int>> out;
  for (const auto& piece : pieces)
    for (const auto& r : piece.roots) out.emplace_back(r, piece.multiplicity);
  return out;
}

std::vector<std::pair<RationalPolynomial, int>> Factorization::unresolved() const {
  std::vector<std::pair<RationalPolynomial, int>> out;
  for (const auto& piece : pieces)
    if (!piece.resolved()) out.emplace_back(piece.factor, piece.multiplicity);
  return out;
}

RationalPolynomial Factorization::expand() const {
  RationalPolynomial acc(leading);
  for (const auto& piece : pieces) acc *= piece.factor.pow(static_cast<unsigned>(piece.multiplicity));
  return acc;
}

std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() == 0) return out;
  RationalPolynomial f = p.monic();
  RationalPolynomial fp = f.derivative();
  RationalPolynomial b = gcd(f, fp);
  RationalPolynomial c = f / b;
  RationalPolynomial d = fp / b - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    RationalPolynomial a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = c / a;
    d = d / a - c.derivative();
  }
  return out;
}

namespace {

FactorPiece piece_for(const RationalPolynomial& monic_factor, int multiplicity) {
  FactorPiece piece{monic_factor, multiplicity, {}};
  if (monic_factor.degree() == 1) {
    piece.roots.emplace_back(Rational(-monic_factor.coeff(0)));
  } else if (monic_factor.degree() == 2) {
    auto [r1, r2] = quadratic_roots(monic_factor.coeff(1), monic_factor.coeff(0));
    piece.roots = {r1, r2};
  }
  return piece;
}

void append_split(const RationalPolynomial& q, int multiplicity, std::vector<FactorPiece>& pieces) {
  // q monic with rational roots: split a reducible quadratic into two linear pieces
  if (q.degree() == 2) {
    Rational disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
    auto r = FieldElement(disc).sqrt();
    if (r) {
      auto [r1, r2] = quadratic_roots(q.coeff(1), q.coeff(0));
      pieces.push_back(piece_for(RationalPolynomial{Rational(-r1.rational_part()), Rational(1)}, multiplicity));
      pieces.push_back(piece_for(RationalPolynomial{Rational(-r2.rational_part()), Rational(1)}, multiplicity));
      return;
    }
  }
  pieces.push_back(piece_for(q, multiplicity));
}

}  // namespace

Factorization factor_deg_le2(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_deg_le2 of the zero polynomial");
  Factorization out;
  out.leading = p.leading();
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    if (s.degree() <= 2) {
      append_split(s, mult, out.pieces);
      continue;
    }
    ZPoly f = to_integer_poly(s);
    RationalPolynomial rest = s;
    for (const ZPoly& g : small_factors(f)) {
      RationalPolynomial gq = to_rational_poly(g).monic();
      rest = rest / gq;
      append_split(gq, mult, out.pieces);
    }
    if (rest.degree() > 0) out.pieces.push_back(FactorPiece{rest, mult, {}});
  }
  return out;
}

}  // namespace tbelyi
