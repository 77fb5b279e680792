// Copyright 2026 The hadspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADSPECTRA_CYCLOPOLY_HPP_
#define HADSPECTRA_CYCLOPOLY_HPP_

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hadspectra/bigint.hpp"

namespace hadspectra
{

/// Polynomial with arbitrary-precision integer coefficients.
///
/// coeffs()[i] is the coefficient of x^i; there are never trailing zeros,
/// so the zero polynomial has an empty coefficient vector.
class IntPoly
{
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt & c);
  static IntPoly monomial(std::size_t degree, const BigInt & c = 1);
  /// x^m - c
  static IntPoly binomial(std::size_t m, const BigInt & c);

  const std::vector<BigInt> & coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt & leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt evaluate(const BigInt & x) const;

  IntPoly & operator+=(const IntPoly & rhs);
  IntPoly & operator-=(const IntPoly & rhs);
  IntPoly & operator*=(const IntPoly & rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly & b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly & b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly & b) { return a *= b; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly &, const IntPoly &) = default;

  /// Conventional rendering, e.g. "x^2 - 2x + 2", "0".
  std::string to_string() const;

private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Returns (q, r) with f = q g + r and deg r < deg g. Every quotient
/// coefficient must be an integer: throws NonExactDivision when the leading
/// coefficient of g fails to divide, DivisionByZero when g = 0.
std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly & f, const IntPoly & g);

/// Phi_k as (x^k - 1) divided by Phi_d for every proper divisor d of k.
/// Valid for 1 <= k <= 2^20.
IntPoly cyclotomic_poly(std::uint64_t k);

/// Product of Phi_d over the given indices.
IntPoly product_of_cyclotomics(const std::set<std::uint64_t> & indices);

/// Indices d with Phi_d | x^m - 1 (sign = +1) or Phi_d | x^m + 1 (sign = -1).
std::set<std::uint64_t> binomial_cyclotomic_factors(std::uint64_t m, int sign);

std::uint64_t euler_phi(std::uint64_t k);
std::vector<std::uint64_t> divisors(std::uint64_t k);

/// Element sum_e c_e zeta_k^e of the group ring Z[x]/(x^k - 1).
class CycElt
{
public:
  explicit CycElt(std::uint64_t k);
  CycElt(std::uint64_t k, std::vector<BigInt> coeffs);

  std::uint64_t order() const noexcept { return k_; }
  const std::vector<BigInt> & coeffs() const noexcept { return coeffs_; }
  /// Adds c to the coefficient of zeta_k^(e mod k).
  void add(long long e, const BigInt & c = 1);

private:
  std::uint64_t k_;
  std::vector<BigInt> coeffs_;
};

/// True iff the element is 0 in C, decided by reduction modulo Phi_k.
bool cyc_is_zero(const CycElt & c);

}  // namespace hadspectra

#endif  // HADSPECTRA_CYCLOPOLY_HPP_
