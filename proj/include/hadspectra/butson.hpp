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

#ifndef HADSPECTRA_BUTSON_HPP_
#define HADSPECTRA_BUTSON_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadspectra/cyclopoly.hpp"
#include "hadspectra/dense.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

/// An n x n matrix over the k-th roots of unity, stored as exponents:
/// entry (r, c) is zeta_k^exp(r, c) with the exponent reduced mod k.
class ButsonMatrix
{
public:
  ButsonMatrix() = default;
  ButsonMatrix(std::size_t n, std::uint32_t k);
  ButsonMatrix(std::size_t n, std::uint32_t k, std::vector<std::uint32_t> exps);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t root_order() const noexcept { return k_; }
  std::uint32_t exp(std::size_t r, std::size_t c) const { return exps_[r * n_ + c]; }
  void set_exp(std::size_t r, std::size_t c, long long e);
  const std::vector<std::uint32_t> & exps() const noexcept { return exps_; }

  friend bool operator==(const ButsonMatrix &, const ButsonMatrix &) = default;

private:
  std::size_t n_ = 0;
  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> exps_;
};

/// Character table of Z/k: exponent r c mod k.
ButsonMatrix fourier_matrix(std::uint32_t k);

/// Real matrices with k <= 2 (exponent 1 <-> entry -1).
PackedSignMatrix to_packed(const ButsonMatrix & b);
ButsonMatrix from_packed(const PackedSignMatrix & h);

/// Outcome of a row-orthogonality check.
struct OrthogonalityReport
{
  bool passed = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  std::uint64_t pairs_checked = 0;
};

/// For every row pair, counts exponent differences and asks whether the
/// resulting cyclotomic integer vanishes.
OrthogonalityReport verify_butson(const ButsonMatrix & b, unsigned threads = 1);

/// Row pairs must satisfy N - 2 popcount(r XOR s) = 0. The reported failure
/// is the lexicographically first failing pair regardless of threads.
OrthogonalityReport verify_hadamard_packed(const PackedSignMatrix & h, unsigned threads = 1);

/// Entrywise j-th power: exponents times j mod k.
ButsonMatrix galois_power(const ButsonMatrix & b, long long j);

/// Characteristic polynomial of N^{-1/2} M for an integer matrix M of order N.
///
/// Coefficient k is c_k N^{(k-N)/2}. When N is not a perfect square the terms
/// with N - k odd carry a factor sqrt(N); they are kept apart in sqrt_part
/// (each entry already divided by sqrt(N)).
struct NormalizedCharpoly
{
  std::vector<BigRational> rational_part;
  std::vector<BigRational> sqrt_part;
  std::uint64_t order = 0;

  bool has_sqrt_part() const;
  /// The rational part as an integer polynomial, when it has no sqrt part
  /// and only integer coefficients.
  std::optional<IntPoly> as_int_poly() const;
  std::string to_string() const;
};

NormalizedCharpoly normalize_charpoly(const IntPoly & chi, std::uint64_t order);

/// Least s in 1..12 with H^{2^s} = -N^{2^{s-1}} I, returned as x^{2^s} + 1;
/// std::nullopt when there is none. Dense exact path, order <= 128 (SizeCap
/// otherwise). Candidates are screened modulo several primes (a mismatch mod p
/// is an exact disproof) and any surviving s is confirmed over Z.
std::optional<IntPoly> minpoly_pow2_detect(const PackedSignMatrix & h);

}  // namespace hadspectra

#endif  // HADSPECTRA_BUTSON_HPP_
