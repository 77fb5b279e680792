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

#ifndef HADSPECTRA_MONOMIAL_HPP_
#define HADSPECTRA_MONOMIAL_HPP_

#include <cstdint>
#include <vector>

#include "hadspectra/cyclopoly.hpp"
#include "hadspectra/dense.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

/// A permutation matrix scaled by k-th roots of unity.
///
/// Column c has its single nonzero entry in row dest(c), equal to
/// zeta_k^scale(c). Scalars are kept as exponents; signed permutation
/// matrices use k = 2.
class MonomialMatrix
{
public:
  MonomialMatrix() = default;
  /// Identity of the given size.
  MonomialMatrix(std::size_t size, std::uint32_t k);
  MonomialMatrix(std::vector<std::uint32_t> dest, std::vector<std::uint32_t> scale, std::uint32_t k);

  static MonomialMatrix identity(std::size_t size, std::uint32_t k = 2)
  {
    return MonomialMatrix(size, k);
  }
  /// zeta_k^e times the identity.
  static MonomialMatrix scalar(std::size_t size, std::uint32_t k, std::uint32_t e);
  /// Reads a dense signed permutation matrix; throws InvalidInput otherwise.
  static MonomialMatrix from_dense(const IntMatrix & m);

  std::size_t size() const noexcept { return dest_.size(); }
  std::uint32_t root_order() const noexcept { return k_; }
  std::uint32_t dest(std::size_t c) const { return dest_[c]; }
  std::uint32_t scale(std::size_t c) const { return scale_[c]; }
  const std::vector<std::uint32_t> & dest() const noexcept { return dest_; }
  const std::vector<std::uint32_t> & scale() const noexcept { return scale_; }

  /// Same matrix with scalars expressed in zeta_{k'}; k must divide k'.
  MonomialMatrix with_root_order(std::uint32_t k_new) const;
  MonomialMatrix negated() const;
  MonomialMatrix inverse() const;
  /// Dense {0, +1, -1} form; needs k <= 2.
  IntMatrix to_dense() const;

  friend bool operator==(const MonomialMatrix &, const MonomialMatrix &) = default;

private:
  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> dest_;
  std::vector<std::uint32_t> scale_;
};

struct Cycle
{
  /// c, dest(c), dest(dest(c)), ... starting from the smallest column.
  std::vector<std::uint32_t> members;
  /// Sum of the scale exponents along the cycle, mod k.
  std::uint32_t exponent = 0;

  std::size_t length() const noexcept { return members.size(); }
};

struct CycleSpectrum
{
  std::uint32_t root_order = 1;
  std::vector<Cycle> cycles;
};

MonomialMatrix mono_compose(const MonomialMatrix & lhs, const MonomialMatrix & rhs);
MonomialMatrix mono_power(const MonomialMatrix & m, long long j);
CycleSpectrum mono_cycles(const MonomialMatrix & m);
/// Least e >= 1 with M^e = I.
std::uint64_t mono_order(const MonomialMatrix & m);

/// prod_j (x^{n_j} - c_j). Throws UnsupportedRootOrder for k > 2.
IntPoly mono_charpoly(const MonomialMatrix & m);
/// lcm of the cycle binomials via their cyclotomic factor sets.
IntPoly mono_minpoly(const MonomialMatrix & m);

/// M S, as row moves plus whole-row complements.
PackedSignMatrix mono_apply_left(const MonomialMatrix & m, const PackedSignMatrix & s, unsigned threads = 1);

/// S Q^T, as column moves plus column sign flips.
PackedSignMatrix mono_apply_right_transposed(const PackedSignMatrix & s, const MonomialMatrix & q, unsigned threads = 1);

/// Precomputed column gather for S Q^T: output bit c of a row is input bit
/// source[c] XOR mask bit c.
class ColumnGather
{
public:
  explicit ColumnGather(const MonomialMatrix & q);

  void apply(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const;

private:
  std::vector<std::uint32_t> source_;
  std::vector<std::uint64_t> mask_;
};

}  // namespace hadspectra

#endif  // HADSPECTRA_MONOMIAL_HPP_
