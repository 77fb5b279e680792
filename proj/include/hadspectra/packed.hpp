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

#ifndef HADSPECTRA_PACKED_HPP_
#define HADSPECTRA_PACKED_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <algorithm>
#include <vector>

#include "hadspectra/dense.hpp"

namespace hadspectra
{

/// Square {+1, -1} matrix, one bit per entry, row-major.
///
/// Bit 1 means -1. Column c of a row sits in word c / 64 at bit c % 64. Padding
/// bits past the last column are always zero.
class PackedSignMatrix
{
public:
  PackedSignMatrix() = default;
  /// All entries +1.
  explicit PackedSignMatrix(std::size_t order);

  static PackedSignMatrix from_dense(const IntMatrix & m);

  std::size_t order() const noexcept { return order_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  std::span<std::uint64_t> row(std::size_t r)
  {
    return {bits_.data() + r * stride_, stride_};
  }
  std::span<const std::uint64_t> row(std::size_t r) const
  {
    return {bits_.data() + r * stride_, stride_};
  }

  bool is_negative(std::size_t r, std::size_t c) const
  {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  int entry(std::size_t r, std::size_t c) const { return is_negative(r, c) ? -1 : 1; }
  void set_negative(std::size_t r, std::size_t c, bool negative);
  void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  /// Mask of the valid bits in the last word of each row.
  std::uint64_t tail_mask() const noexcept;

  void negate_row(std::size_t r);
  PackedSignMatrix negated() const;
  PackedSignMatrix transpose() const;
  IntMatrix to_dense() const;

  friend bool operator==(const PackedSignMatrix &, const PackedSignMatrix &) = default;

private:
  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Copies len bits from src (starting at bit src_off) into dst at bit dst_off.
void copy_bits(
  std::span<std::uint64_t> dst, std::size_t dst_off, std::span<const std::uint64_t> src,
  std::size_t src_off, std::size_t len);

/// Number of worker threads to use given a user request (0 = hardware).
unsigned resolve_threads(unsigned requested);

/// Runs fn(begin, end) over contiguous row ranges covering [0, rows).
/// Ranges depend only on rows and threads, so results merged per range are
/// deterministic.
template <class Fn>
void parallel_rows(std::size_t rows, unsigned threads, Fn && fn)
{
  threads = resolve_threads(threads);
  if (threads <= 1 || rows < 2 * threads) {
    fn(std::size_t{0}, rows);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (rows + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(rows, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto & th : pool) th.join();
}

}  // namespace hadspectra

#endif  // HADSPECTRA_PACKED_HPP_
