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

#include "hadspectra/packed.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace hadspectra
{

PackedSignMatrix::PackedSignMatrix(std::size_t order)
: order_(order), stride_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0)
{
}

PackedSignMatrix PackedSignMatrix::from_dense(const IntMatrix & m)
{
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("PackedSignMatrix: matrix must be square");
  }
  PackedSignMatrix p(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto v = m(r, c);
      if (v != 1 && v != -1) {
        throw InvalidInput(
          "PackedSignMatrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
          ") is not +1 or -1");
      }
      if (v == -1) p.set_negative(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
    }
  }
  return p;
}

void PackedSignMatrix::set_negative(std::size_t r, std::size_t c, bool negative)
{
  auto & w = bits_[r * stride_ + c / 64];
  const std::uint64_t m = std::uint64_t{1} << (c % 64);
  w = negative ? (w | m) : (w & ~m);
}

std::uint64_t PackedSignMatrix::tail_mask() const noexcept
{
  const std::size_t rem = order_ % 64;
  return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

void PackedSignMatrix::negate_row(std::size_t r)
{
  auto words = row(r);
  for (auto & w : words) w = ~w;
  if (!words.empty()) words.back() &= tail_mask();
}

PackedSignMatrix PackedSignMatrix::negated() const
{
  PackedSignMatrix out = *this;
  for (std::size_t r = 0; r < order_; ++r) out.negate_row(r);
  return out;
}

PackedSignMatrix PackedSignMatrix::transpose() const
{
  PackedSignMatrix t(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) {
      if (is_negative(r, c)) t.set_negative(c, r, true);
    }
  }
  return t;
}

IntMatrix PackedSignMatrix::to_dense() const
{
  const auto n = static_cast<Eigen::Index>(order_);
  IntMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  return m;
}

void copy_bits(
  std::span<std::uint64_t> dst, std::size_t dst_off, std::span<const std::uint64_t> src,
  std::size_t src_off, std::size_t len)
{
  if (dst_off % 64 == 0 && src_off % 64 == 0) {
    const std::size_t full = len / 64;
    std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(src_off / 64), full,
                dst.begin() + static_cast<std::ptrdiff_t>(dst_off / 64));
    dst_off += full * 64;
    src_off += full * 64;
    len -= full * 64;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t s = src_off + i;
    const std::size_t d = dst_off + i;
    const std::uint64_t bit = (src[s / 64] >> (s % 64)) & 1u;
    const std::uint64_t m = std::uint64_t{1} << (d % 64);
    dst[d / 64] = bit ? (dst[d / 64] | m) : (dst[d / 64] & ~m);
  }
}

unsigned resolve_threads(unsigned requested)
{
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hadspectra
