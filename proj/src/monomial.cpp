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

#include "hadspectra/monomial.hpp"

#include <numeric>
#include <set>
#include <string>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

namespace
{

void require_signed(const MonomialMatrix & m, const char * what)
{
  if (m.root_order() > 2) {
    throw UnsupportedRootOrder(
      std::string(what) + ": needs scalars in {+1,-1}, got root order " +
      std::to_string(m.root_order()));
  }
}

bool is_negative_scalar(const MonomialMatrix & m, std::size_t c)
{
  return m.root_order() == 2 && m.scale(c) == 1;
}

}  // namespace

MonomialMatrix::MonomialMatrix(std::size_t size, std::uint32_t k)
: k_(k), dest_(size), scale_(size, 0)
{
  if (k == 0) throw OutOfRange("MonomialMatrix: root order must be positive");
  std::iota(dest_.begin(), dest_.end(), 0u);
}

MonomialMatrix::MonomialMatrix(
  std::vector<std::uint32_t> dest, std::vector<std::uint32_t> scale, std::uint32_t k)
: k_(k), dest_(std::move(dest)), scale_(std::move(scale))
{
  if (k == 0) throw OutOfRange("MonomialMatrix: root order must be positive");
  if (dest_.size() != scale_.size()) {
    throw DimensionMismatch("MonomialMatrix: dest and scale lengths differ");
  }
  std::vector<bool> seen(dest_.size(), false);
  for (auto r : dest_) {
    if (r >= dest_.size() || seen[r]) {
      throw InvalidInput("MonomialMatrix: dest is not a permutation");
    }
    seen[r] = true;
  }
  for (auto & s : scale_) s %= k_;
}

MonomialMatrix MonomialMatrix::scalar(std::size_t size, std::uint32_t k, std::uint32_t e)
{
  MonomialMatrix m(size, k);
  for (auto & s : m.scale_) s = e % k;
  return m;
}

MonomialMatrix MonomialMatrix::from_dense(const IntMatrix & m)
{
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("MonomialMatrix::from_dense: matrix must be square");
  }
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::uint32_t> dest(n), scale(n);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    int found = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const auto v = m(r, c);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || ++found > 1) {
        throw InvalidInput("MonomialMatrix::from_dense: not a signed permutation matrix");
      }
      dest[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(r);
      scale[static_cast<std::size_t>(c)] = v == -1 ? 1u : 0u;
    }
    if (found != 1) {
      throw InvalidInput("MonomialMatrix::from_dense: column without a nonzero entry");
    }
  }
  return MonomialMatrix(std::move(dest), std::move(scale), 2);
}

MonomialMatrix MonomialMatrix::with_root_order(std::uint32_t k_new) const
{
  if (k_new == 0 || k_new % k_ != 0) {
    throw BadRootOrder("MonomialMatrix: new root order must be a multiple of the old one");
  }
  MonomialMatrix m = *this;
  const std::uint32_t f = k_new / k_;
  m.k_ = k_new;
  for (auto & s : m.scale_) s *= f;
  return m;
}

MonomialMatrix MonomialMatrix::negated() const
{
  MonomialMatrix m = (k_ % 2 == 0) ? *this : with_root_order(2 * k_);
  for (auto & s : m.scale_) s = (s + m.k_ / 2) % m.k_;
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const
{
  std::vector<std::uint32_t> dest(size()), scale(size());
  for (std::size_t c = 0; c < size(); ++c) {
    dest[dest_[c]] = static_cast<std::uint32_t>(c);
    scale[dest_[c]] = (k_ - scale_[c]) % k_;
  }
  return MonomialMatrix(std::move(dest), std::move(scale), k_);
}

IntMatrix MonomialMatrix::to_dense() const
{
  require_signed(*this, "MonomialMatrix::to_dense");
  const auto n = static_cast<Eigen::Index>(size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (std::size_t c = 0; c < size(); ++c) {
    m(static_cast<Eigen::Index>(dest_[c]), static_cast<Eigen::Index>(c)) =
      is_negative_scalar(*this, c) ? -1 : 1;
  }
  return m;
}

MonomialMatrix mono_compose(const MonomialMatrix & lhs, const MonomialMatrix & rhs)
{
  if (lhs.size() != rhs.size()) {
    throw DimensionMismatch("mono_compose: sizes differ");
  }
  const std::uint32_t k = std::lcm(lhs.root_order(), rhs.root_order());
  const MonomialMatrix a = lhs.with_root_order(k);
  const MonomialMatrix b = rhs.with_root_order(k);
  std::vector<std::uint32_t> dest(a.size()), scale(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    const std::uint32_t mid = b.dest(c);
    dest[c] = a.dest(mid);
    scale[c] = (a.scale(mid) + b.scale(c)) % k;
  }
  return MonomialMatrix(std::move(dest), std::move(scale), k);
}

MonomialMatrix mono_power(const MonomialMatrix & m, long long j)
{
  if (j < 0) return mono_power(m.inverse(), -j);
  const std::uint32_t k = m.root_order();
  std::vector<std::uint32_t> dest(m.size()), scale(m.size());
  // Walk each cycle once; prefix sums of the exponents give every column's
  // image after j steps.
  for (const Cycle & cyc : mono_cycles(m).cycles) {
    const std::size_t len = cyc.length();
    std::vector<std::uint64_t> prefix(2 * len + 1, 0);
    for (std::size_t i = 0; i < 2 * len; ++i) {
      prefix[i + 1] = prefix[i] + m.scale(cyc.members[i % len]);
    }
    const auto ju = static_cast<std::uint64_t>(j);
    const std::uint64_t laps = ju / len;
    const std::uint64_t rest = ju % len;
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint32_t c = cyc.members[i];
      dest[c] = cyc.members[(i + rest) % len];
      const std::uint64_t partial = prefix[i + rest] - prefix[i];
      scale[c] = static_cast<std::uint32_t>(((laps % k) * cyc.exponent + partial) % k);
    }
  }
  return MonomialMatrix(std::move(dest), std::move(scale), k);
}

CycleSpectrum mono_cycles(const MonomialMatrix & m)
{
  CycleSpectrum spec;
  spec.root_order = m.root_order();
  std::vector<bool> seen(m.size(), false);
  for (std::size_t start = 0; start < m.size(); ++start) {
    if (seen[start]) continue;
    Cycle cyc;
    std::uint64_t sum = 0;
    std::size_t c = start;
    while (!seen[c]) {
      seen[c] = true;
      cyc.members.push_back(static_cast<std::uint32_t>(c));
      sum += m.scale(c);
      c = m.dest(c);
    }
    cyc.exponent = static_cast<std::uint32_t>(sum % m.root_order());
    spec.cycles.push_back(std::move(cyc));
  }
  return spec;
}

std::uint64_t mono_order(const MonomialMatrix & m)
{
  std::uint64_t order = 1;
  const std::uint64_t k = m.root_order();
  for (const Cycle & cyc : mono_cycles(m).cycles) {
    const std::uint64_t scalar_order = k / std::gcd<std::uint64_t>(cyc.exponent, k);
    order = std::lcm(order, cyc.length() * scalar_order);
  }
  return order;
}

IntPoly mono_charpoly(const MonomialMatrix & m)
{
  require_signed(m, "mono_charpoly");
  IntPoly p{1};
  for (const Cycle & cyc : mono_cycles(m).cycles) {
    const BigInt c = (m.root_order() == 2 && cyc.exponent == 1) ? -1 : 1;
    p *= IntPoly::binomial(cyc.length(), c);
  }
  return p;
}

IntPoly mono_minpoly(const MonomialMatrix & m)
{
  require_signed(m, "mono_minpoly");
  std::set<std::uint64_t> factors;
  for (const Cycle & cyc : mono_cycles(m).cycles) {
    const int sign = (m.root_order() == 2 && cyc.exponent == 1) ? -1 : 1;
    factors.merge(binomial_cyclotomic_factors(cyc.length(), sign));
  }
  return product_of_cyclotomics(factors);
}

PackedSignMatrix mono_apply_left(const MonomialMatrix & m, const PackedSignMatrix & s, unsigned threads)
{
  require_signed(m, "mono_apply_left");
  if (m.size() != s.order()) {
    throw DimensionMismatch("mono_apply_left: sizes differ");
  }
  PackedSignMatrix out(s.order());
  parallel_rows(s.order(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const std::size_t r = m.dest(c);
      auto src = s.row(c);
      auto dst = out.row(r);
      std::copy(src.begin(), src.end(), dst.begin());
      if (is_negative_scalar(m, c)) out.negate_row(r);
    }
  });
  return out;
}

ColumnGather::ColumnGather(const MonomialMatrix & q)
: source_(q.size()), mask_((q.size() + 63) / 64, 0)
{
  require_signed(q, "ColumnGather");
  for (std::size_t k = 0; k < q.size(); ++k) {
    const std::uint32_t c = q.dest(k);
    source_[c] = static_cast<std::uint32_t>(k);
    if (is_negative_scalar(q, k)) mask_[c / 64] |= std::uint64_t{1} << (c % 64);
  }
}

void ColumnGather::apply(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const
{
  const std::size_t n = source_.size();
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    std::uint64_t word = 0;
    const std::size_t base = w * 64;
    const std::size_t lim = std::min<std::size_t>(64, n - base);
    for (std::size_t b = 0; b < lim; ++b) {
      const std::uint32_t src = source_[base + b];
      word |= ((in[src / 64] >> (src % 64)) & 1u) << b;
    }
    out[w] = word ^ mask_[w];
  }
}

PackedSignMatrix mono_apply_right_transposed(
  const PackedSignMatrix & s, const MonomialMatrix & q, unsigned threads)
{
  if (q.size() != s.order()) {
    throw DimensionMismatch("mono_apply_right_transposed: sizes differ");
  }
  const ColumnGather gather(q);
  PackedSignMatrix out(s.order());
  parallel_rows(s.order(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) gather.apply(s.row(r), out.row(r));
  });
  return out;
}

}  // namespace hadspectra
