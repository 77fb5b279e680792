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

#include "hadspectra/sylvester.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <string>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

namespace
{

// parity(lo & b) for b = 0..63, one word per 6-bit value of lo.
const std::array<std::uint64_t, 64> & low_patterns()
{
  static const std::array<std::uint64_t, 64> table = [] {
    std::array<std::uint64_t, 64> t{};
    for (unsigned lo = 0; lo < 64; ++lo) {
      for (unsigned b = 0; b < 64; ++b) {
        if (std::popcount(lo & b) & 1) t[lo] |= std::uint64_t{1} << b;
      }
    }
    return t;
  }();
  return table;
}

std::size_t checked_order(int n)
{
  if (n < 1 || n > kMaxMaterializedSylvester) {
    throw OutOfRange("sylvester: n must lie in 1..15, got " + std::to_string(n));
  }
  return std::size_t{1} << n;
}

// Aggregated outcome of comparing rows of P S Q^T against rows of S.
struct RowAgreement
{
  bool all_equal = true;
  bool all_negated = true;

  void merge(const RowAgreement & o)
  {
    all_equal = all_equal && o.all_equal;
    all_negated = all_negated && o.all_negated;
  }
};

void compare_row(
  std::span<const std::uint64_t> got, std::span<const std::uint64_t> want, std::uint64_t tail,
  RowAgreement & acc)
{
  const std::size_t last = got.size() - 1;
  for (std::size_t w = 0; w < got.size() && (acc.all_equal || acc.all_negated); ++w) {
    const std::uint64_t mask = w == last ? tail : ~std::uint64_t{0};
    if ((got[w] ^ want[w]) & mask) acc.all_equal = false;
    if ((got[w] ^ ~want[w]) & mask) acc.all_negated = false;
  }
}

int agreement_sign(const RowAgreement & a)
{
  if (a.all_equal) return 1;
  if (a.all_negated) return -1;
  throw NotScalarAction("P S Q^T is neither S nor -S");
}

}  // namespace

void sylvester_row(int n, std::uint64_t a, std::span<std::uint64_t> out)
{
  if (n < 1 || n > 31) {
    throw OutOfRange("sylvester_row: n must lie in 1..31");
  }
  const std::uint64_t order = std::uint64_t{1} << n;
  if (order < 64) {
    std::uint64_t word = 0;
    for (std::uint64_t b = 0; b < order; ++b) {
      if (std::popcount(a & b) & 1) word |= std::uint64_t{1} << b;
    }
    out[0] = word;
    return;
  }
  const std::uint64_t pattern = low_patterns()[a & 63u];
  const std::uint64_t high = a & ~std::uint64_t{63};
  for (std::uint64_t w = 0; w < order / 64; ++w) {
    const bool flip = std::popcount(high & (w << 6)) & 1;
    out[w] = flip ? ~pattern : pattern;
  }
}

PackedSignMatrix sylvester(int n)
{
  const std::size_t order = checked_order(n);
  PackedSignMatrix s(order);
  for (std::size_t a = 0; a < order; ++a) sylvester_row(n, a, s.row(a));
  return s;
}

GroupElt GroupElt::identity(int n) { return {Vec2(n), Vec2(n), Mat2::identity(n)}; }

GroupElt group_mul(const GroupElt & g1, const GroupElt & g2)
{
  if (g1.dim() != g2.dim()) {
    throw DimensionMismatch("group_mul: dimensions differ");
  }
  const Mat2 inv_t = mat2_inverse(g1.L).transpose();
  return {g1.u + mat2_mul(inv_t, g2.u), g1.v + mat2_mul(g1.L, g2.v), mat2_mul(g1.L, g2.L)};
}

GroupElt group_inverse(const GroupElt & g)
{
  const Mat2 inv = mat2_inverse(g.L);
  return {mat2_mul(g.L.transpose(), g.u), mat2_mul(inv, g.v), inv};
}

MonomialMatrix rho(const Mat2 & L)
{
  const int n = L.dim();
  const std::size_t order = std::size_t{1} << n;
  const AffineMap map(L, Vec2(n));
  std::vector<std::uint32_t> dest(order), scale(order, 0);
  for (std::size_t a = 0; a < order; ++a) dest[a] = static_cast<std::uint32_t>(map(a));
  return MonomialMatrix(std::move(dest), std::move(scale), 2);
}

MonomialMatrix translation(const Vec2 & v)
{
  const std::size_t order = std::size_t{1} << v.dim();
  std::vector<std::uint32_t> dest(order), scale(order, 0);
  for (std::size_t c = 0; c < order; ++c) dest[c] = static_cast<std::uint32_t>(c ^ v.bits());
  return MonomialMatrix(std::move(dest), std::move(scale), 2);
}

MonomialMatrix diag_sign(const Vec2 & v)
{
  const std::size_t order = std::size_t{1} << v.dim();
  std::vector<std::uint32_t> dest(order), scale(order);
  for (std::size_t c = 0; c < order; ++c) {
    dest[c] = static_cast<std::uint32_t>(c);
    scale[c] = static_cast<std::uint32_t>(std::popcount(c & v.bits()) & 1);
  }
  return MonomialMatrix(std::move(dest), std::move(scale), 2);
}

MonomialPair psi(const GroupElt & g)
{
  const int n = g.dim();
  if (g.u.dim() != n || g.v.dim() != n) {
    throw DimensionMismatch("psi: component dimensions differ");
  }
  const std::size_t order = std::size_t{1} << n;
  const Mat2 inv_t = mat2_inverse(g.L).transpose();
  const AffineMap lin(g.L, Vec2(n));
  const AffineMap dual(inv_t, Vec2(n));
  std::vector<std::uint32_t> pd(order), ps(order), qd(order), qs(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::uint64_t la = lin(x);
    pd[x] = static_cast<std::uint32_t>(la ^ g.v.bits());
    ps[x] = static_cast<std::uint32_t>(std::popcount(la & g.u.bits()) & 1);
    const std::uint64_t lb = dual(x);
    qd[x] = static_cast<std::uint32_t>(lb ^ g.u.bits());
    qs[x] = static_cast<std::uint32_t>(std::popcount(lb & g.v.bits()) & 1);
  }
  return {MonomialMatrix(std::move(pd), std::move(ps), 2), MonomialMatrix(std::move(qd), std::move(qs), 2)};
}

int apply_pair(const MonomialMatrix & P, const MonomialMatrix & Q, const PackedSignMatrix & s, unsigned threads)
{
  if (P.size() != s.order() || Q.size() != s.order()) {
    throw DimensionMismatch("apply_pair: sizes differ");
  }
  const PackedSignMatrix ps = mono_apply_left(P, s, threads);
  const ColumnGather gather(Q);
  RowAgreement total;
  std::mutex m;
  parallel_rows(s.order(), threads, [&](std::size_t begin, std::size_t end) {
    RowAgreement local;
    std::vector<std::uint64_t> buf(s.words_per_row());
    for (std::size_t r = begin; r < end && (local.all_equal || local.all_negated); ++r) {
      gather.apply(ps.row(r), buf);
      compare_row(buf, s.row(r), s.tail_mask(), local);
    }
    std::lock_guard<std::mutex> lock(m);
    total.merge(local);
  });
  return agreement_sign(total);
}

int apply_pair_sylvester(const MonomialMatrix & P, const MonomialMatrix & Q, int n, unsigned threads)
{
  if (n < 1 || n > 31) {
    throw OutOfRange("apply_pair_sylvester: n must lie in 1..31");
  }
  const std::size_t order = std::size_t{1} << n;
  if (P.size() != order || Q.size() != order) {
    throw DimensionMismatch("apply_pair_sylvester: sizes differ");
  }
  if (P.root_order() > 2) {
    throw UnsupportedRootOrder("apply_pair_sylvester: P must be a signed permutation");
  }
  const ColumnGather gather(Q);
  const std::size_t words = (order + 63) / 64;
  const std::uint64_t tail = order % 64 ? (std::uint64_t{1} << (order % 64)) - 1 : ~std::uint64_t{0};
  RowAgreement total;
  std::mutex m;
  // Row c of S lands in row dest(c) of P S, then columns move by Q.
  parallel_rows(order, threads, [&](std::size_t begin, std::size_t end) {
    RowAgreement local;
    std::vector<std::uint64_t> src(words), moved(words), want(words);
    for (std::size_t c = begin; c < end && (local.all_equal || local.all_negated); ++c) {
      sylvester_row(n, c, src);
      gather.apply(src, moved);
      if (P.root_order() == 2 && P.scale(c) == 1) {
        for (auto & w : moved) w = ~w;
      }
      sylvester_row(n, P.dest(c), want);
      compare_row(moved, want, tail, local);
    }
    std::lock_guard<std::mutex> lock(m);
    total.merge(local);
  });
  return agreement_sign(total);
}

MonomialMatrix pq_product(const GroupElt & g)
{
  const MonomialPair pq = psi(g);
  return mono_compose(pq.P, pq.Q);
}

MonomialMatrix pq_closed_form(const GroupElt & g)
{
  const Mat2 inv_t = mat2_inverse(g.L).transpose();
  const Vec2 diag = g.u + mat2_mul(inv_t, g.v);
  const Vec2 shift = g.v + mat2_mul(g.L, g.u);
  return mono_compose(mono_compose(diag_sign(diag), translation(shift)), rho(mat2_mul(g.L, inv_t)));
}

std::optional<int> relative_sign(const MonomialMatrix & lhs, const MonomialMatrix & rhs)
{
  if (lhs == rhs) return 1;
  if (lhs.size() == rhs.size() && lhs.root_order() == rhs.root_order() && lhs == rhs.negated()) {
    return -1;
  }
  return std::nullopt;
}

}  // namespace hadspectra
