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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "reference_t3.hpp"
#include "hadspectra/butson.hpp"
#include "hadspectra/dense.hpp"
#include "hadspectra/errors.hpp"
#include "hadspectra/monomial.hpp"
#include "hadspectra/sylvester.hpp"
#include "oracle.hpp"

using namespace hadspectra;

namespace
{

IntMatrix from_oracle(const oracle::Dense & d)
{
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) m(i, j) = d[i][j];
  }
  return m;
}

IntMatrix from_reference(const ref3::Matrix8 & ref)
{
  IntMatrix m(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) m(i, j) = ref[i][j];
  }
  return m;
}

MonomialMatrix random_signed(std::size_t n, std::mt19937_64 & rng)
{
  return MonomialMatrix::from_dense(from_oracle(oracle::random_signed_permutation(n, rng)));
}

// Cycle (0 1 2 3) with the last step carrying -1.
MonomialMatrix four_cycle_minus()
{
  return MonomialMatrix({1, 2, 3, 0}, {0, 0, 0, 1}, 2);
}

}  // namespace

TEST(Monomial, ConstructionValidatesPermutation)
{
  EXPECT_THROW(MonomialMatrix({0, 0}, {0, 0}, 2), InvalidInput);
  EXPECT_THROW(MonomialMatrix({0, 1}, {0}, 2), DimensionMismatch);
  const MonomialMatrix m({1, 0}, {3, 0}, 2);
  EXPECT_EQ(m.scale(0), 1u);
}

TEST(Monomial, DenseRoundTrip)
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const oracle::Dense d = oracle::random_signed_permutation(1 + rng() % 12, rng);
    const MonomialMatrix m = MonomialMatrix::from_dense(from_oracle(d));
    EXPECT_EQ(m.to_dense(), from_oracle(d));
  }
}

TEST(Monomial, ComposeMatchesDenseProduct)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const MonomialMatrix a = random_signed(n, rng);
    const MonomialMatrix b = random_signed(n, rng);
    EXPECT_EQ(mono_compose(a, b).to_dense(), a.to_dense() * b.to_dense());
  }
}

TEST(Monomial, ComposeExamples)
{
  std::mt19937_64 rng(3);
  const MonomialMatrix m = random_signed(8, rng);
  EXPECT_EQ(mono_compose(MonomialMatrix::identity(8), m), m);
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const MonomialMatrix t = translation(Vec2(3, bits));
    EXPECT_EQ(mono_compose(t, t), MonomialMatrix::identity(8));
  }
  // D_a T_b and T_b D_a differ by (-1)^<a,b>.
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      const Vec2 va(2, a), vb(2, b);
      const MonomialMatrix dt = mono_compose(diag_sign(va), translation(vb));
      const MonomialMatrix td = mono_compose(translation(vb), diag_sign(va));
      EXPECT_EQ(relative_sign(dt, td), gf2_inner(va, vb) ? -1 : 1);
    }
  }
}

TEST(Monomial, ComposeIsAssociative)
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const MonomialMatrix a = random_signed(n, rng), b = random_signed(n, rng), c = random_signed(n, rng);
    EXPECT_EQ(mono_compose(mono_compose(a, b), c), mono_compose(a, mono_compose(b, c)));
  }
}

TEST(Monomial, ComposeRescalesRootOrders)
{
  const MonomialMatrix a({1, 0}, {1, 0}, 2);
  const MonomialMatrix b({0, 1}, {1, 2}, 3);
  const MonomialMatrix c = mono_compose(a, b);
  EXPECT_EQ(c.root_order(), 6u);
  // a scales column 0 by -1 = zeta_6^3, b scales column 0 by zeta_3 = zeta_6^2.
  EXPECT_EQ(c.dest(0), 1u);
  EXPECT_EQ(c.scale(0), 5u);
  EXPECT_EQ(c.dest(1), 0u);
  EXPECT_EQ(c.scale(1), 4u);
}

TEST(Monomial, PowerExamples)
{
  std::mt19937_64 rng(12);
  const MonomialMatrix m = random_signed(7, rng);
  EXPECT_EQ(mono_power(m, 0), MonomialMatrix::identity(7));
  EXPECT_EQ(mono_power(four_cycle_minus(), 4), MonomialMatrix::identity(4).negated());
  EXPECT_EQ(mono_compose(mono_power(m, -3), mono_power(m, 3)), MonomialMatrix::identity(7));

  const MonomialMatrix pq = MonomialMatrix::from_dense(from_reference(ref3::kPQ));
  EXPECT_EQ(mono_power(pq, 4), MonomialMatrix::identity(8).negated());
}

TEST(Monomial, PowerMatchesRepeatedComposition)
{
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const MonomialMatrix m = random_signed(1 + rng() % 16, rng);
    MonomialMatrix acc = MonomialMatrix::identity(m.size());
    for (int j = 0; j <= 12; ++j) {
      EXPECT_EQ(mono_power(m, j), acc);
      acc = mono_compose(acc, m);
    }
  }
}

TEST(Monomial, OrderAnnihilates)
{
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialMatrix m = random_signed(1 + rng() % 16, rng);
    const std::uint64_t ord = mono_order(m);
    EXPECT_EQ(mono_power(m, static_cast<long long>(ord)), MonomialMatrix::identity(m.size()));
    for (std::uint64_t d = 1; d < ord; ++d) {
      if (ord % d == 0) EXPECT_NE(mono_power(m, static_cast<long long>(d)), MonomialMatrix::identity(m.size()));
    }
  }
}

TEST(Monomial, CycleExamples)
{
  const CycleSpectrum id = mono_cycles(MonomialMatrix::identity(3));
  ASSERT_EQ(id.cycles.size(), 3u);
  for (const Cycle & c : id.cycles) {
    EXPECT_EQ(c.length(), 1u);
    EXPECT_EQ(c.exponent, 0u);
  }

  const CycleSpectrum pq = mono_cycles(MonomialMatrix::from_dense(from_reference(ref3::kPQ)));
  ASSERT_EQ(pq.cycles.size(), 2u);
  EXPECT_EQ(pq.cycles[0].members, (std::vector<std::uint32_t>{0, 1, 2, 7}));
  EXPECT_EQ(pq.cycles[1].members, (std::vector<std::uint32_t>{3, 4, 5, 6}));
  for (const Cycle & c : pq.cycles) EXPECT_EQ(c.exponent, 1u);
}

TEST(Monomial, CyclesPartitionAndReproduceDest)
{
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialMatrix m = random_signed(1 + rng() % 16, rng);
    const CycleSpectrum s = mono_cycles(m);
    std::size_t total = 0;
    std::vector<std::uint32_t> dest(m.size());
    for (const Cycle & c : s.cycles) {
      total += c.length();
      std::uint32_t e = 0;
      for (std::size_t i = 0; i < c.length(); ++i) {
        dest[c.members[i]] = c.members[(i + 1) % c.length()];
        e = (e + m.scale(c.members[i])) % 2;
      }
      EXPECT_EQ(e, c.exponent);
    }
    EXPECT_EQ(total, m.size());
    EXPECT_EQ(dest, m.dest());
  }
}

TEST(Monomial, CharpolyExamples)
{
  // Cycles of lengths 2 and 3.
  const MonomialMatrix m({1, 0, 3, 4, 2}, {0, 0, 0, 0, 0}, 2);
  EXPECT_EQ(mono_charpoly(m), IntPoly({-1, 0, 1}) * IntPoly({-1, 0, 0, 1}));
  EXPECT_EQ(mono_minpoly(m), IntPoly({-1, 1}) * IntPoly({1, 1}) * IntPoly({1, 1, 1}));

  const MonomialMatrix pq = MonomialMatrix::from_dense(from_reference(ref3::kPQ));
  EXPECT_EQ(mono_charpoly(pq), IntPoly({1, 0, 0, 0, 1}) * IntPoly({1, 0, 0, 0, 1}));
  EXPECT_EQ(mono_minpoly(pq), IntPoly({1, 0, 0, 0, 1}));

  EXPECT_EQ(mono_charpoly(MonomialMatrix::identity(2).negated()), IntPoly({1, 2, 1}));
  EXPECT_EQ(mono_minpoly(four_cycle_minus()), cyclotomic_poly(8));
}

TEST(Monomial, CharpolyUnsupportedAboveSigns)
{
  EXPECT_THROW(mono_charpoly(MonomialMatrix::identity(3, 4)), UnsupportedRootOrder);
  EXPECT_THROW(mono_minpoly(MonomialMatrix::identity(3, 3)), UnsupportedRootOrder);
}

TEST(Monomial, SpectraAgreeWithDenseOracle)
{
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const oracle::Dense d = oracle::random_signed_permutation(n, rng);
    const MonomialMatrix m = MonomialMatrix::from_dense(from_oracle(d));
    const IntPoly chi = mono_charpoly(m);
    const std::vector<std::uint64_t> ref = oracle::charpoly_mod_p(d, 1000000007ull);
    EXPECT_EQ(oracle::reduce_mod_p(chi, n + 1, 1000000007ull), ref) << "trial " << trial;
    EXPECT_EQ(chi, charpoly_exact(from_oracle(d)));

    const IntPoly mu = mono_minpoly(m);
    auto [q, r] = poly_divrem(chi, mu);
    EXPECT_TRUE(r.is_zero());
    EXPECT_TRUE(is_scalar_matrix(poly_eval(mu, to_big(from_oracle(d))), BigInt(0)));
  }
}

TEST(Monomial, MinpolyIsMinimal)
{
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const MonomialMatrix m = random_signed(n, rng);
    const IntPoly mu = mono_minpoly(m);
    const BigMatrix dm = to_big(m.to_dense());
    // Removing any one cyclotomic factor must stop annihilating.
    for (std::uint64_t d = 1; d <= 2 * n; ++d) {
      auto [q, r] = poly_divrem(mu, cyclotomic_poly(d));
      if (!r.is_zero()) continue;
      EXPECT_FALSE(is_scalar_matrix(poly_eval(q, dm), BigInt(0))) << "trial " << trial << ", d = " << d;
    }
  }
}

TEST(Monomial, ApplyLeftExamples)
{
  const PackedSignMatrix s = sylvester(3);
  EXPECT_EQ(mono_apply_left(MonomialMatrix::identity(8), s), s);
  EXPECT_EQ(mono_apply_left(MonomialMatrix::identity(8).negated(), s), s.negated());

  const MonomialMatrix p = mono_compose(mono_compose(diag_sign(Vec2::from_coords({0, 1, 1})),
                                                     translation(Vec2::from_coords({1, 1, 1}))),
                                        rho(build_A(3)));
  EXPECT_TRUE(ref3::equals(mono_apply_left(p, s).to_dense(), ref3::kPS3));
}

TEST(Monomial, ApplyMatchesDenseProducts)
{
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 7; ++n) {
    const PackedSignMatrix s = sylvester(n);
    const MonomialMatrix m = random_signed(s.order(), rng);
    for (unsigned threads : {1u, 3u}) {
      EXPECT_EQ(mono_apply_left(m, s, threads).to_dense(), m.to_dense() * s.to_dense());
      EXPECT_EQ(mono_apply_right_transposed(s, m, threads).to_dense(), s.to_dense() * m.to_dense().transpose());
    }
  }
}

TEST(Monomial, ApplyRejectsComplexScalars)
{
  EXPECT_THROW(mono_apply_left(MonomialMatrix::identity(2, 4), sylvester(1)), UnsupportedRootOrder);
}
