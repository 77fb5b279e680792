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

#include "hadspectra/dense.hpp"

#include <gmp.h>

#include <string>
#include <vector>

namespace hadspectra
{

namespace
{

// acc += a * b without temporaries.
inline void addmul(BigInt & acc, const BigInt & a, const BigInt & b)
{
  mpz_addmul(acc.backend().data(), a.backend().data(), b.backend().data());
}

}  // namespace

IntPoly charpoly_exact(const BigMatrix & m)
{
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("charpoly_exact: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  if (n > kDenseOracleCap) {
    throw SizeCap("charpoly_exact: order " + std::to_string(n) + " exceeds 128");
  }
  if (n == 0) return IntPoly{1};

  // c holds the characteristic polynomial of the leading r x r block,
  // highest degree first.
  std::vector<BigInt> c{BigInt(1), BigInt(-m(0, 0))};
  std::vector<BigInt> w, next;
  for (Eigen::Index r = 1; r < n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S.
    std::vector<BigInt> q(ur + 2);
    q[0] = 1;
    q[1] = -m(r, r);
    w.assign(ur, BigInt(0));
    for (Eigen::Index i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = m(i, r);
    for (std::size_t k = 0; k < ur; ++k) {
      BigInt dot = 0;
      for (Eigen::Index j = 0; j < r; ++j) addmul(dot, m(r, j), w[static_cast<std::size_t>(j)]);
      q[k + 2] = -dot;
      if (k + 1 == ur) break;
      next.assign(ur, BigInt(0));
      for (Eigen::Index i = 0; i < r; ++i) {
        BigInt & acc = next[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < r; ++j) {
          if (m(i, j) != 0) addmul(acc, m(i, j), w[static_cast<std::size_t>(j)]);
        }
      }
      w.swap(next);
    }
    std::vector<BigInt> updated(ur + 2);
    for (std::size_t i = 0; i < ur + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, ur); ++j) addmul(updated[i], q[i - j], c[j]);
    }
    c.swap(updated);
  }
  std::vector<BigInt> ascending(c.rbegin(), c.rend());
  return IntPoly(std::move(ascending));
}

BigMatrix poly_eval(const IntPoly & p, const BigMatrix & m)
{
  const Eigen::Index n = m.rows();
  BigMatrix acc = BigMatrix::Zero(n, n);
  const auto & cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    BigMatrix prod = acc * m;
    for (Eigen::Index i = 0; i < n; ++i) prod(i, i) += *it;
    acc = std::move(prod);
  }
  return acc;
}

BigMatrix matrix_power(const BigMatrix & m, std::uint64_t e)
{
  BigMatrix result = BigMatrix::Identity(m.rows(), m.cols());
  BigMatrix base = m;
  while (e) {
    if (e & 1u) result = (result * base).eval();
    e >>= 1;
    if (e) base = (base * base).eval();
  }
  return result;
}

}  // namespace hadspectra
