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

#include "hadspectra/cyclopoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

IntPoly::IntPoly(std::initializer_list<long long> coeffs)
{
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt & c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt & c)
{
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t m, const BigInt & c)
{
  std::vector<BigInt> v(m + 1);
  v[m] += 1;
  v[0] -= c;
  return IntPoly(std::move(v));
}

void IntPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt & x) const
{
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPoly & IntPoly::operator+=(const IntPoly & rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly & IntPoly::operator-=(const IntPoly & rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly & IntPoly::operator*=(const IntPoly & rhs)
{
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // Skip zero coefficients on either side: the binomials and cyclotomics
  // multiplied here are mostly sparse.
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
    if (rhs.coeffs_[j] != 0) nz.push_back(j);
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j : nz) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const
{
  IntPoly r = *this;
  for (auto & c : r.coeffs_) c = -c;
  return r;
}

std::string IntPoly::to_string() const
{
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt & c = coeffs_[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (idx == 0 || mag != 1) s += mag.str();
    if (idx >= 1) s += "x";
    if (idx >= 2) s += "^" + std::to_string(idx);
  }
  return s;
}

std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly & f, const IntPoly & g)
{
  if (g.is_zero()) {
    throw DivisionByZero("poly_divrem: division by the zero polynomial");
  }
  if (f.degree() < g.degree()) return {IntPoly{}, f};

  const auto & gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const BigInt & lead = gc.back();
  std::vector<std::size_t> nz;  // nonzero positions of g below the leading term
  for (std::size_t j = 0; j < dg; ++j) {
    if (gc[j] != 0) nz.push_back(j);
  }

  std::vector<BigInt> rem = f.coeffs();
  std::vector<BigInt> quot(rem.size() - dg);
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    BigInt q = rem[i];
    if (lead != 1) {
      if (rem[i] % lead != 0) {
        throw NonExactDivision("poly_divrem: quotient coefficient is not an integer");
      }
      q = rem[i] / lead;
    }
    const std::size_t shift = i - dg;
    quot[shift] = q;
    rem[i] = 0;
    for (std::size_t j : nz) rem[shift + j] -= q * gc[j];
  }
  rem.resize(dg);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::vector<std::uint64_t> divisors(std::uint64_t k)
{
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d * d != k) large.push_back(k / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t k)
{
  std::uint64_t result = k;
  std::uint64_t m = k;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace
{

constexpr std::uint64_t kMaxCyclotomicIndex = std::uint64_t{1} << 20;
constexpr std::uint64_t kCacheLimit = 4096;

std::mutex cache_mutex;
std::map<std::uint64_t, IntPoly> & cache()
{
  static std::map<std::uint64_t, IntPoly> c;
  return c;
}

IntPoly cyclotomic_uncached(std::uint64_t k, std::map<std::uint64_t, IntPoly> & local)
{
  IntPoly f = IntPoly::binomial(k, 1);
  for (std::uint64_t d : divisors(k)) {
    if (d == k) break;
    auto it = local.find(d);
    if (it == local.end()) {
      it = local.emplace(d, cyclotomic_uncached(d, local)).first;
    }
    auto [q, r] = poly_divrem(f, it->second);
    f = std::move(q);
  }
  return f;
}

}  // namespace

IntPoly cyclotomic_poly(std::uint64_t k)
{
  if (k < 1 || k > kMaxCyclotomicIndex) {
    throw OutOfRange("cyclotomic_poly: index must lie in 1..2^20");
  }
  if (k <= kCacheLimit) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto & c = cache();
    auto it = c.find(k);
    if (it != c.end()) return it->second;
    std::map<std::uint64_t, IntPoly> local;
    IntPoly p = cyclotomic_uncached(k, local);
    for (auto & [d, q] : local) c.emplace(d, std::move(q));
    c.emplace(k, p);
    return p;
  }
  std::map<std::uint64_t, IntPoly> local;
  return cyclotomic_uncached(k, local);
}

IntPoly product_of_cyclotomics(const std::set<std::uint64_t> & indices)
{
  IntPoly p{1};
  for (std::uint64_t d : indices) p *= cyclotomic_poly(d);
  return p;
}

std::set<std::uint64_t> binomial_cyclotomic_factors(std::uint64_t m, int sign)
{
  std::set<std::uint64_t> out;
  if (sign > 0) {
    for (std::uint64_t d : divisors(m)) out.insert(d);
  } else {
    for (std::uint64_t d : divisors(2 * m)) {
      if (m % d != 0) out.insert(d);
    }
  }
  return out;
}

CycElt::CycElt(std::uint64_t k) : k_(k), coeffs_(k)
{
  if (k == 0) throw OutOfRange("CycElt: root order must be positive");
}

CycElt::CycElt(std::uint64_t k, std::vector<BigInt> coeffs) : k_(k), coeffs_(std::move(coeffs))
{
  if (k == 0 || coeffs_.size() != k) {
    throw DimensionMismatch("CycElt: need exactly k coefficients");
  }
}

void CycElt::add(long long e, const BigInt & c)
{
  const auto k = static_cast<long long>(k_);
  const auto idx = static_cast<std::size_t>(((e % k) + k) % k);
  coeffs_[idx] += c;
}

bool cyc_is_zero(const CycElt & c)
{
  IntPoly p(c.coeffs());
  if (p.is_zero()) return true;
  return poly_divrem(p, cyclotomic_poly(c.order())).second.is_zero();
}

}  // namespace hadspectra
