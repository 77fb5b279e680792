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

#include "hadspectra/butson.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <thread>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

ButsonMatrix::ButsonMatrix(std::size_t n, std::uint32_t k) : n_(n), k_(k), exps_(n * n, 0)
{
  if (k == 0) throw OutOfRange("ButsonMatrix: root order must be positive");
}

ButsonMatrix::ButsonMatrix(std::size_t n, std::uint32_t k, std::vector<std::uint32_t> exps)
: n_(n), k_(k), exps_(std::move(exps))
{
  if (k == 0) throw OutOfRange("ButsonMatrix: root order must be positive");
  if (exps_.size() != n * n) {
    throw DimensionMismatch("ButsonMatrix: need n*n exponents");
  }
  for (auto & e : exps_) e %= k_;
}

void ButsonMatrix::set_exp(std::size_t r, std::size_t c, long long e)
{
  const auto k = static_cast<long long>(k_);
  exps_[r * n_ + c] = static_cast<std::uint32_t>(((e % k) + k) % k);
}

ButsonMatrix fourier_matrix(std::uint32_t k)
{
  ButsonMatrix f(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) f.set_exp(r, c, static_cast<long long>((r * c) % k));
  }
  return f;
}

PackedSignMatrix to_packed(const ButsonMatrix & b)
{
  if (b.root_order() > 2) {
    throw UnsupportedRootOrder("to_packed: only root orders 1 and 2 describe real matrices");
  }
  PackedSignMatrix p(b.order());
  for (std::size_t r = 0; r < b.order(); ++r) {
    for (std::size_t c = 0; c < b.order(); ++c) {
      if (b.exp(r, c) == 1) p.set_negative(r, c, true);
    }
  }
  return p;
}

ButsonMatrix from_packed(const PackedSignMatrix & h)
{
  ButsonMatrix b(h.order(), 2);
  for (std::size_t r = 0; r < h.order(); ++r) {
    for (std::size_t c = 0; c < h.order(); ++c) {
      if (h.is_negative(r, c)) b.set_exp(r, c, 1);
    }
  }
  return b;
}

OrthogonalityReport verify_butson(const ButsonMatrix & b, unsigned threads)
{
  const std::size_t n = b.order();
  const std::uint32_t k = b.root_order();
  // Cache Phi_k once; each row pair then costs n counter increments and one
  // reduction.
  const IntPoly phi = cyclotomic_poly(k);
  OrthogonalityReport report;
  std::mutex m;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  parallel_rows(n, threads, [&](std::size_t begin, std::size_t end) {
    std::optional<std::pair<std::size_t, std::size_t>> local;
    std::vector<long long> counts(k);
    for (std::size_t r = begin; r < end && !local; ++r) {
      for (std::size_t s = r + 1; s < n; ++s) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
          ++counts[(b.exp(r, c) + k - b.exp(s, c)) % k];
        }
        std::vector<BigInt> coeffs(counts.begin(), counts.end());
        if (!poly_divrem(IntPoly(std::move(coeffs)), phi).second.is_zero()) {
          local = std::make_pair(r, s);
          break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(m);
    if (local && (!best || *local < *best)) best = local;
  });
  report.passed = !best.has_value();
  report.first_failure = best;
  report.pairs_checked = n * (n - (n ? 1 : 0)) / 2;
  return report;
}

namespace
{

constexpr std::size_t kGramTile = 32;

// Hot loop of the Gram check. Builds without -mpopcnt get the hardware
// instruction through a runtime-dispatched clone where the CPU has it.
#if defined(__GNUC__) && !defined(__clang__) && defined(__x86_64__) && defined(__linux__)
__attribute__((target_clones("popcnt", "default")))
#endif
std::uint64_t row_distance(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
  std::uint64_t d = 0;
  for (std::size_t w = 0; w < a.size(); ++w) d += static_cast<std::uint64_t>(std::popcount(a[w] ^ b[w]));
  return d;
}

}  // namespace

OrthogonalityReport verify_hadamard_packed(const PackedSignMatrix & h, unsigned threads)
{
  const std::size_t n = h.order();
  OrthogonalityReport report;
  report.pairs_checked = n * (n - (n ? 1 : 0)) / 2;
  if (n <= 1) return report;
  if (n % 2 == 1) {
    report.passed = false;
    report.first_failure = std::make_pair(std::size_t{0}, std::size_t{1});
    return report;
  }
  const std::uint64_t half = n / 2;
  const std::size_t tiles = (n + kGramTile - 1) / kGramTile;
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(tiles));

  // Row tiles are dealt round-robin to balance the triangular workload. Each
  // worker scans its tiles in increasing order and stops after the first tile
  // containing a failure, keeping that tile's smallest failing pair; the
  // minimum over workers is then the global first failure.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(threads);
  auto worker = [&](unsigned id) {
    for (std::size_t tr = id; tr < tiles; tr += threads) {
      std::optional<std::pair<std::size_t, std::size_t>> tile_min;
      const std::size_t r0 = tr * kGramTile;
      const std::size_t r1 = std::min(n, r0 + kGramTile);
      for (std::size_t ts = tr; ts < tiles; ++ts) {
        const std::size_t s0 = ts * kGramTile;
        const std::size_t s1 = std::min(n, s0 + kGramTile);
        for (std::size_t r = r0; r < r1; ++r) {
          if (tile_min && tile_min->first < r) break;
          for (std::size_t s = std::max(s0, r + 1); s < s1; ++s) {
            if (row_distance(h.row(r), h.row(s)) != half) {
              const auto p = std::make_pair(r, s);
              if (!tile_min || p < *tile_min) tile_min = p;
              break;
            }
          }
        }
      }
      if (tile_min) {
        found[id] = tile_min;
        return;
      }
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto & t : pool) t.join();
  }
  for (const auto & f : found) {
    if (f && (!report.first_failure || *f < *report.first_failure)) report.first_failure = f;
  }
  report.passed = !report.first_failure.has_value();
  return report;
}

ButsonMatrix galois_power(const ButsonMatrix & b, long long j)
{
  const auto k = static_cast<long long>(b.root_order());
  const long long jj = ((j % k) + k) % k;
  ButsonMatrix out(b.order(), b.root_order());
  for (std::size_t r = 0; r < b.order(); ++r) {
    for (std::size_t c = 0; c < b.order(); ++c) {
      out.set_exp(r, c, static_cast<long long>(b.exp(r, c)) * jj);
    }
  }
  return out;
}

bool NormalizedCharpoly::has_sqrt_part() const
{
  return std::any_of(sqrt_part.begin(), sqrt_part.end(), [](const BigRational & q) { return q != 0; });
}

std::optional<IntPoly> NormalizedCharpoly::as_int_poly() const
{
  if (has_sqrt_part()) return std::nullopt;
  std::vector<BigInt> coeffs;
  for (const auto & q : rational_part) {
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    coeffs.push_back(boost::multiprecision::numerator(q));
  }
  return IntPoly(std::move(coeffs));
}

namespace
{

std::string render_rational_poly(const std::vector<BigRational> & cs)
{
  std::string s;
  for (std::size_t idx = cs.size(); idx-- > 0;) {
    const BigRational & c = cs[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (idx == 0 || mag != 1) {
      const bool integral = boost::multiprecision::denominator(mag) == 1;
      s += integral ? mag.str() : "(" + mag.str() + ")";
    }
    if (idx >= 1) s += "x";
    if (idx >= 2) s += "^" + std::to_string(idx);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string NormalizedCharpoly::to_string() const
{
  if (!has_sqrt_part()) return render_rational_poly(rational_part);
  return render_rational_poly(rational_part) + " + sqrt(" + std::to_string(order) + ")*(" +
         render_rational_poly(sqrt_part) + ")";
}

NormalizedCharpoly normalize_charpoly(const IntPoly & chi, std::uint64_t order)
{
  NormalizedCharpoly out;
  out.order = order;
  const auto len = static_cast<std::size_t>(chi.degree() + 1);
  out.rational_part.assign(len, BigRational(0));
  out.sqrt_part.assign(len, BigRational(0));
  const BigInt big_n = order;
  const BigInt root = boost::multiprecision::sqrt(big_n);
  const bool square = root * root == big_n;
  for (std::size_t k = 0; k < len; ++k) {
    const BigInt & c = chi.coeffs()[k];
    if (c == 0) continue;
    const std::uint64_t gap = order - k;
    if (square) {
      out.rational_part[k] = BigRational(c, boost::multiprecision::pow(root, static_cast<unsigned>(gap)));
    } else if (gap % 2 == 0) {
      out.rational_part[k] = BigRational(c, boost::multiprecision::pow(big_n, static_cast<unsigned>(gap / 2)));
    } else {
      out.sqrt_part[k] = BigRational(c, boost::multiprecision::pow(big_n, static_cast<unsigned>((gap + 1) / 2)));
    }
  }
  return out;
}

namespace
{

constexpr std::array<std::uint64_t, 3> kScreenPrimes{2147483647ull, 2147483629ull, 2147483587ull};

using ModMatrix = std::vector<std::uint64_t>;

ModMatrix mod_square(const ModMatrix & a, std::size_t n, std::uint64_t p)
{
  ModMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i * n + j] = (out[i * n + j] + aik * a[k * n + j]) % p;
      }
    }
  }
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1u) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

bool mod_is_scalar(const ModMatrix & a, std::size_t n, std::uint64_t c)
{
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i * n + j] != (i == j ? c : 0)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<IntPoly> minpoly_pow2_detect(const PackedSignMatrix & h)
{
  const std::size_t n = h.order();
  if (n > static_cast<std::size_t>(kDenseOracleCap)) {
    throw SizeCap("minpoly_pow2_detect: dense path limited to order 128");
  }
  constexpr int kMaxS = 12;
  std::vector<ModMatrix> powers;  // H^{2^s} mod each prime
  for (std::uint64_t p : kScreenPrimes) {
    ModMatrix m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m[r * n + c] = h.is_negative(r, c) ? p - 1 : 1;
    }
    powers.push_back(std::move(m));
  }
  for (int s = 1; s <= kMaxS; ++s) {
    bool candidate = true;
    for (std::size_t i = 0; i < kScreenPrimes.size(); ++i) {
      const std::uint64_t p = kScreenPrimes[i];
      powers[i] = mod_square(powers[i], n, p);
      // -N^{2^{s-1}} mod p
      const std::uint64_t target = (p - mod_pow(n, std::uint64_t{1} << (s - 1), p)) % p;
      if (!mod_is_scalar(powers[i], n, target)) candidate = false;
    }
    if (!candidate) continue;
    const BigMatrix exact = matrix_power(h.to_dense().cast<BigInt>(), std::uint64_t{1} << s);
    const BigInt target = -boost::multiprecision::pow(BigInt(n), 1u << (s - 1));
    if (is_scalar_matrix(exact, target)) {
      return IntPoly::binomial(std::size_t{1} << s, BigInt(-1));
    }
  }
  return std::nullopt;
}

}  // namespace hadspectra
