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

#include "hadspectra/morphism.hpp"

#include <cmath>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

std::string to_string(ConditionStatus s)
{
  switch (s) {
    case ConditionStatus::kPass: return "pass";
    case ConditionStatus::kFail: return "fail";
    case ConditionStatus::kIrrationalScaling: return "irrational scaling";
  }
  return "unknown";
}

std::string SoundPairReport::first_failure() const
{
  for (const auto & r : cond1_results) {
    if (r.status != ConditionStatus::kPass) {
      return "condition 1 at j = " + std::to_string(r.exponent) + ": " + to_string(r.status) +
             (r.detail.empty() ? "" : " (" + r.detail + ")");
    }
  }
  for (const auto & r : cond2_results) {
    if (r.status != ConditionStatus::kPass) {
      return "condition 2 at j = " + std::to_string(r.exponent) + ": " + to_string(r.status) +
             (r.detail.empty() ? "" : " (" + r.detail + ")");
    }
  }
  return {};
}

namespace
{

std::optional<std::uint64_t> exact_sqrt(std::uint64_t m)
{
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  if (r * r == m) return r;
  return std::nullopt;
}

// sqrt(m)^{1-j} M^j over Z, or the reason it is not a real Hadamard matrix.
ConditionResult dense_condition(const PackedSignMatrix & m, long long j, std::optional<PackedSignMatrix> & out)
{
  ConditionResult res;
  res.exponent = j;
  const std::uint64_t order = m.order();
  BigInt num_scale = 1;
  BigInt den_scale = 1;
  if (j % 2 != 0) {
    den_scale = boost::multiprecision::pow(BigInt(order), static_cast<unsigned>((j - 1) / 2));
  } else {
    const auto r = exact_sqrt(order);
    if (!r) {
      res.status = ConditionStatus::kIrrationalScaling;
      res.detail = "sqrt(" + std::to_string(order) + ") is irrational";
      return res;
    }
    if (j == 0) {
      num_scale = *r;
    } else {
      den_scale = boost::multiprecision::pow(BigInt(*r), static_cast<unsigned>(j - 1));
    }
  }
  const BigMatrix power = matrix_power(to_big(m.to_dense()), static_cast<std::uint64_t>(j));
  IntMatrix block(power.rows(), power.cols());
  for (Eigen::Index r = 0; r < power.rows(); ++r) {
    for (Eigen::Index c = 0; c < power.cols(); ++c) {
      const BigInt v = power(r, c) * num_scale;
      if (v != den_scale && v != -den_scale) {
        res.status = ConditionStatus::kFail;
        res.detail = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not +-1";
        return res;
      }
      block(r, c) = v == den_scale ? 1 : -1;
    }
  }
  PackedSignMatrix packed = PackedSignMatrix::from_dense(block);
  const OrthogonalityReport gram = verify_hadamard_packed(packed);
  if (!gram.passed) {
    res.status = ConditionStatus::kFail;
    res.detail = "rows " + std::to_string(gram.first_failure->first) + " and " +
                 std::to_string(gram.first_failure->second) + " are not orthogonal";
    return res;
  }
  res.status = ConditionStatus::kPass;
  res.detail = "exact dense power";
  out = std::move(packed);
  return res;
}

}  // namespace

PlugInKernel PlugInKernel::from_bundle(const ConstructionBundle & bundle, unsigned threads)
{
  PlugInKernel k;
  k.order_ = bundle.order;
  k.bundle_ = &bundle;
  CertifyOptions opts;
  opts.threads = threads;
  k.certificate_ = certify(bundle, opts);
  return k;
}

PlugInKernel PlugInKernel::from_matrix(const PackedSignMatrix & m)
{
  if (m.order() == 0) throw InvalidInput("plug-in matrix must be nonempty");
  if (m.order() > static_cast<std::size_t>(kDenseOracleCap)) {
    throw SizeCap("explicit plug-in matrix has order " + std::to_string(m.order()) + ", cap is 128");
  }
  PlugInKernel k;
  k.order_ = m.order();
  k.explicit_ = m;
  return k;
}

const PlugInKernel::DenseBlock & PlugInKernel::dense_block(long long j) const
{
  auto it = dense_cache_.find(j);
  if (it != dense_cache_.end()) return it->second;
  const PackedSignMatrix & m = explicit_ ? *explicit_ : bundle_->H;
  DenseBlock block;
  block.result = dense_condition(m, j, block.matrix);
  return dense_cache_.emplace(j, std::move(block)).first->second;
}

ConditionResult PlugInKernel::check_scaled_power(long long j) const
{
  if (j < 0) throw OutOfRange("exponent must be nonnegative, got " + std::to_string(j));
  if (bundle_ && j % 2 != 0) {
    return {j, ConditionStatus::kPass, "monomial multiple of the certified H"};
  }
  if (bundle_ && !exact_sqrt(order_)) {
    return {j, ConditionStatus::kIrrationalScaling, "sqrt(" + std::to_string(order_) + ") is irrational"};
  }
  if (bundle_ && order_ > static_cast<std::size_t>(kDenseOracleCap)) {
    return {j, ConditionStatus::kFail, "even power above the dense cap"};
  }
  return dense_block(j).result;
}

PackedSignMatrix PlugInKernel::scaled_power(long long j) const
{
  if (bundle_ && j % 2 != 0) {
    if (j < 1) throw OutOfRange("exponent must be nonnegative, got " + std::to_string(j));
    return hadamard_power(*bundle_, j);
  }
  const ConditionResult r = check_scaled_power(j);
  if (r.status != ConditionStatus::kPass) {
    throw InvalidInput("sqrt(m)^{1-j} M^j at j = " + std::to_string(j) + ": " + to_string(r.status));
  }
  return *dense_block(j).matrix;
}

void PlugInKernel::write_block(long long j, PackedSignMatrix & out, std::size_t row0, std::size_t col0) const
{
  if (row0 + order_ > out.order() || col0 + order_ > out.order()) {
    throw DimensionMismatch("block does not fit in the output");
  }
  if (bundle_ && j % 2 != 0) {
    const MonomialMatrix factor = hadamard_power_factor(*bundle_, j);
    const PackedSignMatrix & h = bundle_->H;
    std::vector<std::uint64_t> buf(h.words_per_row());
    for (std::size_t c = 0; c < order_; ++c) {
      const auto src = h.row(c);
      if (factor.scale(c) == 0) {
        copy_bits(out.row(row0 + factor.dest(c)), col0, src, 0, order_);
        continue;
      }
      for (std::size_t w = 0; w < buf.size(); ++w) buf[w] = ~src[w];
      copy_bits(out.row(row0 + factor.dest(c)), col0, buf, 0, order_);
    }
    return;
  }
  const DenseBlock & block = dense_block(j);
  if (!block.matrix) {
    throw InvalidInput("sqrt(m)^{1-j} M^j at j = " + std::to_string(j) + ": " + to_string(block.result.status));
  }
  for (std::size_t r = 0; r < order_; ++r) {
    copy_bits(out.row(row0 + r), col0, block.matrix->row(r), 0, order_);
  }
}

SoundPairReport sound_pair_check(
  const ButsonMatrix & h, const PlugInKernel & kernel, const std::set<long long> & Y,
  const std::optional<std::set<long long>> & X)
{
  SoundPairReport report;
  report.root_order = h.root_order();
  const std::set<long long> present(h.exps().begin(), h.exps().end());
  if (X) {
    for (long long e : present) {
      if (!X->count(e)) {
        throw InvalidInput("exponent " + std::to_string(e) + " of H is not in X");
      }
    }
    report.X = *X;
  } else {
    report.X = present;
  }
  report.Y = Y;

  bool sound = true;
  for (long long j : report.X) {
    ConditionResult r = kernel.check_scaled_power(j);
    sound = sound && r.status == ConditionStatus::kPass;
    report.cond1_results.push_back(std::move(r));
  }
  for (long long j : report.Y) {
    const OrthogonalityReport o = verify_butson(galois_power(h, j));
    ConditionResult r{j, o.passed ? ConditionStatus::kPass : ConditionStatus::kFail, {}};
    if (!o.passed) {
      r.detail = "rows " + std::to_string(o.first_failure->first) + " and " +
                 std::to_string(o.first_failure->second) + " of H^(j) are not orthogonal";
    }
    sound = sound && o.passed;
    report.cond2_results.push_back(std::move(r));
  }
  report.sound = sound;
  return report;
}

std::set<long long> eigenvalue_exponents(const SpectralCertificate & cert, std::uint32_t k)
{
  const std::uint64_t root = std::uint64_t{1} << (cert.t + 1);
  if (cert.concluded_minpoly_normalized != cyclotomic_poly(root)) {
    throw InvalidInput("certificate does not conclude x^" + std::to_string(root / 2) + " + 1");
  }
  if (k % root != 0) {
    throw BadRootOrder(std::to_string(root) + " does not divide k = " + std::to_string(k));
  }
  std::set<long long> out;
  const std::uint64_t step = k / root;
  for (std::uint64_t j = 1; j < root; j += 2) out.insert(static_cast<long long>(j * step));
  return out;
}

ButsonMatrix twist_odd(const ButsonMatrix & b)
{
  const std::uint32_t k = b.root_order() * 2;
  std::vector<std::uint32_t> exps(b.exps().size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = (2 * b.exps()[i] + 1) % k;
  return ButsonMatrix(b.order(), k, std::move(exps));
}

PackedSignMatrix plug_in(
  const ButsonMatrix & h, const PlugInKernel & kernel, const std::set<long long> & Y, unsigned threads)
{
  for (std::uint32_t e : h.exps()) {
    if (e % 2 == 0) {
      throw NonOddExponent("H has the even exponent " + std::to_string(e));
    }
  }
  const SoundPairReport report = sound_pair_check(h, kernel, Y);
  if (!report.sound) throw UnsoundPair(report.first_failure());

  const std::size_t m = kernel.order();
  const std::size_t n = h.order();
  PackedSignMatrix out(m * n);
  // The kernel's cache is filled by the soundness check, so the workers only read it.
  parallel_rows(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = 0; c < n; ++c) kernel.write_block(h.exp(r, c), out, r * m, c * m);
    }
  });
  return out;
}

PackedSignMatrix morph_to_real(const ButsonMatrix & b, int t, const MorphOptions & options)
{
  if (t < 2 || t > kMaxMaterializedT) {
    throw OutOfRange("morph_to_real: t must lie in 2..5, got " + std::to_string(t));
  }
  const std::uint32_t k = std::uint32_t{1} << t;
  if (b.root_order() != k) {
    throw BadRootOrder("morph_to_real: expected k = " + std::to_string(k) + ", got " + std::to_string(b.root_order()));
  }
  if (!verify_butson(b, options.threads).passed) {
    throw InvalidInput("morph_to_real: input is not a Butson Hadamard matrix");
  }
  const ButsonMatrix twisted = twist_odd(b);
  const ConstructionBundle bundle = build_Ht(t, options.threads);
  const PlugInKernel kernel = PlugInKernel::from_bundle(bundle, options.threads);
  const std::set<long long> Y = eigenvalue_exponents(*kernel.certificate(), twisted.root_order());
  PackedSignMatrix out = plug_in(twisted, kernel, Y, options.threads);
  if (options.verify_output && (out.order() <= kDefaultGramLimit || options.full_gram)) {
    const OrthogonalityReport gram = verify_hadamard_packed(out, options.threads);
    if (!gram.passed) {
      throw CertificateFailure("morph_output", "rows " + std::to_string(gram.first_failure->first) + " and " +
                                                 std::to_string(gram.first_failure->second) + " are not orthogonal");
    }
  }
  return out;
}

}  // namespace hadspectra
