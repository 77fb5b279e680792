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

#ifndef HADSPECTRA_MORPHISM_HPP_
#define HADSPECTRA_MORPHISM_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hadspectra/butson.hpp"
#include "hadspectra/construct.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

enum class ConditionStatus
{
  kPass,
  kFail,
  /// sqrt(m)^{1-j} is irrational (even j, m not a perfect square).
  kIrrationalScaling,
};

std::string to_string(ConditionStatus s);

struct ConditionResult
{
  long long exponent = 0;
  ConditionStatus status = ConditionStatus::kFail;
  std::string detail;
};

/// Outcome of checking the two soundness conditions for (H, M).
struct SoundPairReport
{
  std::uint32_t root_order = 1;
  std::set<long long> X;
  std::set<long long> Y;
  /// sqrt(m)^{1-j} M^j is a real Hadamard matrix, for each j in X.
  std::vector<ConditionResult> cond1_results;
  /// H^{(j)} is Butson, for each j in Y.
  std::vector<ConditionResult> cond2_results;
  bool sound = false;

  /// "condition 1 at j = 0: irrational scaling" style summary of the first
  /// failure, empty when sound.
  std::string first_failure() const;
};

/// The matrix M plugged into H, with exact access to sqrt(m)^{1-j} M^j.
///
/// Built either from a construction bundle, where odd powers reduce to a
/// monomial factor times H, or from an explicit small matrix, where powers
/// are computed densely over Z.
class PlugInKernel
{
public:
  /// The bundle must outlive the kernel. H is certified once here.
  static PlugInKernel from_bundle(const ConstructionBundle & bundle, unsigned threads = 1);
  /// Explicit real Hadamard matrix of order <= 128.
  static PlugInKernel from_matrix(const PackedSignMatrix & m);

  std::size_t order() const noexcept { return order_; }
  const ConstructionBundle * bundle() const noexcept { return bundle_; }
  /// Set for bundle kernels.
  const std::optional<SpectralCertificate> & certificate() const noexcept { return certificate_; }

  /// Decides condition 1 at exponent j.
  ConditionResult check_scaled_power(long long j) const;

  /// sqrt(m)^{1-j} M^j materialized; only for exponents that pass.
  PackedSignMatrix scaled_power(long long j) const;

  /// Writes sqrt(m)^{1-j} M^j into out with its top-left corner at (row0, col0).
  void write_block(long long j, PackedSignMatrix & out, std::size_t row0, std::size_t col0) const;

private:
  struct DenseBlock
  {
    ConditionResult result;
    std::optional<PackedSignMatrix> matrix;
  };
  const DenseBlock & dense_block(long long j) const;

  std::size_t order_ = 0;
  const ConstructionBundle * bundle_ = nullptr;
  std::optional<SpectralCertificate> certificate_;
  std::optional<PackedSignMatrix> explicit_;
  mutable std::map<long long, DenseBlock> dense_cache_;
};

/// Checks (H, M) for (X, Y)-soundness. When X is omitted the exponents present
/// in H are used; a supplied X must contain every exponent of H.
SoundPairReport sound_pair_check(
  const ButsonMatrix & h, const PlugInKernel & kernel, const std::set<long long> & Y,
  const std::optional<std::set<long long>> & X = std::nullopt);

/// Exponents (mod k) of the primitive 2^{t+1}-th roots of unity: where the
/// eigenvalues of N^{-1/2} H_t lie once its minimal polynomial is certified as
/// x^{2^t} + 1. Requires 2^{t+1} | k.
std::set<long long> eigenvalue_exponents(const SpectralCertificate & cert, std::uint32_t k);

/// e -> 2e + 1: BH(n, 2^t) -> BH(n, 2^{t+1}), i.e. multiplication by
/// zeta_{2^{t+1}}.
ButsonMatrix twist_odd(const ButsonMatrix & b);

/// Replaces each entry zeta_k^j of H by the block sqrt(m)^{1-j} M^j. Throws
/// NonOddExponent if H has an even exponent and UnsoundPair if the pair fails
/// soundness for Y.
PackedSignMatrix plug_in(
  const ButsonMatrix & h, const PlugInKernel & kernel, const std::set<long long> & Y,
  unsigned threads = 1);

struct MorphOptions
{
  /// Run the Gram check on the output (always done up to order 4096).
  bool verify_output = true;
  bool full_gram = false;
  unsigned threads = 1;
};

/// BH(n, 2^t) -> BH(2^(2^(t-1)-1) n, 2): twist, then plug in H_t.
PackedSignMatrix morph_to_real(const ButsonMatrix & b, int t, const MorphOptions & options = {});

}  // namespace hadspectra

#endif  // HADSPECTRA_MORPHISM_HPP_
