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

#ifndef HADSPECTRA_CONSTRUCT_HPP_
#define HADSPECTRA_CONSTRUCT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadspectra/cyclopoly.hpp"
#include "hadspectra/gf2.hpp"
#include "hadspectra/monomial.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

inline constexpr int kMaxMaterializedT = 5;

/// Everything produced while building H_t = D_a T_b rho(A) S_n.
///
/// n = 2^(t-1) - 1 and the order is N = 2^n. P = D_a T_b rho(A) and
/// Q = T_a D_b rho((A^{-1})^T) are composed in that order; PQ is their product
/// and s the observed sign with P S_n Q^T = s S_n.
struct ConstructionBundle
{
  int t = 0;
  int n = 0;
  std::size_t order = 0;
  Vec2 a;
  Vec2 b;
  Mat2 A;
  MonomialMatrix P;
  MonomialMatrix Q;
  MonomialMatrix PQ;
  /// D_u T_v rho(L) with u = (1,0,...,0), v = (0,...,0,1) and L the Jordan
  /// block: the factored form of PQ.
  MonomialMatrix PQ_closed;
  /// PQ = closed_form_sign * PQ_closed.
  int closed_form_sign = 1;
  PackedSignMatrix H;
  int s = 1;
};

/// Builds the bundle for 2 <= t <= 5.
ConstructionBundle build_Ht(int t, unsigned threads = 1);

struct OrbitAudit
{
  int t = 0;
  std::uint64_t points = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t expected_length = 0;
  /// Set when every orbit has the same length.
  std::optional<std::uint64_t> common_length;
  bool all_lengths_expected = false;
  bool gamma_pairings_all_one = false;
};

/// Orbits of x -> Lx + v on F_2^n (L the Jordan block, v = (0,...,0,1)),
/// with <orbit sum, (1,0,...,0)> checked for each orbit. t = 6 walks 2^31
/// points and must be requested with allow_large.
OrbitAudit orbit_audit(int t, bool allow_large = false);

struct CertificateCheck
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The audit trail for m(N^{-1/2} H_t) = Phi_{2^{t+1}}.
struct SpectralCertificate
{
  int t = 0;
  int n = 0;
  std::size_t order = 0;
  int s = 1;
  std::uint64_t orbit_count = 0;
  std::uint64_t all_lengths = 0;
  bool all_products_minus_one = false;
  IntPoly minpoly_PQ;
  IntPoly concluded_minpoly_normalized;
  int closed_form_sign = 1;
  std::optional<bool> check_H2;
  std::optional<bool> hadamard_gram;
  std::vector<CertificateCheck> checks;
};

struct CertifyOptions
{
  /// Run the packed Gram check even above order 4096.
  bool full_gram = false;
  unsigned threads = 1;
};

inline constexpr std::size_t kDefaultGramLimit = 4096;

/// Runs every check in order and throws CertificateFailure at the first
/// failure. The bundle's H is treated as untrusted input.
SpectralCertificate certify(const ConstructionBundle & bundle, const CertifyOptions & options = {});

/// sqrt(N)^{1-j} H^j = s^{(j-1)/2} (PQ)^{(j-1)/2} H for odd j >= 1.
PackedSignMatrix hadamard_power(const ConstructionBundle & bundle, long long j, unsigned threads = 1);

/// The monomial factor s^{(j-1)/2} (PQ)^{(j-1)/2} of hadamard_power.
MonomialMatrix hadamard_power_factor(const ConstructionBundle & bundle, long long j);

/// Certificate-backed detection: x^{2^t} + 1 when the certificate concluded
/// it for a matrix of this order.
std::optional<IntPoly> minpoly_pow2_detect(const PackedSignMatrix & h, const SpectralCertificate & cert);

/// t with 2^(2^(t-1) - 1) = order, if any t in 2..6 fits.
std::optional<int> construction_level_for_order(std::size_t order);

}  // namespace hadspectra

#endif  // HADSPECTRA_CONSTRUCT_HPP_
