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

#ifndef HADSPECTRA_SYLVESTER_HPP_
#define HADSPECTRA_SYLVESTER_HPP_

#include <optional>

#include "hadspectra/gf2.hpp"
#include "hadspectra/monomial.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

inline constexpr int kMaxMaterializedSylvester = 15;

/// S_n = [(-1)^<a,b>] over lexicographic labels a, b of F_2^n, 1 <= n <= 15.
PackedSignMatrix sylvester(int n);

/// Row a of S_n written into out (ceil(2^n / 64) words), for n <= 31.
void sylvester_row(int n, std::uint64_t a, std::span<std::uint64_t> out);

/// (u, v, L) in the semidirect product (V x V) x| GL_n(F_2).
struct GroupElt
{
  Vec2 u;
  Vec2 v;
  Mat2 L;

  static GroupElt identity(int n);
  int dim() const noexcept { return L.dim(); }
  friend bool operator==(const GroupElt &, const GroupElt &) = default;
};

/// (u1 + (L1^{-1})^T u2, v1 + L1 v2, L1 L2)
GroupElt group_mul(const GroupElt & g1, const GroupElt & g2);
/// (L^T u, L^{-1} v, L^{-1})
GroupElt group_inverse(const GroupElt & g);

/// rho(L): the permutation matrix with a 1 at (La, a).
MonomialMatrix rho(const Mat2 & L);
/// T_v: the permutation matrix with a 1 at (x, x + v).
MonomialMatrix translation(const Vec2 & v);
/// D_v = diag((-1)^<x,v>).
MonomialMatrix diag_sign(const Vec2 & v);

struct MonomialPair
{
  MonomialMatrix P;
  MonomialMatrix Q;
};

/// The row and column actions of (u, v, L) as monomial matrices:
/// P sends column a to row La + v with sign (-1)^<La,u>; Q sends column b to
/// row (L^{-1})^T b + u with sign (-1)^<v,(L^{-1})^T b>.
MonomialPair psi(const GroupElt & g);

/// Returns s in {+1, -1} with P S Q^T = s S; throws NotScalarAction otherwise.
int apply_pair(const MonomialMatrix & P, const MonomialMatrix & Q, const PackedSignMatrix & s, unsigned threads = 1);

/// Same check against S_n with rows generated on the fly (no materialized S_n).
int apply_pair_sylvester(const MonomialMatrix & P, const MonomialMatrix & Q, int n, unsigned threads = 1);

/// Product of the two components of psi(g).
MonomialMatrix pq_product(const GroupElt & g);

/// D_{u + (L^{-1})^T v} T_{v + L u} rho(L (L^{-1})^T), the factored form of the
/// same product read off the group law.
MonomialMatrix pq_closed_form(const GroupElt & g);

/// The sign s with lhs = s * rhs, if any.
std::optional<int> relative_sign(const MonomialMatrix & lhs, const MonomialMatrix & rhs);

}  // namespace hadspectra

#endif  // HADSPECTRA_SYLVESTER_HPP_
