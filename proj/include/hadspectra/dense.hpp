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

#ifndef HADSPECTRA_DENSE_HPP_
#define HADSPECTRA_DENSE_HPP_

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>

#include "hadspectra/bigint.hpp"
#include "hadspectra/cyclopoly.hpp"
#include "hadspectra/errors.hpp"

namespace hadspectra
{

// Dense exact matrices. These back the oracle paths (characteristic
// polynomials, explicit powers) and are only used at desk scale.
template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<BigInt>;

inline constexpr Eigen::Index kDenseOracleCap = 128;

template <class Derived>
BigMatrix to_big(const Eigen::MatrixBase<Derived> & m)
{
  return m.template cast<BigInt>();
}

/// det(xI - M) by Berkowitz's division-free recurrence. Throws SizeCap above
/// order 128.
IntPoly charpoly_exact(const BigMatrix & m);

template <class Derived>
IntPoly charpoly_exact(const Eigen::MatrixBase<Derived> & m)
{
  return charpoly_exact(to_big(m));
}

/// p(M) evaluated exactly by Horner's rule.
BigMatrix poly_eval(const IntPoly & p, const BigMatrix & m);

/// M^e by repeated squaring.
BigMatrix matrix_power(const BigMatrix & m, std::uint64_t e);

/// True iff M = c I.
template <class Scalar>
bool is_scalar_matrix(const DenseMatrix<Scalar> & m, const Scalar & c)
{
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != (i == j ? c : Scalar(0))) return false;
    }
  }
  return true;
}

}  // namespace hadspectra

#endif  // HADSPECTRA_DENSE_HPP_
