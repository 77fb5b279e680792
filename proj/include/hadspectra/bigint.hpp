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

#ifndef HADSPECTRA_BIGINT_HPP_
#define HADSPECTRA_BIGINT_HPP_

#include <boost/multiprecision/gmp.hpp>

namespace hadspectra
{

// Expression templates are off so the type composes cleanly with Eigen.
using BigInt = boost::multiprecision::number<
  boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<
  boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

}  // namespace hadspectra

#endif  // HADSPECTRA_BIGINT_HPP_
