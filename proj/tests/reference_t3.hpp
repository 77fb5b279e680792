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

// Reference matrices for t = 3, entered by hand. Rows and columns
// use lexicographic labels 000, 001, ..., 111.

#ifndef HADSPECTRA_TESTS_REFERENCE_T3_HPP_
#define HADSPECTRA_TESTS_REFERENCE_T3_HPP_

#include <array>

namespace ref3
{

using Matrix8 = std::array<std::array<int, 8>, 8>;

inline constexpr Matrix8 kPQ = {{
  {0, 0, 0, 0, 0, 0, 0, 1},
  {1, 0, 0, 0, 0, 0, 0, 0},
  {0, 1, 0, 0, 0, 0, 0, 0},
  {0, 0, 0, 0, 0, 0, 1, 0},
  {0, 0, 0, -1, 0, 0, 0, 0},
  {0, 0, 0, 0, -1, 0, 0, 0},
  {0, 0, 0, 0, 0, -1, 0, 0},
  {0, 0, -1, 0, 0, 0, 0, 0},
}};

inline constexpr Matrix8 kDa = {{
  {1, 0, 0, 0, 0, 0, 0, 0},
  {0, -1, 0, 0, 0, 0, 0, 0},
  {0, 0, -1, 0, 0, 0, 0, 0},
  {0, 0, 0, 1, 0, 0, 0, 0},
  {0, 0, 0, 0, 1, 0, 0, 0},
  {0, 0, 0, 0, 0, -1, 0, 0},
  {0, 0, 0, 0, 0, 0, -1, 0},
  {0, 0, 0, 0, 0, 0, 0, 1},
}};

inline constexpr Matrix8 kTb = {{
  {0, 0, 0, 0, 0, 0, 0, 1},
  {0, 0, 0, 0, 0, 0, 1, 0},
  {0, 0, 0, 0, 0, 1, 0, 0},
  {0, 0, 0, 0, 1, 0, 0, 0},
  {0, 0, 0, 1, 0, 0, 0, 0},
  {0, 0, 1, 0, 0, 0, 0, 0},
  {0, 1, 0, 0, 0, 0, 0, 0},
  {1, 0, 0, 0, 0, 0, 0, 0},
}};

inline constexpr Matrix8 kRhoA = {{
  {1, 0, 0, 0, 0, 0, 0, 0},
  {0, 0, 0, 0, 0, 0, 0, 1},
  {0, 0, 1, 0, 0, 0, 0, 0},
  {0, 0, 0, 0, 0, 1, 0, 0},
  {0, 1, 0, 0, 0, 0, 0, 0},
  {0, 0, 0, 0, 0, 0, 1, 0},
  {0, 0, 0, 1, 0, 0, 0, 0},
  {0, 0, 0, 0, 1, 0, 0, 0},
}};

inline constexpr Matrix8 kPS3 = {{
  {1, 1, 1, 1, -1, -1, -1, -1},
  {-1, 1, 1, -1, -1, 1, 1, -1},
  {-1, -1, 1, 1, 1, 1, -1, -1},
  {1, -1, 1, -1, 1, -1, 1, -1},
  {1, -1, 1, -1, -1, 1, -1, 1},
  {-1, -1, 1, 1, -1, -1, 1, 1},
  {-1, 1, 1, -1, 1, -1, -1, 1},
  {1, 1, 1, 1, 1, 1, 1, 1},
}};

template <class M>
bool equals(const M & m, const Matrix8 & ref)
{
  if (m.rows() != 8 || m.cols() != 8) return false;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if (m(r, c) != ref[r][c]) return false;
    }
  }
  return true;
}

template <class M>
int mismatches(const M & m, const Matrix8 & ref)
{
  int bad = 0;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) bad += m(r, c) != ref[r][c];
  }
  return bad;
}

}  // namespace ref3

#endif  // HADSPECTRA_TESTS_REFERENCE_T3_HPP_
