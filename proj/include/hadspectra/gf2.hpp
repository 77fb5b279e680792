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

#ifndef HADSPECTRA_GF2_HPP_
#define HADSPECTRA_GF2_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hadspectra
{

inline constexpr int kMaxGf2Dim = 63;

/// A vector of F_2^n, n <= 63, packed into one word.
///
/// Coordinates are numbered from the left. The word holds the vector read as
/// a binary number with the first coordinate as the most significant bit, so
/// bits() is also the vector's position in the lexicographic enumeration of
/// F_2^n. Every matrix row/column label in the library uses that index.
class Vec2
{
public:
  Vec2() = default;
  explicit Vec2(int dim);
  Vec2(int dim, std::uint64_t bits);

  /// Builds from explicit 0/1 coordinates, first coordinate first.
  static Vec2 from_coords(std::initializer_list<int> coords);
  static Vec2 from_coords(const std::vector<int> & coords);
  static Vec2 unit(int dim, int i);
  static Vec2 ones(int dim);

  int dim() const noexcept { return dim_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t index() const noexcept { return bits_; }

  /// Coordinate i, 0-based from the left.
  int operator[](int i) const;
  void set(int i, int value);
  bool is_zero() const noexcept { return bits_ == 0; }
  int weight() const noexcept;

  Vec2 & operator+=(const Vec2 & other);
  friend Vec2 operator+(Vec2 lhs, const Vec2 & rhs) { return lhs += rhs; }
  friend bool operator==(const Vec2 &, const Vec2 &) = default;

  /// e.g. "(0,1,1)"
  std::string to_string() const;

private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// Square matrix over F_2 stored as packed rows.
class Mat2
{
public:
  Mat2() = default;
  explicit Mat2(int dim);

  static Mat2 identity(int dim);
  static Mat2 zero(int dim) { return Mat2(dim); }
  static Mat2 from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Mat2 from_rows(const std::vector<Vec2> & rows);

  int dim() const noexcept { return dim_; }
  Vec2 row(int i) const;
  Vec2 col(int j) const;
  void set_row(int i, const Vec2 & r);
  int operator()(int i, int j) const;
  void set(int i, int j, int value);

  Mat2 transpose() const;
  bool is_identity() const;
  friend bool operator==(const Mat2 &, const Mat2 &) = default;

  std::string to_string() const;

private:
  int dim_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// <a, b> = a^T b over F_2.
int gf2_inner(const Vec2 & a, const Vec2 & b);

Mat2 mat2_mul(const Mat2 & a, const Mat2 & b);
Vec2 mat2_mul(const Mat2 & a, const Vec2 & x);
Mat2 mat2_add(const Mat2 & a, const Mat2 & b);
Mat2 mat2_pow(const Mat2 & a, std::uint64_t e);

/// Gauss-Jordan elimination taking the first nonzero pivot in each column.
/// Throws SingularMatrix.
Mat2 mat2_inverse(const Mat2 & a);

/// Kronecker product; rows and columns ordered (i_a, i_b) lexicographically.
Mat2 mat2_tensor(const Mat2 & a, const Mat2 & b);

/// I + C with C the superdiagonal shift.
Mat2 jordan_block(int n);

/// The order 2^(t-1) - 1 matrix obtained from the (t-1)-fold tensor power of
/// [[1,1],[1,0]] by deleting its first row and last column. It satisfies
/// A (A^{-1})^T = jordan_block(2^(t-1) - 1).
Mat2 build_A(int t);

/// Multiplicative order of an invertible matrix (smallest e >= 1 with A^e = I).
std::uint64_t mat2_order(const Mat2 & a, std::uint64_t limit);

/// x -> Lx + v evaluated with byte lookup tables, for orbit enumeration over
/// all of F_2^n.
class AffineMap
{
public:
  AffineMap(const Mat2 & linear, const Vec2 & translation);

  std::uint64_t operator()(std::uint64_t x) const noexcept
  {
    std::uint64_t y = translation_;
    for (std::size_t b = 0; b < tables_.size(); ++b) {
      y ^= tables_[b][(x >> (8 * b)) & 0xFFu];
    }
    return y;
  }

  int dim() const noexcept { return dim_; }

private:
  int dim_;
  std::uint64_t translation_;
  std::vector<std::array<std::uint64_t, 256>> tables_;
};

}  // namespace hadspectra

#endif  // HADSPECTRA_GF2_HPP_
