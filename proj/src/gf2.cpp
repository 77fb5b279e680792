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

#include "hadspectra/gf2.hpp"

#include <bit>
#include <sstream>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

namespace
{

std::uint64_t dim_mask(int dim)
{
  return dim == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
}

void check_dim(int dim)
{
  if (dim < 1 || dim > kMaxGf2Dim) {
    throw OutOfRange("GF(2) dimension must lie in 1..63, got " + std::to_string(dim));
  }
}

// Coordinate i (0-based, from the left) lives at this bit.
int bit_of(int dim, int i) { return dim - 1 - i; }

}  // namespace

Vec2::Vec2(int dim) : dim_(dim) { check_dim(dim); }

Vec2::Vec2(int dim, std::uint64_t bits) : dim_(dim), bits_(bits)
{
  check_dim(dim);
  if ((bits & ~dim_mask(dim)) != 0) {
    throw OutOfRange("Vec2 bits exceed dimension " + std::to_string(dim));
  }
}

Vec2 Vec2::from_coords(std::initializer_list<int> coords)
{
  return from_coords(std::vector<int>(coords));
}

Vec2 Vec2::from_coords(const std::vector<int> & coords)
{
  Vec2 v(static_cast<int>(coords.size()));
  for (int i = 0; i < v.dim_; ++i) {
    v.set(i, coords[static_cast<std::size_t>(i)]);
  }
  return v;
}

Vec2 Vec2::unit(int dim, int i)
{
  Vec2 v(dim);
  v.set(i, 1);
  return v;
}

Vec2 Vec2::ones(int dim) { return Vec2(dim, dim_mask(dim)); }

int Vec2::operator[](int i) const
{
  if (i < 0 || i >= dim_) {
    throw OutOfRange("Vec2 coordinate out of range");
  }
  return static_cast<int>((bits_ >> bit_of(dim_, i)) & 1u);
}

void Vec2::set(int i, int value)
{
  if (i < 0 || i >= dim_) {
    throw OutOfRange("Vec2 coordinate out of range");
  }
  const std::uint64_t m = std::uint64_t{1} << bit_of(dim_, i);
  bits_ = (value & 1) ? (bits_ | m) : (bits_ & ~m);
}

int Vec2::weight() const noexcept { return std::popcount(bits_); }

Vec2 & Vec2::operator+=(const Vec2 & other)
{
  if (dim_ != other.dim_) {
    throw DimensionMismatch("Vec2 addition: dimensions differ");
  }
  bits_ ^= other.bits_;
  return *this;
}

std::string Vec2::to_string() const
{
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + (*this)[i]);
  }
  return s + ")";
}

Mat2::Mat2(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim), 0) { check_dim(dim); }

Mat2 Mat2::identity(int dim)
{
  Mat2 m(dim);
  for (int i = 0; i < dim; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

Mat2 Mat2::from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
  Mat2 m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto & r : rows) {
    if (static_cast<int>(r.size()) != m.dim_) {
      throw DimensionMismatch("Mat2::from_rows: matrix must be square");
    }
    m.set_row(i++, Vec2::from_coords(r));
  }
  return m;
}

Mat2 Mat2::from_rows(const std::vector<Vec2> & rows)
{
  Mat2 m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim_; ++i) {
    m.set_row(i, rows[static_cast<std::size_t>(i)]);
  }
  return m;
}

Vec2 Mat2::row(int i) const { return Vec2(dim_, rows_.at(static_cast<std::size_t>(i))); }

Vec2 Mat2::col(int j) const
{
  Vec2 c(dim_);
  for (int i = 0; i < dim_; ++i) {
    c.set(i, (*this)(i, j));
  }
  return c;
}

void Mat2::set_row(int i, const Vec2 & r)
{
  if (r.dim() != dim_) {
    throw DimensionMismatch("Mat2::set_row: row dimension differs");
  }
  rows_.at(static_cast<std::size_t>(i)) = r.bits();
}

int Mat2::operator()(int i, int j) const
{
  return static_cast<int>((rows_.at(static_cast<std::size_t>(i)) >> bit_of(dim_, j)) & 1u);
}

void Mat2::set(int i, int j, int value)
{
  const std::uint64_t m = std::uint64_t{1} << bit_of(dim_, j);
  auto & r = rows_.at(static_cast<std::size_t>(i));
  r = (value & 1) ? (r | m) : (r & ~m);
}

Mat2 Mat2::transpose() const
{
  Mat2 t(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if ((*this)(i, j)) t.set(j, i, 1);
    }
  }
  return t;
}

bool Mat2::is_identity() const { return *this == identity(dim_); }

std::string Mat2::to_string() const
{
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      os << (*this)(i, j) << (j + 1 < dim_ ? " " : "");
    }
    os << '\n';
  }
  return os.str();
}

int gf2_inner(const Vec2 & a, const Vec2 & b)
{
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("gf2_inner: dimensions differ");
  }
  return std::popcount(a.bits() & b.bits()) & 1;
}

Mat2 mat2_mul(const Mat2 & a, const Mat2 & b)
{
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mat2_mul: dimensions differ");
  }
  const int n = a.dim();
  Mat2 c(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < n; ++j) {
      if (a(i, j)) acc ^= b.row(j).bits();
    }
    c.set_row(i, Vec2(n, acc));
  }
  return c;
}

Vec2 mat2_mul(const Mat2 & a, const Vec2 & x)
{
  if (a.dim() != x.dim()) {
    throw DimensionMismatch("mat2_mul: dimensions differ");
  }
  Vec2 y(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    y.set(i, gf2_inner(a.row(i), x));
  }
  return y;
}

Mat2 mat2_add(const Mat2 & a, const Mat2 & b)
{
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mat2_add: dimensions differ");
  }
  Mat2 c(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    c.set_row(i, a.row(i) + b.row(i));
  }
  return c;
}

Mat2 mat2_pow(const Mat2 & a, std::uint64_t e)
{
  Mat2 result = Mat2::identity(a.dim());
  Mat2 base = a;
  while (e) {
    if (e & 1u) result = mat2_mul(result, base);
    e >>= 1;
    if (e) base = mat2_mul(base, base);
  }
  return result;
}

Mat2 mat2_inverse(const Mat2 & a)
{
  const int n = a.dim();
  std::vector<std::uint64_t> lhs(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lhs[static_cast<std::size_t>(i)] = a.row(i).bits();
    rhs[static_cast<std::size_t>(i)] = std::uint64_t{1} << bit_of(n, i);
  }
  for (int col = 0; col < n; ++col) {
    const std::uint64_t m = std::uint64_t{1} << bit_of(n, col);
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (lhs[static_cast<std::size_t>(r)] & m) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      throw SingularMatrix("mat2_inverse: matrix is singular over GF(2)");
    }
    std::swap(lhs[static_cast<std::size_t>(pivot)], lhs[static_cast<std::size_t>(col)]);
    std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (lhs[static_cast<std::size_t>(r)] & m)) {
        lhs[static_cast<std::size_t>(r)] ^= lhs[static_cast<std::size_t>(col)];
        rhs[static_cast<std::size_t>(r)] ^= rhs[static_cast<std::size_t>(col)];
      }
    }
  }
  Mat2 inv(n);
  for (int i = 0; i < n; ++i) {
    inv.set_row(i, Vec2(n, rhs[static_cast<std::size_t>(i)]));
  }
  return inv;
}

Mat2 mat2_tensor(const Mat2 & a, const Mat2 & b)
{
  const int na = a.dim();
  const int nb = b.dim();
  if (na * nb > kMaxGf2Dim) {
    throw OutOfRange("mat2_tensor: result dimension exceeds 63");
  }
  Mat2 c(na * nb);
  for (int ia = 0; ia < na; ++ia) {
    for (int ib = 0; ib < nb; ++ib) {
      for (int ja = 0; ja < na; ++ja) {
        if (!a(ia, ja)) continue;
        for (int jb = 0; jb < nb; ++jb) {
          if (b(ib, jb)) c.set(ia * nb + ib, ja * nb + jb, 1);
        }
      }
    }
  }
  return c;
}

Mat2 jordan_block(int n)
{
  Mat2 j = Mat2::identity(n);
  for (int i = 0; i + 1 < n; ++i) {
    j.set(i, i + 1, 1);
  }
  return j;
}

Mat2 build_A(int t)
{
  if (t < 2 || t > 7) {
    throw OutOfRange("build_A: t must lie in 2..7, got " + std::to_string(t));
  }
  const int n = (1 << (t - 1)) - 1;
  // Entry (I, J) of the tensor power of [[1,1],[1,0]] is 1 iff I & J == 0.
  // Dropping the first row shifts the row label by one.
  Mat2 a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (((i + 1) & j) == 0) a.set(i, j, 1);
    }
  }
  return a;
}

std::uint64_t mat2_order(const Mat2 & a, std::uint64_t limit)
{
  Mat2 p = a;
  for (std::uint64_t e = 1; e <= limit; ++e) {
    if (p.is_identity()) return e;
    p = mat2_mul(p, a);
  }
  throw OutOfRange("mat2_order: order exceeds limit");
}

AffineMap::AffineMap(const Mat2 & linear, const Vec2 & translation)
: dim_(linear.dim()), translation_(translation.bits())
{
  if (translation.dim() != dim_) {
    throw DimensionMismatch("AffineMap: translation dimension differs");
  }
  std::vector<std::uint64_t> column_image(static_cast<std::size_t>(dim_));
  for (int p = 0; p < dim_; ++p) {
    column_image[static_cast<std::size_t>(p)] = linear.col(bit_of(dim_, p)).bits();
  }
  tables_.resize(static_cast<std::size_t>((dim_ + 7) / 8));
  for (std::size_t b = 0; b < tables_.size(); ++b) {
    for (unsigned byte = 0; byte < 256; ++byte) {
      std::uint64_t y = 0;
      for (int k = 0; k < 8; ++k) {
        const int p = static_cast<int>(8 * b) + k;
        if (p < dim_ && ((byte >> k) & 1u)) y ^= column_image[static_cast<std::size_t>(p)];
      }
      tables_[b][byte] = y;
    }
  }
}

}  // namespace hadspectra
