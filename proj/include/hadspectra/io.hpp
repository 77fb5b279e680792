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

#ifndef HADSPECTRA_IO_HPP_
#define HADSPECTRA_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "hadspectra/butson.hpp"
#include "hadspectra/construct.hpp"
#include "hadspectra/morphism.hpp"
#include "hadspectra/packed.hpp"

namespace hadspectra
{

// File formats:
//   text    "HAD <N>" then N lines of N characters from {+,-}
//   packed  "HADB", N as 8 bytes little-endian, then N rows of ceil(N/8)
//           bytes; bit 1 is -1, column c is bit c % 8 of byte c / 8
//   butson  "BH <n> <k>" then n lines of n exponents in [0, k)
enum class MatrixFormat
{
  kText,
  kPacked,
  kButson,
};

void write_text(std::ostream & os, const PackedSignMatrix & h);
PackedSignMatrix read_text(std::istream & is);

void write_packed(std::ostream & os, const PackedSignMatrix & h);
PackedSignMatrix read_packed(std::istream & is);

void write_butson(std::ostream & os, const ButsonMatrix & b);
ButsonMatrix read_butson(std::istream & is);

/// A matrix read from disk, in whichever form the file holds.
struct LoadedMatrix
{
  MatrixFormat format = MatrixFormat::kText;
  std::variant<PackedSignMatrix, ButsonMatrix> matrix;

  bool is_real() const { return std::holds_alternative<PackedSignMatrix>(matrix); }
  /// The real matrix; a Butson file with k <= 2 is converted.
  PackedSignMatrix as_real() const;
  /// The Butson view; real matrices become k = 2.
  ButsonMatrix as_butson() const;
};

/// Detects the format from the first bytes. Throws IoError or ParseError.
LoadedMatrix read_matrix_file(const std::filesystem::path & path);

void write_matrix_file(const std::filesystem::path & path, const PackedSignMatrix & h, MatrixFormat format);
void write_matrix_file(const std::filesystem::path & path, const ButsonMatrix & b);

/// Certificate as JSON with a fixed key order.
std::string certificate_json(const SpectralCertificate & cert);
std::string orbit_audit_json(const OrbitAudit & audit);
std::string sound_pair_json(const SoundPairReport & report);

}  // namespace hadspectra

#endif  // HADSPECTRA_IO_HPP_
