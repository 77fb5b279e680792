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

#include "hadspectra/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hadspectra/errors.hpp"

namespace hadspectra
{

namespace
{

// Largest order any format will allocate for; 2^20 rows of 2^20 bits is 128 GiB
// so real inputs stay far below it.
constexpr std::uint64_t kMaxFileOrder = std::uint64_t{1} << 20;

std::string next_line(std::istream & is, const char * what)
{
  std::string line;
  if (!std::getline(is, line)) throw ParseError(std::string("unexpected end of input while reading ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::uint64_t parse_count(const std::string & tok, const char * what)
{
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 12) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
  return std::stoull(tok);
}

void check_order(std::uint64_t n)
{
  if (n == 0 || n > kMaxFileOrder) throw ParseError("matrix order " + std::to_string(n) + " out of range");
}

}  // namespace

void write_text(std::ostream & os, const PackedSignMatrix & h)
{
  const std::size_t n = h.order();
  os << "HAD " << n << '\n';
  std::string line(n, '+');
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) line[c] = h.is_negative(r, c) ? '-' : '+';
    os << line << '\n';
  }
  if (!os) throw IoError("write failed");
}

PackedSignMatrix read_text(std::istream & is)
{
  std::istringstream header(next_line(is, "header"));
  std::string magic, count, extra;
  header >> magic >> count;
  if (magic != "HAD" || (header >> extra)) throw ParseError("expected header 'HAD <N>'");
  const std::uint64_t n = parse_count(count, "order");
  check_order(n);
  PackedSignMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string line = next_line(is, "matrix row");
    if (line.size() != n) {
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(line.size()) + " characters, expected " +
                       std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (line[c] == '-') {
        h.set_negative(r, c, true);
      } else if (line[c] != '+') {
        throw ParseError("row " + std::to_string(r) + " contains '" + std::string(1, line[c]) + "'");
      }
    }
  }
  std::string rest;
  while (std::getline(is, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing data after matrix");
  }
  return h;
}

void write_packed(std::ostream & os, const PackedSignMatrix & h)
{
  const std::uint64_t n = h.order();
  os.write("HADB", 4);
  std::array<char, 8> len{};
  for (int i = 0; i < 8; ++i) len[i] = static_cast<char>((n >> (8 * i)) & 0xffu);
  os.write(len.data(), len.size());
  const std::size_t bytes = (n + 7) / 8;
  std::vector<char> buf(bytes);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = h.row(r);
    for (std::size_t i = 0; i < bytes; ++i) {
      buf[i] = static_cast<char>((row[i / 8] >> (8 * (i % 8))) & 0xffu);
    }
    os.write(buf.data(), static_cast<std::streamsize>(bytes));
  }
  if (!os) throw IoError("write failed");
}

PackedSignMatrix read_packed(std::istream & is)
{
  std::array<char, 12> head{};
  if (!is.read(head.data(), head.size())) throw ParseError("truncated packed header");
  if (std::string(head.data(), 4) != "HADB") throw ParseError("missing HADB magic");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t{static_cast<unsigned char>(head[4 + i])} << (8 * i);
  check_order(n);
  PackedSignMatrix h(n);
  const std::size_t bytes = (n + 7) / 8;
  std::vector<char> buf(bytes);
  const std::uint64_t tail = h.tail_mask();
  for (std::size_t r = 0; r < n; ++r) {
    if (!is.read(buf.data(), static_cast<std::streamsize>(bytes))) {
      throw ParseError("truncated packed data at row " + std::to_string(r));
    }
    auto row = h.row(r);
    for (std::size_t i = 0; i < bytes; ++i) {
      row[i / 8] |= std::uint64_t{static_cast<unsigned char>(buf[i])} << (8 * (i % 8));
    }
    if (row.back() & ~tail) throw ParseError("nonzero padding bits in row " + std::to_string(r));
  }
  if (is.peek() != std::char_traits<char>::eof()) throw ParseError("trailing data after packed matrix");
  return h;
}

void write_butson(std::ostream & os, const ButsonMatrix & b)
{
  const std::size_t n = b.order();
  os << "BH " << n << ' ' << b.root_order() << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) os << ' ';
      os << b.exp(r, c);
    }
    os << '\n';
  }
  if (!os) throw IoError("write failed");
}

ButsonMatrix read_butson(std::istream & is)
{
  std::istringstream header(next_line(is, "header"));
  std::string magic, ns, ks, extra;
  header >> magic >> ns >> ks;
  if (magic != "BH" || (header >> extra)) throw ParseError("expected header 'BH <n> <k>'");
  const std::uint64_t n = parse_count(ns, "order");
  const std::uint64_t k = parse_count(ks, "root order");
  check_order(n);
  if (n > 8192) throw ParseError("Butson order " + std::to_string(n) + " too large for the text format");
  if (k == 0 || k > std::numeric_limits<std::uint32_t>::max() / 2) throw ParseError("root order out of range");
  ButsonMatrix b(n, static_cast<std::uint32_t>(k));
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream row(next_line(is, "matrix row"));
    std::string tok;
    std::size_t c = 0;
    while (row >> tok) {
      if (c == n) throw ParseError("row " + std::to_string(r) + " has more than " + std::to_string(n) + " entries");
      const std::uint64_t e = parse_count(tok, "exponent");
      if (e >= k) throw ParseError("exponent " + tok + " not in [0, " + std::to_string(k) + ")");
      b.set_exp(r, c++, static_cast<long long>(e));
    }
    if (c != n) throw ParseError("row " + std::to_string(r) + " has " + std::to_string(c) + " entries");
  }
  std::string rest;
  while (std::getline(is, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing data after matrix");
  }
  return b;
}

PackedSignMatrix LoadedMatrix::as_real() const
{
  if (const auto * p = std::get_if<PackedSignMatrix>(&matrix)) return *p;
  const ButsonMatrix & b = std::get<ButsonMatrix>(matrix);
  if (b.root_order() > 2) throw InvalidInput("Butson matrix with k = " + std::to_string(b.root_order()) + " is not real");
  return to_packed(b);
}

ButsonMatrix LoadedMatrix::as_butson() const
{
  if (const auto * b = std::get_if<ButsonMatrix>(&matrix)) return *b;
  return from_packed(std::get<PackedSignMatrix>(matrix));
}

LoadedMatrix read_matrix_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  const std::string head(magic.data(), static_cast<std::size_t>(in.gcount()));
  in.clear();
  in.seekg(0);
  LoadedMatrix out;
  if (head == "HADB") {
    out.format = MatrixFormat::kPacked;
    out.matrix = read_packed(in);
  } else if (head.rfind("HAD", 0) == 0) {
    out.format = MatrixFormat::kText;
    out.matrix = read_text(in);
  } else if (head.rfind("BH", 0) == 0) {
    out.format = MatrixFormat::kButson;
    out.matrix = read_butson(in);
  } else {
    throw ParseError(path.string() + ": unrecognized matrix format");
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return out;
}

namespace
{

template <class Fn>
void write_file(const std::filesystem::path & path, Fn && fn)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  fn(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

nlohmann::ordered_json poly_json(const IntPoly & p)
{
  nlohmann::ordered_json j;
  j["text"] = p.to_string();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const BigInt & c : p.coeffs()) coeffs.push_back(c.str());
  j["coefficients_ascending"] = coeffs;
  return j;
}

}  // namespace

void write_matrix_file(const std::filesystem::path & path, const PackedSignMatrix & h, MatrixFormat format)
{
  switch (format) {
    case MatrixFormat::kText: write_file(path, [&](std::ostream & os) { write_text(os, h); }); break;
    case MatrixFormat::kPacked: write_file(path, [&](std::ostream & os) { write_packed(os, h); }); break;
    case MatrixFormat::kButson: write_file(path, [&](std::ostream & os) { write_butson(os, from_packed(h)); }); break;
  }
}

void write_matrix_file(const std::filesystem::path & path, const ButsonMatrix & b)
{
  write_file(path, [&](std::ostream & os) { write_butson(os, b); });
}

std::string certificate_json(const SpectralCertificate & cert)
{
  nlohmann::ordered_json j;
  j["t"] = cert.t;
  j["n"] = cert.n;
  j["N"] = cert.order;
  j["s"] = cert.s;
  j["orbit_count"] = cert.orbit_count;
  j["all_lengths"] = cert.all_lengths;
  j["all_products_minus_one"] = cert.all_products_minus_one;
  j["minpoly_PQ"] = poly_json(cert.minpoly_PQ);
  j["concluded_minpoly_normalized"] = poly_json(cert.concluded_minpoly_normalized);
  j["closed_form_sign"] = cert.closed_form_sign;
  j["check_H2"] = cert.check_H2 ? nlohmann::ordered_json(*cert.check_H2) : nlohmann::ordered_json(nullptr);
  j["hadamard_gram"] = cert.hadamard_gram ? nlohmann::ordered_json(*cert.hadamard_gram) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CertificateCheck & c : cert.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string orbit_audit_json(const OrbitAudit & audit)
{
  nlohmann::ordered_json j;
  j["t"] = audit.t;
  j["points"] = audit.points;
  j["orbit_count"] = audit.orbit_count;
  j["expected_length"] = audit.expected_length;
  j["common_length"] =
    audit.common_length ? nlohmann::ordered_json(*audit.common_length) : nlohmann::ordered_json(nullptr);
  j["all_lengths_expected"] = audit.all_lengths_expected;
  j["gamma_pairings_all_one"] = audit.gamma_pairings_all_one;
  return j.dump(2) + "\n";
}

std::string sound_pair_json(const SoundPairReport & report)
{
  const auto results = [](const std::vector<ConditionResult> & rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ConditionResult & r : rs) {
      nlohmann::ordered_json e;
      e["j"] = r.exponent;
      e["status"] = to_string(r.status);
      e["detail"] = r.detail;
      arr.push_back(e);
    }
    return arr;
  };
  nlohmann::ordered_json j;
  j["k"] = report.root_order;
  j["X"] = report.X;
  j["Y"] = report.Y;
  j["condition1"] = results(report.cond1_results);
  j["condition2"] = results(report.cond2_results);
  j["sound"] = report.sound;
  return j.dump(2) + "\n";
}

}  // namespace hadspectra
