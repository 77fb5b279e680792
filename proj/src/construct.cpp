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

#include "hadspectra/construct.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "hadspectra/butson.hpp"
#include "hadspectra/errors.hpp"
#include "hadspectra/sylvester.hpp"

namespace hadspectra
{

namespace
{

int dimension_for(int t) { return (1 << (t - 1)) - 1; }

Vec2 construction_a(int n)
{
  Vec2 a = Vec2::ones(n);
  a.set(0, 0);
  return a;
}

}  // namespace

ConstructionBundle build_Ht(int t, unsigned threads)
{
  if (t < 2 || t > kMaxMaterializedT) {
    throw OutOfRange("build_Ht: t must lie in 2..5, got " + std::to_string(t));
  }
  ConstructionBundle bundle;
  bundle.t = t;
  bundle.n = dimension_for(t);
  bundle.order = std::size_t{1} << bundle.n;
  bundle.a = construction_a(bundle.n);
  bundle.b = Vec2::ones(bundle.n);
  bundle.A = build_A(t);
  const Mat2 inv_t = mat2_inverse(bundle.A).transpose();

  bundle.P = mono_compose(mono_compose(diag_sign(bundle.a), translation(bundle.b)), rho(bundle.A));
  bundle.Q = mono_compose(mono_compose(translation(bundle.a), diag_sign(bundle.b)), rho(inv_t));
  bundle.PQ = mono_compose(bundle.P, bundle.Q);
  bundle.PQ_closed = pq_closed_form(GroupElt{bundle.a, bundle.b, bundle.A});
  const auto sign = relative_sign(bundle.PQ, bundle.PQ_closed);
  if (!sign) {
    throw Error("build_Ht: PQ differs from its closed form by more than a sign");
  }
  bundle.closed_form_sign = *sign;

  // H = P S_n row by row: row c of S_n moves to row dest(c), complemented when
  // the scalar is -1.
  bundle.H = PackedSignMatrix(bundle.order);
  const int n = bundle.n;
  parallel_rows(bundle.order, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const std::size_t r = bundle.P.dest(c);
      sylvester_row(n, c, bundle.H.row(r));
      if (bundle.P.scale(c) == 1) bundle.H.negate_row(r);
    }
  });
  bundle.s = apply_pair_sylvester(bundle.P, bundle.Q, n, threads);
  return bundle;
}

OrbitAudit orbit_audit(int t, bool allow_large)
{
  if (t < 2 || t > 6) {
    throw OutOfRange("orbit_audit: t must lie in 2..6, got " + std::to_string(t));
  }
  if (t == 6 && !allow_large) {
    throw OutOfRange("orbit_audit: t = 6 enumerates 2^31 points; pass allow_large to run it");
  }
  const int n = dimension_for(t);
  OrbitAudit audit;
  audit.t = t;
  audit.points = std::uint64_t{1} << n;
  audit.expected_length = std::uint64_t{1} << (t - 1);
  const AffineMap step(jordan_block(n), Vec2::unit(n, n - 1));
  const std::uint64_t first_coord = std::uint64_t{1} << (n - 1);

  std::vector<std::uint64_t> seen((audit.points + 63) / 64, 0);
  bool uniform = true;
  bool gamma_ok = true;
  std::uint64_t length0 = 0;
  for (std::uint64_t start = 0; start < audit.points; ++start) {
    if ((seen[start / 64] >> (start % 64)) & 1u) continue;
    std::uint64_t x = start;
    std::uint64_t length = 0;
    std::uint64_t gamma = 0;
    do {
      seen[x / 64] |= std::uint64_t{1} << (x % 64);
      gamma ^= x;
      ++length;
      x = step(x);
    } while (x != start);
    if (audit.orbit_count == 0) length0 = length;
    if (length != length0) uniform = false;
    if (!(gamma & first_coord)) gamma_ok = false;
    ++audit.orbit_count;
  }
  if (uniform) audit.common_length = length0;
  audit.all_lengths_expected = uniform && length0 == audit.expected_length;
  audit.gamma_pairings_all_one = gamma_ok;
  return audit;
}

namespace
{

void record(SpectralCertificate & cert, const std::string & name, bool ok, const std::string & detail)
{
  cert.checks.push_back({name, ok, detail});
  if (!ok) throw CertificateFailure(name, detail);
}

bool h_equals_p_times_sylvester(const ConstructionBundle & b, unsigned threads)
{
  bool all = true;
  std::mutex m;
  parallel_rows(b.order, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> buf(b.H.words_per_row());
    bool local = true;
    for (std::size_t c = begin; c < end && local; ++c) {
      sylvester_row(b.n, c, buf);
      const std::size_t r = b.P.dest(c);
      const std::uint64_t flip = b.P.scale(c) == 1 ? ~std::uint64_t{0} : 0;
      const auto got = b.H.row(r);
      for (std::size_t w = 0; w < buf.size(); ++w) {
        const std::uint64_t mask = w + 1 == buf.size() ? b.H.tail_mask() : ~std::uint64_t{0};
        if (((buf[w] ^ flip) ^ got[w]) & mask) {
          local = false;
          break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(m);
    all = all && local;
  });
  return all;
}

}  // namespace

SpectralCertificate certify(const ConstructionBundle & b, const CertifyOptions & options)
{
  SpectralCertificate cert;
  cert.t = b.t;
  cert.n = b.n;
  cert.order = b.order;
  cert.s = b.s;
  cert.closed_form_sign = b.closed_form_sign;
  const std::uint64_t cycle_length = std::uint64_t{1} << (b.t - 1);

  const bool shape_ok = b.H.order() == b.order && b.P.size() == b.order && b.Q.size() == b.order &&
                        b.PQ.size() == b.order && b.PQ_closed.size() == b.order;
  record(cert, "shape", shape_ok, "bundle components all have order " + std::to_string(b.order));

  if (b.order <= kDefaultGramLimit || options.full_gram) {
    const OrthogonalityReport gram = verify_hadamard_packed(b.H, options.threads);
    cert.hadamard_gram = gram.passed;
    record(cert, "hadamard_gram", gram.passed,
           gram.passed ? "all row pairs orthogonal"
                       : "rows " + std::to_string(gram.first_failure->first) + " and " +
                           std::to_string(gram.first_failure->second) + " are not orthogonal");
  }

  if (b.order <= static_cast<std::size_t>(kDenseOracleCap)) {
    const IntMatrix h = b.H.to_dense();
    const IntMatrix lhs = h * h;
    const IntMatrix rhs = static_cast<std::int64_t>(b.s) * static_cast<std::int64_t>(b.order) * b.PQ.to_dense();
    cert.check_H2 = lhs == rhs;
    record(cert, "check_H2", *cert.check_H2, "dense H^2 = s N PQ");
  }

  record(cert, "h_equals_P_S", h_equals_p_times_sylvester(b, options.threads), "H = P S_n bit for bit");

  int observed = 0;
  try {
    observed = apply_pair_sylvester(b.P, b.Q, b.n, options.threads);
  } catch (const NotScalarAction &) {
    record(cert, "scalar_action", false, "P S_n Q^T is not +-S_n");
  }
  record(cert, "scalar_action", observed == b.s,
         "P S_n Q^T = " + std::to_string(observed) + " S_n, bundle records s = " + std::to_string(b.s));

  record(cert, "pq_is_product", mono_compose(b.P, b.Q) == b.PQ, "PQ equals the product of P and Q");

  const Vec2 u = Vec2::unit(b.n, 0);
  const Vec2 v = Vec2::unit(b.n, b.n - 1);
  const MonomialMatrix expected_closed =
    mono_compose(mono_compose(diag_sign(u), translation(v)), rho(jordan_block(b.n)));
  record(cert, "closed_form", b.PQ_closed == expected_closed && relative_sign(b.PQ, b.PQ_closed) == b.closed_form_sign,
         "PQ = " + std::to_string(b.closed_form_sign) + " * D_u T_v rho(L)");

  const CycleSpectrum spectrum = mono_cycles(b.PQ);
  cert.orbit_count = spectrum.cycles.size();
  const bool lengths_ok = std::all_of(spectrum.cycles.begin(), spectrum.cycles.end(),
                                      [&](const Cycle & c) { return c.length() == cycle_length; });
  cert.all_lengths = lengths_ok ? cycle_length : 0;
  record(cert, "cycle_lengths", lengths_ok,
         std::to_string(cert.orbit_count) + " cycles, expected common length " + std::to_string(cycle_length));

  cert.all_products_minus_one = std::all_of(spectrum.cycles.begin(), spectrum.cycles.end(),
                                            [](const Cycle & c) { return c.exponent == 1; });
  record(cert, "cycle_products", cert.all_products_minus_one, "every cycle product is -1");

  cert.minpoly_PQ = mono_minpoly(b.PQ);
  const IntPoly phi_pq = cyclotomic_poly(cycle_length * 2);
  record(cert, "minpoly_PQ", cert.minpoly_PQ == phi_pq,
         "m(PQ) = " + cert.minpoly_PQ.to_string() + ", expected " + phi_pq.to_string());

  cert.concluded_minpoly_normalized = cyclotomic_poly(cycle_length * 4);
  return cert;
}

MonomialMatrix hadamard_power_factor(const ConstructionBundle & bundle, long long j)
{
  if (j % 2 == 0) {
    throw EvenPower("hadamard_power: j must be odd, got " + std::to_string(j));
  }
  if (j < 1) {
    throw OutOfRange("hadamard_power: j must be at least 1");
  }
  const long long half = (j - 1) / 2;
  MonomialMatrix factor = mono_power(bundle.PQ, half);
  if (bundle.s == -1 && half % 2 == 1) factor = factor.negated();
  return factor;
}

PackedSignMatrix hadamard_power(const ConstructionBundle & bundle, long long j, unsigned threads)
{
  return mono_apply_left(hadamard_power_factor(bundle, j), bundle.H, threads);
}

std::optional<IntPoly> minpoly_pow2_detect(const PackedSignMatrix & h, const SpectralCertificate & cert)
{
  if (h.order() != cert.order || cert.concluded_minpoly_normalized.is_zero()) return std::nullopt;
  return cert.concluded_minpoly_normalized;
}

std::optional<int> construction_level_for_order(std::size_t order)
{
  for (int t = 2; t <= 6; ++t) {
    if (order == (std::size_t{1} << dimension_for(t))) return t;
  }
  return std::nullopt;
}

}  // namespace hadspectra
