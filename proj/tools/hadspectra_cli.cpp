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

// hadspectra: build, certify and verify Hadamard matrices with cyclotomic
// minimal polynomials, and map Butson matrices to real Hadamard matrices.
//
// Exit codes: 0 ok, 1 a check failed, 2 bad arguments, 3 I/O error,
// 4 malformed input file.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hadspectra/butson.hpp"
#include "hadspectra/construct.hpp"
#include "hadspectra/errors.hpp"
#include "hadspectra/io.hpp"
#include "hadspectra/morphism.hpp"
#include "hadspectra/sylvester.hpp"

namespace
{

using namespace hadspectra;

enum Exit
{
  kOk = 0,
  kCheckFailed = 1,
  kBadArgs = 2,
  kIo = 3,
  kParse = 4,
};

// Raised for argument combinations the parser cannot express.
class UsageError : public Error
{
public:
  using Error::Error;
};

struct Options
{
  int t = 0;
  int n = 0;
  std::string in;
  std::string out;
  std::string format = "text";
  bool normalized = false;
  bool full_gram = false;
  bool allow_large = false;
  unsigned threads = 1;
};

class Timer
{
public:
  ~Timer()
  {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    std::fprintf(stderr, "runtime_seconds: %.3f\n", d.count());
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

MatrixFormat parse_format(const std::string & f)
{
  return f == "packed" ? MatrixFormat::kPacked : MatrixFormat::kText;
}

void emit_real(const PackedSignMatrix & h, const Options & o)
{
  if (!o.out.empty()) {
    write_matrix_file(o.out, h, parse_format(o.format));
    return;
  }
  if (parse_format(o.format) == MatrixFormat::kPacked) {
    write_packed(std::cout, h);
  } else {
    write_text(std::cout, h);
  }
  std::cout.flush();
}

void require_input(const Options & o)
{
  if (o.in.empty()) throw UsageError("an input file is required (--in or positional)");
}

int cmd_construct(const Options & o)
{
  Timer timer;
  const ConstructionBundle b = build_Ht(o.t, o.threads);
  const CycleSpectrum spectrum = mono_cycles(b.PQ);
  emit_real(b.H, o);
  // Keep stdout clean when the matrix itself goes there.
  std::FILE * info = o.out.empty() ? stderr : stdout;
  std::fprintf(info, "order: %zu\nsign_s: %d\norbit_count: %zu\n", b.order, b.s, spectrum.cycles.size());
  return kOk;
}

int cmd_certify(const Options & o)
{
  Timer timer;
  if (o.t == 0 && o.in.empty()) throw UsageError("certify needs --t or an input file");
  if (o.t != 0 && !o.in.empty()) throw UsageError("certify takes --t or an input file, not both");
  CertifyOptions opts;
  opts.full_gram = o.full_gram;
  opts.threads = o.threads;
  if (o.t != 0) {
    std::cout << certificate_json(certify(build_Ht(o.t, o.threads), opts));
    return kOk;
  }
  PackedSignMatrix h = read_matrix_file(o.in).as_real();
  const std::optional<int> t = construction_level_for_order(h.order());
  if (!t || *t > kMaxMaterializedT) {
    std::cerr << "certify: order " << h.order() << " is not the order of any H_t with 2 <= t <= 5\n";
    return kCheckFailed;
  }
  ConstructionBundle b = build_Ht(*t, o.threads);
  b.H = std::move(h);
  std::cout << certificate_json(certify(b, opts));
  return kOk;
}

int cmd_verify(const Options & o)
{
  require_input(o);
  Timer timer;
  const LoadedMatrix m = read_matrix_file(o.in);
  const std::size_t order = m.is_real() ? std::get<PackedSignMatrix>(m.matrix).order() : m.as_butson().order();
  if (order > kDefaultGramLimit && !o.full_gram) {
    throw UsageError("order " + std::to_string(order) + " exceeds 4096; pass --full-gram to verify it");
  }
  OrthogonalityReport r;
  if (m.is_real()) {
    r = verify_hadamard_packed(std::get<PackedSignMatrix>(m.matrix), o.threads);
    std::cout << "kind: real Hadamard\n";
  } else {
    const ButsonMatrix & b = std::get<ButsonMatrix>(m.matrix);
    r = verify_butson(b, o.threads);
    std::cout << "kind: Butson k=" << b.root_order() << "\n";
  }
  std::cout << "order: " << order << "\n";
  std::cout << "pairs_checked: " << r.pairs_checked << "\n";
  std::cout << "orthogonality: " << (r.passed ? "pass" : "fail") << "\n";
  if (!r.passed) {
    std::cout << "first_failure: rows " << r.first_failure->first << " and " << r.first_failure->second << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_charpoly(const Options & o)
{
  require_input(o);
  const PackedSignMatrix h = read_matrix_file(o.in).as_real();
  const IntPoly chi = charpoly_exact(h.to_dense());
  if (o.normalized) {
    std::cout << normalize_charpoly(chi, h.order()).to_string() << "\n";
  } else {
    std::cout << chi.to_string() << "\n";
  }
  return kOk;
}

int cmd_minpoly(const Options & o)
{
  if ((o.t == 0) == o.in.empty()) throw UsageError("minpoly takes exactly one of --t or an input file");
  std::optional<IntPoly> p;
  if (o.t != 0) {
    const ConstructionBundle b = build_Ht(o.t, o.threads);
    CertifyOptions opts;
    opts.threads = o.threads;
    p = minpoly_pow2_detect(b.H, certify(b, opts));
  } else {
    p = minpoly_pow2_detect(read_matrix_file(o.in).as_real());
  }
  if (!p) {
    std::cout << "none\n";
    return kCheckFailed;
  }
  std::cout << p->to_string() << "\n";
  return kOk;
}

int cmd_morph(const Options & o)
{
  require_input(o);
  if (o.out.empty() && parse_format(o.format) == MatrixFormat::kPacked) {
    throw UsageError("packed output needs --out");
  }
  Timer timer;
  const ButsonMatrix b = read_matrix_file(o.in).as_butson();
  MorphOptions mo;
  mo.full_gram = o.full_gram;
  mo.threads = o.threads;
  const PackedSignMatrix h = morph_to_real(b, o.t, mo);
  emit_real(h, o);
  std::FILE * info = o.out.empty() ? stderr : stdout;
  std::fprintf(info, "order: %zu\n", h.order());
  return kOk;
}

int cmd_sylvester(const Options & o)
{
  emit_real(sylvester(o.n), o);
  return kOk;
}

int cmd_orbits(const Options & o)
{
  Timer timer;
  const OrbitAudit a = orbit_audit(o.t, o.allow_large);
  std::cout << orbit_audit_json(a);
  return a.all_lengths_expected && a.gamma_pairings_all_one ? kOk : kCheckFailed;
}

int run(int argc, char ** argv)
{
  CLI::App app{"Hadamard matrices with cyclotomic minimal polynomials"};
  app.require_subcommand(1);
  Options o;

  const auto add_t = [&](CLI::App * sub, bool required) {
    auto * opt = sub->add_option("--t", o.t, "Construction level");
    if (required) opt->required();
  };
  const auto add_in = [&](CLI::App * sub) {
    sub->add_option("--in,in", o.in, "Input matrix file");
  };
  const auto add_out = [&](CLI::App * sub) {
    sub->add_option("--out,out", o.out, "Output file (stdout when omitted)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "packed"}));
  };
  const auto add_threads = [&](CLI::App * sub) {
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  std::map<CLI::App *, int (*)(const Options &)> handlers;

  auto * construct = app.add_subcommand("construct", "Build H_t and write it");
  add_t(construct, true);
  add_out(construct);
  add_threads(construct);
  handlers[construct] = cmd_construct;

  auto * cert = app.add_subcommand("certify", "Certify m(N^{-1/2} H_t) = Phi_{2^{t+1}} and print the certificate");
  add_t(cert, false);
  add_in(cert);
  cert->add_flag("--full-gram", o.full_gram, "Run the Gram check above order 4096");
  add_threads(cert);
  handlers[cert] = cmd_certify;

  auto * verify = app.add_subcommand("verify", "Check row orthogonality of a real or Butson matrix");
  add_in(verify);
  verify->add_flag("--full-gram", o.full_gram, "Allow orders above 4096");
  add_threads(verify);
  handlers[verify] = cmd_verify;

  auto * charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial (order <= 128)");
  add_in(charpoly);
  charpoly->add_flag("--normalized", o.normalized, "Print the polynomial of N^{-1/2} H");
  handlers[charpoly] = cmd_charpoly;

  auto * minpoly = app.add_subcommand("minpoly", "Detect a minimal polynomial x^{2^s} + 1");
  add_t(minpoly, false);
  add_in(minpoly);
  add_threads(minpoly);
  handlers[minpoly] = cmd_minpoly;

  auto * morph = app.add_subcommand("morph", "Map BH(n, 2^t) to a real Hadamard matrix of order 2^(2^(t-1)-1) n");
  add_t(morph, true);
  add_in(morph);
  add_out(morph);
  morph->add_flag("--full-gram", o.full_gram, "Verify the output above order 4096");
  add_threads(morph);
  handlers[morph] = cmd_morph;

  auto * syl = app.add_subcommand("sylvester", "Write the Sylvester matrix S_n");
  syl->add_option("--n", o.n, "Tensor power")->required();
  add_out(syl);
  handlers[syl] = cmd_sylvester;

  auto * orbits = app.add_subcommand("orbits", "Audit orbits of x -> Lx + v on F_2^n");
  add_t(orbits, true);
  orbits->add_flag("--allow-large", o.allow_large, "Permit t = 6 (2^31 points)");
  handlers[orbits] = cmd_orbits;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kBadArgs;
  }

  CLI::App * chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o);
  } catch (const CertificateFailure & e) {
    std::cerr << "FAILED check " << e.check() << ": " << e.what() << "\n";
    return kCheckFailed;
  } catch (const UnsoundPair & e) {
    std::cerr << "unsound pair: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InvalidInput & e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const IoError & e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError & e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error & e) {
    // Range, size and root-order errors all come from the arguments.
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
}

}  // namespace

int main(int argc, char ** argv)
{
  try {
    return run(argc, argv);
  } catch (const std::bad_alloc &) {
    std::cerr << "error: out of memory\n";
    return kIo;
  }
}
