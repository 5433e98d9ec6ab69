// Command-line front end: construct, validate, measure, and verify
// stabilizer codes from files or builtins.
//
// Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stabgeo/clifford.hpp"
#include "stabgeo/code.hpp"
#include "stabgeo/distance.hpp"
#include "stabgeo/encode.hpp"
#include "stabgeo/gf2.hpp"
#include "stabgeo/pauli.hpp"
#include "stabgeo/rate.hpp"
#include "stabgeo/statevector.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A code source is either "builtin:<name>" or a code file path.
stabgeo::StabilizerCode load_code(const std::string& src) {
  constexpr std::string_view kPrefix = "builtin:";
  if (src.rfind(kPrefix, 0) == 0)
    return stabgeo::builtin(
        stabgeo::builtin_from_name(src.substr(kPrefix.size())));
  return stabgeo::StabilizerCode::from_text(read_file(src));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

std::vector<int> parse_character(const std::string& text, size_t count) {
  if (text.empty()) return std::vector<int>(count, +1);
  if (text.size() != count)
    throw std::invalid_argument("character needs one sign per generator (" +
                                std::to_string(count) + ")");
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+')
      signs.push_back(+1);
    else if (c == '-')
      signs.push_back(-1);
    else
      throw std::invalid_argument("character may contain only '+' and '-'");
  }
  return signs;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& src, bool strict) {
  stabgeo::StabilizerCode code = load_code(src);
  stabgeo::ValidationReport r = code.validate(strict);
  std::cout << "n: " << code.n() << "\n"
            << "generators: " << r.generator_count << "\n"
            << "rank: " << r.rank << "\n"
            << "dim_S: " << code.k_bar() << "\n"
            << "encoded_qubits: " << code.encoded_qubits() << "\n"
            << "dual_dim: " << code.dual_dim() << "\n"
            << "orthogonal: " << yes_no(r.orthogonal) << "\n"
            << "independent: " << yes_no(r.independent) << "\n";
  if (strict)
    std::cout << "totally_singular: " << yes_no(r.totally_singular) << "\n";
  for (auto [i, j] : r.form_failures)
    std::cout << "form failure: generators " << i << "," << j << "\n";
  for (auto [i, j] : r.singular_failures) {
    if (i == j)
      std::cout << "singularity failure: generator " << i << "\n";
    else
      std::cout << "singularity failure: generators " << i << "+" << j << "\n";
  }
  std::cout << "valid: " << yes_no(r.valid()) << "\n";
  return r.valid() ? kExitOk : kExitPropertyFails;
}

int cmd_distance(const std::string& src, bool exclude_stabilizer,
                 size_t workers, std::optional<uint64_t> budget,
                 bool as_json) {
  stabgeo::StabilizerCode code = load_code(src);
  stabgeo::DistanceOptions opts;
  opts.workers = workers;
  opts.budget = budget;
  stabgeo::DistanceReport r = stabgeo::distance(code, opts);
  if (as_json) {
    nlohmann::json out;
    out["n"] = code.n();
    out["k"] = code.encoded_qubits();
    out["dim_S"] = code.k_bar();
    out["d_dual"] = r.min_weight_dual;
    if (r.min_weight_dual_minus_S)
      out["d_dual_minus_S"] = *r.min_weight_dual_minus_S;
    else
      out["d_dual_minus_S"] = nullptr;
    out["witness"] = r.witness.to_string();
    if (r.witness_minus_S)
      out["witness_minus_S"] = r.witness_minus_S->to_string();
    else
      out["witness_minus_S"] = nullptr;
    out["vectors_scanned"] = r.vectors_scanned;
    out["complete"] = r.complete;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n: " << code.n() << "\n"
            << "dim_S: " << code.k_bar() << "\n"
            << "encoded_qubits: " << code.encoded_qubits() << "\n";
  // The headline number follows the flag; both figures are always listed.
  if (exclude_stabilizer && r.min_weight_dual_minus_S) {
    std::cout << "minimum_weight: " << *r.min_weight_dual_minus_S << "\n"
              << "witness: " << r.witness_minus_S->to_string() << "\n";
  } else {
    std::cout << "minimum_weight: " << r.min_weight_dual << "\n"
              << "witness: " << r.witness.to_string() << "\n";
  }
  std::cout << "min_weight_dual: " << r.min_weight_dual << "\n";
  if (r.min_weight_dual_minus_S)
    std::cout << "min_weight_dual_minus_S: " << *r.min_weight_dual_minus_S
              << "\n";
  else
    std::cout << "min_weight_dual_minus_S: none\n";
  std::cout << "vectors_scanned: " << r.vectors_scanned << "\n"
            << "complete: " << yes_no(r.complete) << "\n";
  return kExitOk;
}

int cmd_construct_qr(uint64_t p, const std::string& out_path) {
  stabgeo::StabilizerCode code = stabgeo::quadratic_residue_code(p);
  write_output(out_path, code.to_text());
  return kExitOk;
}

int cmd_construct_css(const std::string& classical_path,
                      const std::string& out_path) {
  stabgeo::GF2Matrix gen =
      stabgeo::parse_classical_matrix(read_file(classical_path));
  stabgeo::StabilizerCode code =
      stabgeo::css_from_classical(gen, gen.col_count());
  write_output(out_path, code.to_text());
  return kExitOk;
}

int cmd_codewords(const std::string& src, const std::string& character) {
  stabgeo::StabilizerCode code = load_code(src);
  std::vector<int> signs = parse_character(character, code.generator_count());
  std::vector<stabgeo::StateVector> basis =
      stabgeo::codespace_basis(code, signs);
  std::string out;
  for (size_t i = 0; i < basis.size(); ++i) {
    out += "# codeword " + std::to_string(i) + "\n";
    out += stabgeo::codeword_text(basis[i]);
  }
  std::cout << out;
  return kExitOk;
}

int cmd_correctable(const std::string& src, size_t t, bool statevector,
                    const std::string& character) {
  stabgeo::StabilizerCode code = load_code(src);
  std::vector<stabgeo::PauliElement> errors =
      stabgeo::weight_t_error_set(code.n(), t);
  std::cout << "errors: " << errors.size() << "\n";
  stabgeo::CorrectabilityResult geo = stabgeo::correctable(code, errors);
  std::cout << "correctable: " << yes_no(geo.correctable) << "\n";
  if (!geo.correctable)
    std::cout << "failing pair: " << geo.first << "," << geo.second << " ("
              << geo.e1.to_string() << ", " << geo.e2.to_string() << ")\n";
  bool ok = geo.correctable;
  if (statevector) {
    if (code.n() > 10)
      throw std::invalid_argument(
          "statevector cross-check supports at most 10 qubits");
    std::vector<int> signs =
        parse_character(character, code.generator_count());
    stabgeo::KLReport kl =
        stabgeo::verify_kl_conditions(code, signs, errors);
    std::cout << "statevector_conditions: " << yes_no(kl.satisfied) << "\n";
    if (kl.violation) {
      const stabgeo::KLViolation& v = *kl.violation;
      std::cout << "statevector violation: errors " << v.error1 << ","
                << v.error2 << " codewords " << v.c1 << "," << v.c2 << " ("
                << (v.off_diagonal ? "orthogonality" : "distinguishability")
                << ")\n";
    }
    if (kl.satisfied != geo.correctable) {
      std::cout << "verdict mismatch between geometry and statevector\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitPropertyFails;
}

int cmd_gv_rate(double delta) {
  std::ostringstream out;
  out.precision(15);
  out << "R: " << stabgeo::gv_rate(delta) << "\n";
  std::cout << out.str();
  return kExitOk;
}

// Deterministic generator suite: every single-qubit swap, the global swap,
// elementary basis changes, single-pair phase matrices, and the identity
// complex phase matrix. Real generators must preserve both forms; the
// complex one must keep the alternating form but break Q on a witness.
int cmd_clifford_check(size_t n) {
  using stabgeo::CliffordGen;
  using stabgeo::GF2Matrix;
  using stabgeo::SympMatrix;
  if (n == 0 || n > 16)
    throw std::invalid_argument("qubit count must lie in 1..16");
  bool all_ok = true;
  auto check_real = [&](const std::string& name, const SympMatrix& g) {
    bool alt = stabgeo::preserves_alternating_form(g);
    auto qv = stabgeo::quadratic_form_violation(g);
    bool ok = alt && !qv;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name
              << ": alternating=" << yes_no(alt)
              << " quadratic=" << yes_no(!qv) << "\n";
  };
  check_real("H_ALL", stabgeo::hadamard_all(n));
  for (size_t j = 1; j <= n; ++j)
    check_real("H " + std::to_string(j), stabgeo::hadamard_single(n, j));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      GF2Matrix a = GF2Matrix::identity(n);
      a.set(i, j, true);
      check_real("GL transvection " + std::to_string(i + 1) + "," +
                     std::to_string(j + 1),
                 stabgeo::gl_action(a));
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      GF2Matrix m(n, n);
      m.set(i, j, true);
      m.set(j, i, true);
      check_real("DM pair " + std::to_string(i + 1) + "," +
                     std::to_string(j + 1),
                 stabgeo::diag_action(m));
    }
  {
    SympMatrix g = stabgeo::diag_action_complex(GF2Matrix::identity(n));
    bool alt = stabgeo::preserves_alternating_form(g);
    auto qv = stabgeo::quadratic_form_violation(g);
    bool ok = alt && qv.has_value();
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << "DP identity: alternating="
              << yes_no(alt) << " quadratic_broken=" << yes_no(qv.has_value());
    if (qv) std::cout << " witness=" << qv->to_string();
    std::cout << "\n";
  }
  std::cout << "all: " << yes_no(all_ok) << "\n";
  return all_ok ? kExitOk : kExitPropertyFails;
}

int cmd_encode_map(const std::string& src) {
  stabgeo::StabilizerCode code = load_code(src);
  stabgeo::SympMatrix g = stabgeo::synthesize_encoding(code);
  std::cout << "n: " << code.n() << "\n" << "word:\n" << g.word_text();
  std::cout << "matrix:\n";
  for (size_t i = 0; i < 2 * code.n(); ++i)
    std::cout << stabgeo::SympVector::from_row(g.matrix().row(i)).to_string()
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-code toolkit"};
  app.require_subcommand(1);

  std::string src, out_path, classical_path, character;
  bool strict = false, exclude_stabilizer = false, as_json = false;
  bool statevector = false;
  size_t workers = 0, t = 0, cn = 0;
  std::optional<uint64_t> budget;
  uint64_t p = 0;
  double delta = 0.0;

  CLI::App* validate = app.add_subcommand("validate", "check the code axioms");
  validate->add_option("src", src, "code file or builtin:<name>")->required();
  validate->add_flag("--strict", strict, "also require total singularity");

  CLI::App* dist = app.add_subcommand("distance", "minimum-weight search");
  dist->add_option("src", src, "code file or builtin:<name>")->required();
  dist->add_flag("--exclude-stabilizer", exclude_stabilizer,
                 "headline the minimum outside the stabilizer subspace");
  dist->add_option("--workers", workers, "worker threads (default: env/cores)");
  dist->add_option("--budget", budget, "cap on vectors to scan");
  dist->add_flag("--json", as_json, "machine-readable report");

  CLI::App* construct = app.add_subcommand("construct", "build a code file");
  construct->require_subcommand(1);
  CLI::App* qr = construct->add_subcommand(
      "qr", "quadratic-residue code for a prime = 5 mod 8");
  qr->add_option("--p", p, "prime length")->required();
  qr->add_option("--out", out_path, "output path (default: stdout)");
  CLI::App* css = construct->add_subcommand(
      "css", "from a dual-containing classical code");
  css->add_option("--classical", classical_path,
                  "generator matrix file of the classical code")
      ->required();
  css->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* codewords =
      app.add_subcommand("codewords", "dump a codespace basis");
  codewords->add_option("src", src, "code file or builtin:<name>")->required();
  codewords->add_option("--character", character,
                        "one +/- per generator (default: all +)");

  CLI::App* correct = app.add_subcommand(
      "correctable", "pairwise error-correctability check");
  correct->add_option("src", src, "code file or builtin:<name>")->required();
  correct->add_option("--t", t, "maximum error weight")->required();
  correct->add_flag("--statevector", statevector,
                    "cross-check in Hilbert space (n <= 10)");
  correct->add_option("--character", character,
                      "eigenspace for the cross-check (default: all +)");

  CLI::App* gv = app.add_subcommand("gv-rate", "achievable-rate bound");
  gv->add_option("--delta", delta, "decohered fraction, in [0, 0.25)")
      ->required();

  CLI::App* cliff = app.add_subcommand(
      "clifford-check", "form preservation of the generator actions");
  cliff->add_option("--n", cn, "qubit count")->required();

  CLI::App* encode =
      app.add_subcommand("encode-map", "synthesize an encoding symmetry");
  encode->add_option("src", src, "code file or builtin:<name>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(src, strict);
    if (*dist)
      return cmd_distance(src, exclude_stabilizer, workers, budget, as_json);
    if (*qr) return cmd_construct_qr(p, out_path);
    if (*css) return cmd_construct_css(classical_path, out_path);
    if (*codewords) return cmd_codewords(src, character);
    if (*correct) return cmd_correctable(src, t, statevector, character);
    if (*gv) return cmd_gv_rate(delta);
    if (*cliff) return cmd_clifford_check(cn);
    if (*encode) return cmd_encode_map(src);
  } catch (const stabgeo::css_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
