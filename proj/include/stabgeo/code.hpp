#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabgeo/gf2.hpp"
#include "stabgeo/pauli.hpp"

namespace stabgeo {

// Outcome of checking the stabilizer axioms. `form_failures` lists generator
// index pairs (i, j), i < j, whose alternating form is nonzero;
// `singular_failures` lists pairs whose sum has Q = 1, with i == j marking a
// single generator.
struct ValidationReport {
  bool orthogonal = true;
  bool independent = true;
  bool totally_singular = true;  // only meaningful when strict was requested
  size_t generator_count = 0;
  size_t rank = 0;
  std::vector<std::pair<size_t, size_t>> form_failures;
  std::vector<std::pair<size_t, size_t>> singular_failures;

  bool valid() const { return orthogonal && independent && totally_singular; }
};

// A stabilizer group presented by generators: rows of a subspace of (a|b)
// vectors plus a +/-1 character sign per row. Construction is permissive —
// inconsistent generator sets are representable so validate() can report
// what is wrong with them.
class StabilizerCode {
 public:
  StabilizerCode(size_t n, std::vector<SympVector> generators,
                 std::vector<int> signs = {})
      : n_(n),
        gens_(std::move(generators)),
        signs_(std::move(signs)),
        stab_(2 * n),
        echelon_(2 * n),
        dual_(2 * n) {
    if (signs_.empty()) signs_.assign(gens_.size(), +1);
    if (signs_.size() != gens_.size())
      throw std::invalid_argument("one sign per generator required");
    for (int s : signs_)
      if (s != +1 && s != -1)
        throw std::invalid_argument("generator signs must be +1 or -1");
    for (const SympVector& g : gens_) {
      if (g.qubits() != n_)
        throw std::invalid_argument("generator length does not match n");
      stab_.add_row(g.to_row());
      echelon_.add(g.to_row());
    }
    dual_ = symplectic_dual(stab_);
  }

  size_t n() const { return n_; }
  size_t generator_count() const { return gens_.size(); }
  const std::vector<SympVector>& generators() const { return gens_; }
  const SympVector& generator(size_t i) const { return gens_[i]; }
  int sign(size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const { return signs_; }

  // Dimension of the stabilizer subspace (rank of the generators).
  size_t k_bar() const { return echelon_.dim(); }
  size_t encoded_qubits() const { return n_ - k_bar(); }
  size_t dual_dim() const { return 2 * n_ - k_bar(); }

  // Generators as packed rows, in the given order.
  const GF2Matrix& stabilizer_matrix() const { return stab_; }
  // Reduced echelon basis of the stabilizer subspace.
  const Echelon& stabilizer_echelon() const { return echelon_; }
  // Basis of the subspace orthogonal to every generator, 2n - k_bar rows.
  const GF2Matrix& dual_basis() const { return dual_; }

  bool in_stabilizer(const SympVector& v) const {
    return echelon_.contains(v.to_row());
  }

  bool in_dual(const SympVector& v) const {
    for (const SympVector& g : gens_)
      if (symplectic_product(v, g)) return false;
    return true;
  }

  ValidationReport validate(bool strict) const {
    ValidationReport r;
    r.generator_count = gens_.size();
    r.rank = echelon_.dim();
    r.independent = (r.rank == gens_.size());
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (symplectic_product(gens_[i], gens_[j]))
          r.form_failures.emplace_back(i, j);
    r.orthogonal = r.form_failures.empty();
    if (strict) {
      // Q vanishes on the whole span iff it vanishes on the generators and
      // all pairwise sums (polarization reduces any combination to these).
      for (size_t i = 0; i < gens_.size(); ++i)
        if (quadratic_form(gens_[i])) r.singular_failures.emplace_back(i, i);
      for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
          if (quadratic_form(gens_[i] ^ gens_[j]))
            r.singular_failures.emplace_back(i, j);
      r.totally_singular = r.singular_failures.empty();
    }
    return r;
  }

  std::string to_text() const;
  static StabilizerCode from_text(std::string_view text);

 private:
  size_t n_;
  std::vector<SympVector> gens_;
  std::vector<int> signs_;
  GF2Matrix stab_;
  Echelon echelon_;
  GF2Matrix dual_;
};

enum class Builtin { five_qubit, eight_qubit, ten_qubit };

inline StabilizerCode builtin(Builtin which) {
  auto make = [](std::initializer_list<std::string_view> rows) {
    std::vector<SympVector> gens;
    for (auto s : rows) gens.push_back(SympVector::parse(s));
    size_t n = gens.front().qubits();
    return StabilizerCode(n, std::move(gens));
  };
  switch (which) {
    case Builtin::five_qubit:
      return make({
          "11000|00101",
          "01100|10010",
          "00110|01001",
          "00011|10100",
      });
    case Builtin::eight_qubit:
      return make({
          "01110100|00111010",
          "00111010|00011101",
          "00011101|01001110",
          "11111111|00000000",
          "00000000|11111111",
      });
    case Builtin::ten_qubit:
      return make({
          "0110011110|1001001100",
          "0011001111|0100100110",
          "0001110111|1010000011",
          "1000111011|0101010001",
          "1111111111|0000000000",
          "0000000000|1111111111",
      });
  }
  throw std::invalid_argument("unknown builtin code");
}

inline std::string_view builtin_name(Builtin which) {
  switch (which) {
    case Builtin::five_qubit: return "five_qubit";
    case Builtin::eight_qubit: return "eight_qubit";
    case Builtin::ten_qubit: return "ten_qubit";
  }
  throw std::invalid_argument("unknown builtin code");
}

inline Builtin builtin_from_name(std::string_view name) {
  if (name == "five_qubit") return Builtin::five_qubit;
  if (name == "eight_qubit") return Builtin::eight_qubit;
  if (name == "ten_qubit") return Builtin::ten_qubit;
  throw std::invalid_argument("unknown builtin code: " + std::string(name));
}

// Raised when the classical code handed to css_from_classical is not
// dual-containing; `witness` is a dual codeword outside the code.
class css_error : public std::invalid_argument {
 public:
  explicit css_error(BitVec witness)
      : std::invalid_argument(
            "classical code does not contain its dual; offending dual "
            "codeword: " +
            witness.to_string()),
        witness_(std::move(witness)) {}

  const BitVec& witness() const { return witness_; }

 private:
  BitVec witness_;
};

// Builds the quantum code of a dual-containing classical code C, given by a
// generator matrix whose rows span C. The stabilizer is
// {(v|0), (0|v) : v in a basis of C-perp}, so the code has 2(n - dim C)
// generators and encodes 2 dim(C) - n qubits.
inline StabilizerCode css_from_classical(const GF2Matrix& generator,
                                         size_t n) {
  if (generator.col_count() != n)
    throw std::invalid_argument("generator matrix width does not match n");
  GF2Matrix dual = generator.nullspace();
  Echelon span(generator);
  for (const BitVec& v : dual.rows())
    if (!span.contains(v)) throw css_error(v);
  std::vector<SympVector> gens;
  for (const BitVec& v : dual.rows()) gens.emplace_back(v, BitVec(n));
  for (const BitVec& v : dual.rows()) gens.emplace_back(BitVec(n), v);
  return StabilizerCode(n, std::move(gens));
}

namespace detail {

inline bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

// Length-p code from the quadratic residues mod p, for primes p = 5 (mod 8):
// on the first generator, position j carries (1,0) when j is a nonzero
// square mod p, (0,1) when it is a nonsquare, and (0,0) at j = 0. The other
// p - 2 generators are its successive cyclic shifts; the span has dimension
// p - 1, so one qubit is encoded.
inline StabilizerCode quadratic_residue_code(uint64_t p) {
  if (!detail::is_prime(p))
    throw std::invalid_argument("length must be prime");
  if (p % 8 != 5)
    throw std::invalid_argument("prime must be congruent to 5 mod 8");
  SympVector first = SympVector::zero(p);
  for (uint64_t j = 1; j < p; ++j) {
    if (detail::pow_mod(j, (p - 1) / 2, p) == 1)
      first.a.set(j, true);
    else
      first.b.set(j, true);
  }
  std::vector<SympVector> gens;
  gens.push_back(first);
  for (size_t i = 1; i + 1 < p; ++i)
    gens.push_back(gens.back().cyclic_shift());
  return StabilizerCode(p, std::move(gens));
}

// Result of the pairwise correctability test. When not correctable, (first,
// second) index the first failing pair in the given error order and e1, e2
// are the elements themselves.
struct CorrectabilityResult {
  bool correctable = true;
  size_t first = 0, second = 0;
  PauliElement e1, e2;
};

// Tests whether the error set is correctable: for every unordered pair, the
// sum of the images must lie in the stabilizer subspace or outside its dual.
inline CorrectabilityResult correctable(const StabilizerCode& code,
                                        const std::vector<PauliElement>& errors) {
  for (const PauliElement& e : errors)
    if (e.qubits() != code.n())
      throw std::invalid_argument("error length does not match the code");
  CorrectabilityResult r;
  for (size_t i = 0; i < errors.size(); ++i)
    for (size_t j = i; j < errors.size(); ++j) {
      SympVector d = errors[i].vec() ^ errors[j].vec();
      if (code.in_stabilizer(d)) continue;
      if (!code.in_dual(d)) continue;
      r.correctable = false;
      r.first = i;
      r.second = j;
      r.e1 = errors[i];
      r.e2 = errors[j];
      return r;
    }
  return r;
}

inline std::string StabilizerCode::to_text() const {
  std::string s = "n=" + std::to_string(n_) + "\n";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (signs_[i] < 0) s += "-";
    s += gens_[i].to_string();
    s += "\n";
  }
  return s;
}

// Parses the code file format: '#' starts a comment, an optional "n=<int>"
// header may precede the generators, and each generator line is
// "<a-bits>|<b-bits>" with an optional leading '-' for a -1 sign.
inline StabilizerCode StabilizerCode::from_text(std::string_view text) {
  std::optional<size_t> header_n;
  std::vector<SympVector> gens;
  std::vector<int> signs;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (nl == std::string_view::npos)
      text = {};
    else
      text.remove_prefix(nl + 1);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    auto fail = [line_no](const std::string& what) {
      throw std::invalid_argument("code file line " + std::to_string(line_no) +
                                  ": " + what);
    };
    if (line.starts_with("n=")) {
      if (header_n || !gens.empty()) fail("unexpected header");
      std::string_view digits = line.substr(2);
      if (digits.empty()) fail("missing qubit count");
      size_t n = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') fail("malformed qubit count");
        n = n * 10 + static_cast<size_t>(c - '0');
      }
      header_n = n;
      continue;
    }
    int sign = +1;
    if (line.front() == '-') {
      sign = -1;
      line.remove_prefix(1);
    }
    SympVector v = SympVector::zero(0);
    try {
      v = SympVector::parse(line);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (header_n && v.qubits() != *header_n)
      fail("generator length does not match the n= header");
    if (!gens.empty() && v.qubits() != gens.front().qubits())
      fail("generator length differs from earlier lines");
    gens.push_back(std::move(v));
    signs.push_back(sign);
  }
  if (!header_n && gens.empty())
    throw std::invalid_argument("code file has no generators and no n= header");
  size_t n = header_n ? *header_n : gens.front().qubits();
  return StabilizerCode(n, std::move(gens), std::move(signs));
}

// Parses a classical generator matrix: one row of {0,1} characters per line,
// '#' comments and blank lines ignored.
inline GF2Matrix parse_classical_matrix(std::string_view text) {
  std::vector<BitVec> rows;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (nl == std::string_view::npos)
      text = {};
    else
      text.remove_prefix(nl + 1);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    BitVec row(0);
    try {
      row = BitVec::from_string(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("matrix file line " +
                                  std::to_string(line_no) + ": " + e.what());
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("matrix file line " +
                                  std::to_string(line_no) +
                                  ": row length differs from earlier lines");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix file has no rows");
  GF2Matrix m(rows.front().size());
  for (BitVec& r : rows) m.add_row(std::move(r));
  return m;
}

}  // namespace stabgeo
