#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabgeo/gf2.hpp"

namespace stabgeo {

// One symmetry generator, kept in the form it was given (no canonicalization).
// Serialized one per line: "H_ALL", "H <j>" (j is 1-based), and
// "GL <rows>" / "DM <rows>" / "DP <rows>" with comma-separated row bits.
struct CliffordGen {
  enum class Kind { hadamard_all, hadamard_single, gl, diag_real, diag_complex };

  Kind kind;
  size_t j = 0;     // hadamard_single only, 1-based qubit index
  GF2Matrix m{0};   // gl / diag_real / diag_complex payload

  friend bool operator==(const CliffordGen&, const CliffordGen&) = default;
};

// The induced action of a symmetry on length-2n vectors (a|b), as a 2n x 2n
// binary matrix applied to row vectors on the right. `real_clifford` marks
// compositions of generators that preserve the quadratic form, not just the
// alternating form.
class SympMatrix {
 public:
  explicit SympMatrix(size_t n)
      : n_(n), m_(GF2Matrix::identity(2 * n)), real_(true) {}

  static SympMatrix identity(size_t n) { return SympMatrix(n); }

  size_t qubits() const { return n_; }
  const GF2Matrix& matrix() const { return m_; }
  bool real_clifford() const { return real_; }
  const std::vector<CliffordGen>& word() const { return word_; }

  SympVector apply(const SympVector& v) const {
    if (v.qubits() != n_)
      throw std::invalid_argument("qubit count mismatch in symmetry action");
    BitVec row = v.to_row();
    BitVec out(2 * n_);
    for (size_t i = 0; i < 2 * n_; ++i)
      if (row.get(i)) out ^= m_.row(i);
    return SympVector::from_row(out);
  }

  friend bool operator==(const SympMatrix& x, const SympMatrix& y) {
    return x.n_ == y.n_ && x.m_ == y.m_;  // word and tag are bookkeeping
  }

  // Applies g1 first, then g2 (row-vector convention: v g1 g2).
  friend SympMatrix compose(const SympMatrix& g1, const SympMatrix& g2) {
    if (g1.n_ != g2.n_)
      throw std::invalid_argument("qubit count mismatch in composition");
    SympMatrix out(g1.n_);
    out.m_ = g1.m_.multiply(g2.m_);
    out.real_ = g1.real_ && g2.real_;
    out.word_ = g1.word_;
    out.word_.insert(out.word_.end(), g2.word_.begin(), g2.word_.end());
    return out;
  }

  static SympMatrix from_gen(size_t n, CliffordGen g);
  static SympMatrix from_word(size_t n, const std::vector<CliffordGen>& word);

  std::string word_text() const;
  static SympMatrix from_word_text(size_t n, std::string_view text);

 private:
  size_t n_;
  GF2Matrix m_;
  bool real_;
  std::vector<CliffordGen> word_;
};

// (a|b) -> (b|a): exchanges the X and Z roles on every qubit.
inline SympMatrix hadamard_all(size_t n) {
  return SympMatrix::from_gen(n, {CliffordGen::Kind::hadamard_all, 0, GF2Matrix{0}});
}

// Swaps a_j with b_j on qubit j (1-based), fixing all other coordinates.
inline SympMatrix hadamard_single(size_t n, size_t j) {
  return SympMatrix::from_gen(
      n, {CliffordGen::Kind::hadamard_single, j, GF2Matrix{0}});
}

// (a|b) -> (aA | bA^{-T}) for invertible A: basis change on the X side with
// the contragredient action on the Z side.
inline SympMatrix gl_action(const GF2Matrix& a) {
  return SympMatrix::from_gen(a.col_count(), {CliffordGen::Kind::gl, 0, a});
}

// (a|b) -> (a | aM + b) for symmetric M with zero diagonal; preserves the
// quadratic form.
inline SympMatrix diag_action(const GF2Matrix& m) {
  return SympMatrix::from_gen(m.col_count(),
                              {CliffordGen::Kind::diag_real, 0, m});
}

// (a|b) -> (a | aP + b) for any symmetric P. A nonzero diagonal breaks the
// quadratic form (only the alternating form survives), so the result is
// tagged as a complex-Clifford action.
inline SympMatrix diag_action_complex(const GF2Matrix& p) {
  return SympMatrix::from_gen(p.col_count(),
                              {CliffordGen::Kind::diag_complex, 0, p});
}

inline SympMatrix SympMatrix::from_gen(size_t n, CliffordGen g) {
  SympMatrix out(n);
  GF2Matrix& m = out.m_;
  switch (g.kind) {
    case CliffordGen::Kind::hadamard_all: {
      m = GF2Matrix(2 * n, 2 * n);
      for (size_t i = 0; i < 2 * n; ++i) m.set(i, (i + n) % (2 * n), true);
      break;
    }
    case CliffordGen::Kind::hadamard_single: {
      if (g.j < 1 || g.j > n)
        throw std::invalid_argument("qubit index out of range");
      size_t i = g.j - 1;
      m.set(i, i, false);
      m.set(i, n + i, true);
      m.set(n + i, n + i, false);
      m.set(n + i, i, true);
      break;
    }
    case CliffordGen::Kind::gl: {
      const GF2Matrix& a = g.m;
      if (a.row_count() != n || a.col_count() != n)
        throw std::invalid_argument("basis-change matrix must be n x n");
      auto inv = a.inverse();
      if (!inv) throw std::invalid_argument("basis-change matrix is singular");
      GF2Matrix it = inv->transpose();
      m = GF2Matrix(2 * n, 2 * n);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
          if (a.get(r, c)) m.set(r, c, true);
          if (it.get(r, c)) m.set(n + r, n + c, true);
        }
      break;
    }
    case CliffordGen::Kind::diag_real:
    case CliffordGen::Kind::diag_complex: {
      const GF2Matrix& p = g.m;
      if (p.row_count() != n || p.col_count() != n)
        throw std::invalid_argument("phase matrix must be n x n");
      if (!p.is_symmetric())
        throw std::invalid_argument("phase matrix must be symmetric");
      if (g.kind == CliffordGen::Kind::diag_real && !p.zero_diagonal())
        throw std::invalid_argument(
            "phase matrix must have zero diagonal; use the complex variant");
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
          if (p.get(r, c)) m.set(r, n + c, true);
      out.real_ = (g.kind == CliffordGen::Kind::diag_real);
      break;
    }
  }
  out.word_.push_back(std::move(g));
  return out;
}

inline SympMatrix SympMatrix::from_word(size_t n,
                                        const std::vector<CliffordGen>& word) {
  SympMatrix out(n);
  for (const CliffordGen& g : word) out = compose(out, from_gen(n, g));
  return out;
}

namespace detail {

inline std::string rows_to_text(const GF2Matrix& m) {
  std::string s;
  for (size_t r = 0; r < m.row_count(); ++r) {
    if (r) s += ",";
    s += m.row(r).to_string();
  }
  return s;
}

inline GF2Matrix rows_from_text(std::string_view s) {
  std::vector<std::string_view> rows;
  while (true) {
    size_t comma = s.find(',');
    rows.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return GF2Matrix::from_strings(rows);
}

}  // namespace detail

inline std::string gen_to_text(const CliffordGen& g) {
  switch (g.kind) {
    case CliffordGen::Kind::hadamard_all:
      return "H_ALL";
    case CliffordGen::Kind::hadamard_single:
      return "H " + std::to_string(g.j);
    case CliffordGen::Kind::gl:
      return "GL " + detail::rows_to_text(g.m);
    case CliffordGen::Kind::diag_real:
      return "DM " + detail::rows_to_text(g.m);
    case CliffordGen::Kind::diag_complex:
      return "DP " + detail::rows_to_text(g.m);
  }
  throw std::logic_error("unreachable");
}

inline CliffordGen gen_from_text(std::string_view line) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  line = strip(line);
  if (line == "H_ALL")
    return {CliffordGen::Kind::hadamard_all, 0, GF2Matrix{0}};
  size_t space = line.find(' ');
  if (space == std::string_view::npos)
    throw std::invalid_argument("malformed generator line: " +
                                std::string(line));
  std::string_view head = line.substr(0, space);
  std::string_view rest = strip(line.substr(space + 1));
  if (head == "H") {
    size_t j = 0;
    for (char c : rest) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed qubit index: " +
                                    std::string(rest));
      j = j * 10 + static_cast<size_t>(c - '0');
    }
    if (rest.empty()) throw std::invalid_argument("missing qubit index");
    return {CliffordGen::Kind::hadamard_single, j, GF2Matrix{0}};
  }
  if (head == "GL")
    return {CliffordGen::Kind::gl, 0, detail::rows_from_text(rest)};
  if (head == "DM")
    return {CliffordGen::Kind::diag_real, 0, detail::rows_from_text(rest)};
  if (head == "DP")
    return {CliffordGen::Kind::diag_complex, 0, detail::rows_from_text(rest)};
  throw std::invalid_argument("unknown generator kind: " + std::string(head));
}

inline std::string SympMatrix::word_text() const {
  std::string s;
  for (const CliffordGen& g : word_) {
    s += gen_to_text(g);
    s += "\n";
  }
  return s;
}

inline SympMatrix SympMatrix::from_word_text(size_t n, std::string_view text) {
  std::vector<CliffordGen> word;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (nl == std::string_view::npos)
      text = {};
    else
      text.remove_prefix(nl + 1);
    // skip blanks and comments
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    word.push_back(gen_from_text(line));
  }
  return from_word(n, word);
}

// Checks (u g, v g) = (u, v) on all standard-basis pairs; the form is
// bilinear, so this settles every pair of vectors.
inline bool preserves_alternating_form(const SympMatrix& g) {
  size_t n = g.qubits();
  std::vector<SympVector> img(2 * n);
  for (size_t i = 0; i < 2 * n; ++i)
    img[i] = SympVector::from_row(g.matrix().row(i));
  for (size_t i = 0; i < 2 * n; ++i)
    for (size_t j = i + 1; j < 2 * n; ++j) {
      bool before = (j == i + n);  // (e_i, e_j) for the standard basis
      if (symplectic_product(img[i], img[j]) != before) return false;
    }
  return true;
}

// First vector among the standard basis and all pairwise basis sums whose Q
// value changes under g, or nullopt if none does. Because
// Q(u+v) = Q(u) + Q(v) + (u,v), agreement on that finite set forces
// agreement everywhere.
inline std::optional<SympVector> quadratic_form_violation(const SympMatrix& g) {
  size_t n = g.qubits();
  auto basis = [n](size_t i) {
    BitVec row(2 * n);
    row.set(i, true);
    return SympVector::from_row(row);
  };
  for (size_t i = 0; i < 2 * n; ++i) {
    SympVector v = basis(i);
    if (quadratic_form(g.apply(v)) != quadratic_form(v)) return v;
  }
  for (size_t i = 0; i < 2 * n; ++i)
    for (size_t j = i + 1; j < 2 * n; ++j) {
      SympVector v = basis(i) ^ basis(j);
      if (quadratic_form(g.apply(v)) != quadratic_form(v)) return v;
    }
  return std::nullopt;
}

inline bool preserves_quadratic_form(const SympMatrix& g) {
  return !quadratic_form_violation(g).has_value();
}

}  // namespace stabgeo
