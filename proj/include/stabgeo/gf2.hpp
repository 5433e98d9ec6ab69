#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabgeo/bitvec.hpp"

namespace stabgeo {

// A length-2n vector (a|b) over GF(2): the X-support a and Z-support b of a
// Pauli product, one bit per qubit. The two halves are kept separate so the
// weight is a plain popcount(a | b).
struct SympVector {
  BitVec a, b;

  SympVector() = default;

  SympVector(BitVec a_, BitVec b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size())
      throw std::invalid_argument("the a and b halves must have equal length");
  }

  static SympVector zero(size_t n) { return SympVector(BitVec(n), BitVec(n)); }

  // Parses "11000|00101". Leftmost character is qubit 0.
  static SympVector parse(std::string_view s) {
    size_t bar = s.find('|');
    if (bar == std::string_view::npos)
      throw std::invalid_argument("expected 'abits|bbits'");
    return SympVector(BitVec::from_string(s.substr(0, bar)),
                      BitVec::from_string(s.substr(bar + 1)));
  }

  size_t qubits() const { return a.size(); }

  bool is_zero() const { return !a.any() && !b.any(); }

  SympVector& operator^=(const SympVector& o) {
    a ^= o.a;
    b ^= o.b;
    return *this;
  }

  friend SympVector operator^(SympVector lhs, const SympVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const SympVector&, const SympVector&) = default;

  // Packs into one length-2n row: a at positions [0,n), b at [n,2n).
  BitVec to_row() const {
    BitVec row(2 * a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if (a.get(i)) row.set(i, true);
      if (b.get(i)) row.set(a.size() + i, true);
    }
    return row;
  }

  static SympVector from_row(const BitVec& row) {
    if (row.size() % 2 != 0)
      throw std::invalid_argument("packed symplectic row must have even length");
    size_t n = row.size() / 2;
    SympVector v = zero(n);
    for (size_t i = 0; i < n; ++i) {
      if (row.get(i)) v.a.set(i, true);
      if (row.get(n + i)) v.b.set(i, true);
    }
    return v;
  }

  SympVector cyclic_shift() const {
    return SympVector(a.cyclic_shift(), b.cyclic_shift());
  }

  std::string to_string() const { return a.to_string() + "|" + b.to_string(); }
};

// The alternating form a.b' + a'.b mod 2. Zero means the corresponding Pauli
// products commute.
inline bool symplectic_product(const SympVector& u, const SympVector& v) {
  return BitVec::dot(u.a, v.b) ^ BitVec::dot(v.a, u.b);
}

// The quadratic form sum_j a_j b_j mod 2: whether the Pauli product squares
// to -I (equivalently, the parity of the number of XZ tensor factors).
inline bool quadratic_form(const SympVector& v) { return BitVec::dot(v.a, v.b); }

// Number of qubit positions where (a_j, b_j) != (0, 0).
inline size_t symplectic_weight(const SympVector& v) {
  return BitVec::or_weight(v.a, v.b);
}

// Lexicographic order on the printed "a|b" string.
inline bool printed_less(const SympVector& u, const SympVector& v) {
  if (!(u.a == v.a)) return u.a.printed_less(v.a);
  return u.b.printed_less(v.b);
}

// Dense row-major matrix over GF(2) with bit-packed rows.
class GF2Matrix {
 public:
  explicit GF2Matrix(size_t cols) : cols_(cols) {}

  GF2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static GF2Matrix identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
    return m;
  }

  static GF2Matrix from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string_view> v(rows);
    return from_strings(v);
  }

  static GF2Matrix from_strings(const std::vector<std::string_view>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows given");
    GF2Matrix m(rows.front().size());
    for (auto s : rows) m.add_row(BitVec::from_string(s));
    return m;
  }

  void add_row(BitVec row) {
    if (row.size() != cols_)
      throw std::invalid_argument("row length does not match column count");
    rows_.push_back(std::move(row));
  }

  size_t row_count() const { return rows_.size(); }
  size_t col_count() const { return cols_; }
  const BitVec& row(size_t i) const { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }

  bool get(size_t r, size_t c) const { return rows_[r].get(c); }
  void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  // Reduced row echelon form; zero rows are dropped. Pivots are the
  // lowest-index nonzero columns, taken in ascending order, so the result is
  // canonical for the row space.
  GF2Matrix rref(std::vector<size_t>* pivots = nullptr) const {
    std::vector<BitVec> work = rows_;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < work.size(); ++c) {
      size_t sel = work.size();
      for (size_t i = r; i < work.size(); ++i) {
        if (work[i].get(c)) {
          sel = i;
          break;
        }
      }
      if (sel == work.size()) continue;
      std::swap(work[r], work[sel]);
      for (size_t i = 0; i < work.size(); ++i) {
        if (i != r && work[i].get(c)) work[i] ^= work[r];
      }
      piv.push_back(c);
      ++r;
    }
    GF2Matrix out(cols_);
    for (size_t i = 0; i < r; ++i) out.add_row(std::move(work[i]));
    if (pivots) *pivots = std::move(piv);
    return out;
  }

  size_t rank() const { return rref().row_count(); }

  // Basis of {v : M v^T = 0}, one row per free column, in ascending
  // free-column order.
  GF2Matrix nullspace() const {
    std::vector<size_t> piv;
    GF2Matrix red = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : piv) is_pivot[c] = true;
    GF2Matrix out(cols_);
    for (size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      BitVec v(cols_);
      v.set(f, true);
      for (size_t i = 0; i < piv.size(); ++i)
        if (red.get(i, f)) v.set(piv[i], true);
      out.add_row(std::move(v));
    }
    return out;
  }

  GF2Matrix transpose() const {
    GF2Matrix out(rows_.size());
    out.rows_.assign(cols_, BitVec(rows_.size()));
    for (size_t r = 0; r < rows_.size(); ++r)
      for (size_t c = 0; c < cols_; ++c)
        if (rows_[r].get(c)) out.rows_[c].set(r, true);
    return out;
  }

  // Inverse of a square matrix, or nullopt if singular.
  std::optional<GF2Matrix> inverse() const {
    if (rows_.size() != cols_) return std::nullopt;
    size_t n = cols_;
    std::vector<BitVec> left = rows_;
    GF2Matrix right = identity(n);
    size_t r = 0;
    for (size_t c = 0; c < n; ++c) {
      size_t sel = n;
      for (size_t i = r; i < n; ++i) {
        if (left[i].get(c)) {
          sel = i;
          break;
        }
      }
      if (sel == n) return std::nullopt;
      std::swap(left[r], left[sel]);
      std::swap(right.rows_[r], right.rows_[sel]);
      for (size_t i = 0; i < n; ++i) {
        if (i != r && left[i].get(c)) {
          left[i] ^= left[r];
          right.rows_[i] ^= right.rows_[r];
        }
      }
      ++r;
    }
    return right;
  }

  GF2Matrix multiply(const GF2Matrix& o) const {
    if (cols_ != o.row_count())
      throw std::invalid_argument("matrix dimension mismatch in product");
    GF2Matrix out(rows_.size(), o.col_count());
    for (size_t r = 0; r < rows_.size(); ++r)
      for (size_t c = 0; c < cols_; ++c)
        if (rows_[r].get(c)) out.rows_[r] ^= o.rows_[c];
    return out;
  }

  bool is_symmetric() const {
    if (rows_.size() != cols_) return false;
    for (size_t r = 0; r < rows_.size(); ++r)
      for (size_t c = r + 1; c < cols_; ++c)
        if (get(r, c) != get(c, r)) return false;
    return true;
  }

  bool zero_diagonal() const {
    size_t n = std::min(rows_.size(), cols_);
    for (size_t i = 0; i < n; ++i)
      if (get(i, i)) return false;
    return true;
  }

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Incrementally maintained reduced echelon basis, for repeated membership and
// reduction queries against a growing span.
class Echelon {
 public:
  explicit Echelon(size_t cols) : cols_(cols) {}

  explicit Echelon(const GF2Matrix& m) : cols_(m.col_count()) {
    for (const BitVec& r : m.rows()) add(r);
  }

  size_t cols() const { return cols_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Residual of v after elimination against the basis.
  BitVec reduce(BitVec v) const {
    if (v.size() != cols_) throw std::invalid_argument("column count mismatch");
    for (size_t i = 0; i < rows_.size(); ++i)
      if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
  }

  bool contains(const BitVec& v) const { return !reduce(v).any(); }

  // Adds v to the span. Returns false if v was already contained.
  bool add(BitVec v) {
    v = reduce(std::move(v));
    size_t p = v.lowest_set();
    if (p == v.size()) return false;
    for (size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].get(p)) rows_[i] ^= v;
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

 private:
  size_t cols_ = 0;
  std::vector<BitVec> rows_;    // reduced, sorted by pivot
  std::vector<size_t> pivots_;  // ascending
};

inline size_t rank(const GF2Matrix& m) { return m.rank(); }

// True iff v is a GF(2) linear combination of the rows of m.
inline bool in_span(const BitVec& v, const GF2Matrix& m) {
  if (v.size() != m.col_count())
    throw std::invalid_argument("column count mismatch");
  return Echelon(m).contains(v);
}

inline bool in_span(const SympVector& v, const GF2Matrix& m) {
  return in_span(v.to_row(), m);
}

// Basis of the subspace orthogonal to the rows of m under the alternating
// form. Rows of m are packed (a|b) vectors of length 2n; the dimension of the
// result is 2n - rank(m).
inline GF2Matrix symplectic_dual(const GF2Matrix& m) {
  if (m.col_count() % 2 != 0)
    throw std::invalid_argument("symplectic rows must have even length");
  size_t n = m.col_count() / 2;
  GF2Matrix swapped(m.col_count());
  for (const BitVec& r : m.rows()) {
    BitVec s(2 * n);
    for (size_t i = 0; i < n; ++i) {
      if (r.get(i)) s.set(n + i, true);
      if (r.get(n + i)) s.set(i, true);
    }
    swapped.add_row(std::move(s));
  }
  return swapped.nullspace();
}

}  // namespace stabgeo
