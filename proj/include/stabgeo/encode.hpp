#pragma once

#include <utility>
#include <vector>

#include "stabgeo/clifford.hpp"
#include "stabgeo/code.hpp"
#include "stabgeo/gf2.hpp"

namespace stabgeo {

// Builds a form-preserving symmetry g, as an explicit generator word, that
// carries the canonical subspace spanned by {(0|e_1), ..., (0|e_k)} onto the
// code's stabilizer subspace (k = dim of that subspace, right action on row
// vectors). A code already spanning the canonical subspace by its own basis
// rows yields the identity with an empty word.
//
// Method: eliminate the stabilizer basis down to the canonical rows, then
// return the inverses in reverse order. Writing r for the rank of the
// generators' a-halves,
//   1. free row operations put the basis in a form where rows 0..r-1 have
//      independent a-halves and later rows have a = 0;
//   2. a basis change on the X side (with its contragredient Z action) turns
//      those a-halves into unit vectors e_1..e_r;
//   3. a phase-matrix action (a|b) -> (a | aM + b) clears the b-halves of
//      the first r rows — orthogonality and total singularity make the
//      required M symmetric with zero diagonal;
//   4. single-qubit swaps on positions 1..r turn (e_i|0) into (0|e_i); rows
//      past r are untouched because orthogonality to (e_i|0) forces their
//      b-support beyond position r;
//   5. a final basis change maps the resulting b-halves onto e_1..e_k.
inline SympMatrix synthesize_encoding(const StabilizerCode& code) {
  if (!code.validate(true).valid())
    throw std::invalid_argument(
        "encoding synthesis requires a strictly valid code");
  size_t n = code.n();

  // Nothing to do when the stabilizer subspace already is the canonical one:
  // every generator of the form (0|b) with b supported on the first k
  // positions, and rank k forces equality of the spans.
  bool canonical = true;
  for (const SympVector& g : code.generators()) {
    if (g.a.any()) {
      canonical = false;
      break;
    }
    for (size_t j = code.k_bar(); j < n && canonical; ++j)
      if (g.b.get(j)) canonical = false;
    if (!canonical) break;
  }
  if (canonical) return SympMatrix::identity(n);

  // Step 1: row-reduce the a-halves (free: preserves the span).
  std::vector<SympVector> rows(code.generators());
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows.size(); ++c) {
    size_t sel = rows.size();
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i].a.get(c)) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].a.get(c)) rows[i] ^= rows[r];
    ++r;
  }

  auto complete_to_invertible = [n](GF2Matrix m) {
    Echelon span(m);
    for (size_t j = 0; j < n && m.row_count() < n; ++j) {
      BitVec e(n);
      e.set(j, true);
      if (span.add(e)) m.add_row(std::move(e));
    }
    return m;
  };

  // Step 2: aV^{-1} sends the leading a-halves to unit vectors.
  GF2Matrix v(n);
  for (size_t i = 0; i < r; ++i) v.add_row(rows[i].a);
  v = complete_to_invertible(std::move(v));
  auto v_inv = v.inverse();
  if (!v_inv) throw std::logic_error("a-half completion not invertible");
  bool v_trivial = (v == GF2Matrix::identity(n));
  if (!v_trivial) {
    SympMatrix act = gl_action(*v_inv);
    for (SympVector& row : rows) row = act.apply(row);
  }

  // Step 3: with a_i = e_i, row i's b-half is row i of the required M.
  // B[i][j] = b_i[j] is symmetric on i,j < r (pairwise orthogonality) with
  // zero diagonal (total singularity), so mirroring the j >= r part makes M
  // a legal phase matrix.
  GF2Matrix m(n, n);
  bool m_trivial = true;
  for (size_t i = 0; i < r; ++i) {
    for (size_t c = 0; c < n; ++c) {
      if (!rows[i].b.get(c)) continue;
      m.set(i, c, true);
      if (c >= r) m.set(c, i, true);
      m_trivial = false;
    }
  }
  if (!m_trivial) {
    SympMatrix act = diag_action(m);
    for (SympVector& row : rows) row = act.apply(row);
  }

  // Step 4: swap a_j and b_j on the first r positions.
  for (SympVector& row : rows) {
    for (size_t j = 0; j < r; ++j) {
      bool aj = row.a.get(j), bj = row.b.get(j);
      row.a.set(j, bj);
      row.b.set(j, aj);
    }
  }

  // Step 5: all rows are now (0|c_i); map the c_i onto unit vectors. The
  // Z side transforms by W^{-T}... choosing the action matrix A = W^T gives
  // c_i A^{-T} = c_i W^{-1} = e_i.
  GF2Matrix w(n);
  for (const SympVector& row : rows) {
    if (row.a.any()) throw std::logic_error("elimination left an a-half set");
    w.add_row(row.b);
  }
  w = complete_to_invertible(std::move(w));
  auto w_inv = w.inverse();
  if (!w_inv) throw std::logic_error("b-half completion not invertible");
  bool w_trivial = (w == GF2Matrix::identity(n));

  // The eliminating word is GL(V^{-1}), DM(M), H 1..r, GL(W^T); the encoder
  // is the inverses in reverse order (DM and H are involutions).
  std::vector<CliffordGen> word;
  if (!w_trivial)
    word.push_back({CliffordGen::Kind::gl, 0, w_inv->transpose()});
  for (size_t j = r; j >= 1; --j)
    word.push_back({CliffordGen::Kind::hadamard_single, j, GF2Matrix{0}});
  if (!m_trivial) word.push_back({CliffordGen::Kind::diag_real, 0, m});
  if (!v_trivial) word.push_back({CliffordGen::Kind::gl, 0, v});
  return SympMatrix::from_word(n, word);
}

}  // namespace stabgeo
