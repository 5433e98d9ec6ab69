#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabgeo/code.hpp"
#include "stabgeo/gf2.hpp"
#include "stabgeo/pauli.hpp"

namespace stabgeo {

inline constexpr size_t kMaxStateQubits = 12;

// Dense state on n <= 12 qubits. Basis label v is the printed bit string;
// the leftmost printed bit is the highest-order bit of the array index, so
// |10...0> sits at index 2^{n-1}.
class StateVector {
 public:
  explicit StateVector(size_t n) : n_(check(n)), amps_(size_t{1} << n) {}

  static StateVector basis_state(const BitVec& v) {
    StateVector psi(v.size());
    psi.amps_[index_of(v)] = 1.0;
    return psi;
  }

  static StateVector basis_state(std::string_view bits) {
    return basis_state(BitVec::from_string(bits));
  }

  size_t qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  std::complex<double>& operator[](size_t i) { return amps_[i]; }
  const std::complex<double>& operator[](size_t i) const { return amps_[i]; }

  // Array index of the printed basis label.
  static size_t index_of(const BitVec& v) {
    size_t idx = 0;
    for (size_t i = 0; i < v.size(); ++i)
      idx = (idx << 1) | static_cast<size_t>(v.get(i));
    return idx;
  }

  // Printed basis label of an array index.
  static std::string label_of(size_t index, size_t n) {
    std::string s(n, '0');
    for (size_t i = 0; i < n; ++i)
      if ((index >> (n - 1 - i)) & 1) s[i] = '1';
    return s;
  }

  double norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  StateVector& normalize() {
    double m = norm();
    if (m == 0.0) throw std::invalid_argument("cannot normalize a zero state");
    for (auto& a : amps_) a /= m;
    return *this;
  }

  StateVector& operator+=(const StateVector& o) {
    require_same(o);
    for (size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
    return *this;
  }

  StateVector& operator-=(const StateVector& o) {
    require_same(o);
    for (size_t i = 0; i < amps_.size(); ++i) amps_[i] -= o.amps_[i];
    return *this;
  }

  StateVector& operator*=(std::complex<double> c) {
    for (auto& a : amps_) a *= c;
    return *this;
  }

  friend StateVector operator+(StateVector lhs, const StateVector& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend StateVector operator-(StateVector lhs, const StateVector& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend StateVector operator*(std::complex<double> c, StateVector v) {
    v *= c;
    return v;
  }

 private:
  static size_t check(size_t n) {
    if (n > kMaxStateQubits)
      throw std::invalid_argument("state vectors support at most 12 qubits");
    return n;
  }

  void require_same(const StateVector& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("qubit count mismatch between states");
  }

  size_t n_;
  std::vector<std::complex<double>> amps_;
};

// <u|w>, conjugating the left argument.
inline std::complex<double> inner(const StateVector& u, const StateVector& w) {
  if (u.qubits() != w.qubits())
    throw std::invalid_argument("qubit count mismatch between states");
  std::complex<double> s = 0;
  for (size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * w[i];
  return s;
}

namespace detail {

// Index mask whose bits mirror the printed vector (leftmost printed bit is
// the top index bit).
inline size_t index_mask(const BitVec& v) {
  size_t mask = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) mask |= size_t{1} << (v.size() - 1 - i);
  return mask;
}

inline int parity(size_t bits) { return std::popcount(bits) & 1; }

}  // namespace detail

// phase . X(a) . Z(b) applied to psi: out[w] = phase (-1)^{b.(w+a)} psi[w+a].
inline StateVector apply_pauli(const PauliElement& e, const StateVector& psi) {
  if (e.qubits() != psi.qubits())
    throw std::invalid_argument("qubit count mismatch in operator application");
  static const std::complex<double> kPhases[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> phase = kPhases[e.phase_pow()];
  size_t amask = detail::index_mask(e.vec().a);
  size_t bmask = detail::index_mask(e.vec().b);
  StateVector out(psi.qubits());
  for (size_t w = 0; w < psi.dim(); ++w) {
    size_t src = w ^ amask;
    std::complex<double> amp = phase * psi[src];
    if (detail::parity(bmask & src)) amp = -amp;
    out[w] = amp;
  }
  return out;
}

// The stabilizer element for generator i: the stored sign times the
// generator's Pauli product.
inline PauliElement stabilizer_element(const StabilizerCode& code, size_t i) {
  return PauliElement(code.generator(i), code.sign(i) < 0 ? 2 : 0);
}

// Orthonormal basis of the simultaneous eigenspace {psi : s_i psi =
// character_i psi}, built by projecting standard basis states in index order
// and orthonormalizing; the dimension is always 2^{n - dim}. Requires a
// strictly valid code so the projector is a genuine rank-2^{n-dim}
// orthogonal projection.
inline std::vector<StateVector> codespace_basis(
    const StabilizerCode& code, const std::vector<int>& character) {
  if (!code.validate(true).valid())
    throw std::invalid_argument("codespace requires a strictly valid code");
  if (code.n() > kMaxStateQubits)
    throw std::invalid_argument("state vectors support at most 12 qubits");
  if (character.size() != code.generator_count())
    throw std::invalid_argument("one character sign per generator required");
  for (int c : character)
    if (c != +1 && c != -1)
      throw std::invalid_argument("character signs must be +1 or -1");

  size_t n = code.n();
  size_t want = size_t{1} << (n - code.k_bar());
  std::vector<StateVector> basis;
  basis.reserve(want);
  constexpr double kZeroTol = 1e-9;
  for (size_t idx = 0; idx < (size_t{1} << n) && basis.size() < want; ++idx) {
    StateVector psi(n);
    psi[idx] = 1.0;
    // Apply the projector product (I + chi_i s_i)/2 one factor at a time.
    for (size_t i = 0; i < code.generator_count(); ++i) {
      StateVector image = apply_pauli(stabilizer_element(code, i), psi);
      if (character[i] < 0)
        psi -= image;
      else
        psi += image;
      psi *= 0.5;
    }
    for (const StateVector& prev : basis) psi -= inner(prev, psi) * prev;
    if (psi.norm() > kZeroTol) {
      psi.normalize();
      basis.push_back(std::move(psi));
    }
  }
  if (basis.size() != want)
    throw std::logic_error("eigenspace dimension differs from 2^(n-dim)");
  return basis;
}

// One line per nonzero amplitude, "+<bits>" or "-<bits>" by the sign of the
// real part, in basis index order.
inline std::string codeword_text(const StateVector& psi, double tol = 1e-9) {
  std::string out;
  for (size_t i = 0; i < psi.dim(); ++i) {
    if (std::abs(psi[i]) <= tol) continue;
    out += (psi[i].real() < 0) ? '-' : '+';
    out += StateVector::label_of(i, psi.qubits());
    out += '\n';
  }
  return out;
}

// First failure of the error-correction conditions, if any: for the pair
// operator E = e1^{-1} e2, either an off-diagonal matrix element <c1|E|c2>
// is nonzero (orthogonality condition) or two diagonal elements differ
// (indistinguishability condition).
struct KLViolation {
  size_t error1 = 0, error2 = 0;  // indices into the error list
  size_t c1 = 0, c2 = 0;          // codespace basis indices
  bool off_diagonal = true;       // false: diagonal mismatch
  std::complex<double> value;     // offending element or difference
};

struct KLReport {
  bool satisfied = true;
  std::optional<KLViolation> violation;
};

// Checks <c1|e1^{-1} e2|c2> = 0 for distinct codespace basis states and
// equality of all diagonal elements, for every unordered error pair, to the
// given tolerance. Stops at the first violation. Checking an orthonormal
// basis settles the conditions for every codeword by linearity.
inline KLReport verify_kl_conditions(const StabilizerCode& code,
                                     const std::vector<int>& character,
                                     const std::vector<PauliElement>& errors,
                                     double tol = 1e-9) {
  if (code.n() > 10)
    throw std::invalid_argument(
        "condition verification supports at most 10 qubits");
  for (const PauliElement& e : errors)
    if (e.qubits() != code.n())
      throw std::invalid_argument("error length does not match the code");
  std::vector<StateVector> basis = codespace_basis(code, character);
  size_t dim = basis.size();
  KLReport report;
  std::vector<std::complex<double>> diag(dim);
  for (size_t i = 0; i < errors.size(); ++i) {
    PauliElement inv = inverse(errors[i]);
    for (size_t j = i; j < errors.size(); ++j) {
      PauliElement pair_op = multiply(inv, errors[j]);
      for (size_t c2 = 0; c2 < dim; ++c2) {
        StateVector image = apply_pauli(pair_op, basis[c2]);
        for (size_t c1 = 0; c1 < dim; ++c1) {
          std::complex<double> elem = inner(basis[c1], image);
          if (c1 == c2) {
            diag[c1] = elem;
            continue;
          }
          if (std::abs(elem) > tol) {
            report.satisfied = false;
            report.violation = {i, j, c1, c2, true, elem};
            return report;
          }
        }
      }
      for (size_t c1 = 0; c1 < dim; ++c1)
        for (size_t c2 = c1 + 1; c2 < dim; ++c2) {
          std::complex<double> delta = diag[c1] - diag[c2];
          if (std::abs(delta) > tol) {
            report.satisfied = false;
            report.violation = {i, j, c1, c2, false, delta};
            return report;
          }
        }
    }
  }
  return report;
}

// Dense complex matrix on the same index convention, for small-n oracle
// checks of the operator algebra.
class DenseMatrix {
 public:
  explicit DenseMatrix(size_t dim) : dim_(dim), m_(dim * dim) {}

  static DenseMatrix identity(size_t dim) {
    DenseMatrix out(dim);
    for (size_t i = 0; i < dim; ++i) out.at(i, i) = 1.0;
    return out;
  }

  size_t dim() const { return dim_; }
  std::complex<double>& at(size_t r, size_t c) { return m_[r * dim_ + c]; }
  const std::complex<double>& at(size_t r, size_t c) const {
    return m_[r * dim_ + c];
  }

  DenseMatrix multiply(const DenseMatrix& o) const {
    if (dim_ != o.dim_)
      throw std::invalid_argument("matrix dimension mismatch in product");
    DenseMatrix out(dim_);
    for (size_t r = 0; r < dim_; ++r)
      for (size_t k = 0; k < dim_; ++k) {
        std::complex<double> v = at(r, k);
        if (v == std::complex<double>{}) continue;
        for (size_t c = 0; c < dim_; ++c) out.at(r, c) += v * o.at(k, c);
      }
    return out;
  }

  DenseMatrix adjoint() const {
    DenseMatrix out(dim_);
    for (size_t r = 0; r < dim_; ++r)
      for (size_t c = 0; c < dim_; ++c) out.at(r, c) = std::conj(at(c, r));
    return out;
  }

  StateVector apply(const StateVector& psi) const {
    if (psi.dim() != dim_)
      throw std::invalid_argument("matrix and state dimension mismatch");
    StateVector out(psi.qubits());
    for (size_t r = 0; r < dim_; ++r)
      for (size_t c = 0; c < dim_; ++c) out[r] += at(r, c) * psi[c];
    return out;
  }

  double distance_to(const DenseMatrix& o) const {
    if (dim_ != o.dim_)
      throw std::invalid_argument("matrix dimension mismatch in comparison");
    double worst = 0;
    for (size_t i = 0; i < m_.size(); ++i)
      worst = std::max(worst, std::abs(m_[i] - o.m_[i]));
    return worst;
  }

  bool is_unitary(double tol = 1e-12) const {
    return multiply(adjoint()).distance_to(identity(dim_)) <= tol;
  }

 private:
  size_t dim_;
  std::vector<std::complex<double>> m_;
};

// Matrix of a Pauli element: the operator sends |v> to
// phase (-1)^{b.v} |v+a>, so column v has its single entry in row v+a.
inline DenseMatrix pauli_matrix(const PauliElement& e) {
  size_t n = e.qubits();
  if (n > kMaxStateQubits)
    throw std::invalid_argument("state vectors support at most 12 qubits");
  static const std::complex<double> kPhases[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> phase = kPhases[e.phase_pow()];
  size_t amask = detail::index_mask(e.vec().a);
  size_t bmask = detail::index_mask(e.vec().b);
  DenseMatrix out(size_t{1} << n);
  for (size_t v = 0; v < out.dim(); ++v) {
    std::complex<double> amp = phase;
    if (detail::parity(bmask & v)) amp = -amp;
    out.at(v ^ amask, v) = amp;
  }
  return out;
}

// Hilbert-space matrices of the symmetry generators, for conjugation checks
// against the binary-matrix actions at small n.

inline DenseMatrix unitary_hadamard_all(size_t n) {
  size_t dim = size_t{1} << n;
  DenseMatrix out(dim);
  double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c)
      out.at(r, c) = detail::parity(r & c) ? -scale : scale;
  return out;
}

inline DenseMatrix unitary_hadamard_single(size_t n, size_t j) {
  if (j < 1 || j > n) throw std::invalid_argument("qubit index out of range");
  size_t dim = size_t{1} << n;
  size_t bit = size_t{1} << (n - j);  // printed qubit j is this index bit
  double scale = 1.0 / std::sqrt(2.0);
  DenseMatrix out(dim);
  for (size_t c = 0; c < dim; ++c) {
    // H on one qubit: |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2.
    out.at(c & ~bit, c) += scale;
    out.at(c | bit, c) += (c & bit) ? -scale : scale;
  }
  return out;
}

// Permutation |v> -> |vA| on printed row vectors; conjugation sends X(a) to
// X(aA) and Z(b) to Z(bA^{-T}).
inline DenseMatrix unitary_gl(const GF2Matrix& a) {
  size_t n = a.col_count();
  if (a.row_count() != n)
    throw std::invalid_argument("basis-change matrix must be n x n");
  if (!a.inverse())
    throw std::invalid_argument("basis-change matrix is singular");
  size_t dim = size_t{1} << n;
  DenseMatrix out(dim);
  for (size_t v = 0; v < dim; ++v) {
    BitVec row(n);
    for (size_t i = 0; i < n; ++i)
      if ((v >> (n - 1 - i)) & 1) row ^= a.row(i);
    out.at(StateVector::index_of(row), v) = 1.0;
  }
  return out;
}

// diag[(-1)^{Q_M(v)}] with Q_M(v) = sum_{i<j} M_ij v_i v_j, for symmetric M
// with zero diagonal.
inline DenseMatrix unitary_diag(const GF2Matrix& m) {
  size_t n = m.col_count();
  if (m.row_count() != n || !m.is_symmetric() || !m.zero_diagonal())
    throw std::invalid_argument(
        "phase matrix must be symmetric with zero diagonal");
  size_t dim = size_t{1} << n;
  DenseMatrix out(dim);
  for (size_t v = 0; v < dim; ++v) {
    int q = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        q ^= static_cast<int>(m.get(i, j)) &
             static_cast<int>((v >> (n - 1 - i)) & 1) &
             static_cast<int>((v >> (n - 1 - j)) & 1);
    out.at(v, v) = q ? -1.0 : 1.0;
  }
  return out;
}

// diag[i^{T_P(v)}] with T_P(v) = sum_j P_jj v_j + 2 sum_{i<j} P_ij v_i v_j
// (mod 4), for symmetric P; P = I is diag(1, i) on every qubit.
inline DenseMatrix unitary_diag_complex(const GF2Matrix& p) {
  size_t n = p.col_count();
  if (p.row_count() != n || !p.is_symmetric())
    throw std::invalid_argument("phase matrix must be symmetric");
  static const std::complex<double> kPhases[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  size_t dim = size_t{1} << n;
  DenseMatrix out(dim);
  for (size_t v = 0; v < dim; ++v) {
    int t = 0;
    for (size_t i = 0; i < n; ++i) {
      size_t vi = (v >> (n - 1 - i)) & 1;
      if (p.get(i, i) && vi) t += 1;
      for (size_t j = i + 1; j < n; ++j)
        if (p.get(i, j) && vi && ((v >> (n - 1 - j)) & 1)) t += 2;
    }
    out.at(v, v) = kPhases[t % 4];
  }
  return out;
}

}  // namespace stabgeo
