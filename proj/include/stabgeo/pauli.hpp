#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabgeo/gf2.hpp"

namespace stabgeo {

// An element of the group of signed Pauli products, kept in the unique normal
// form  phase · X(a)Z(b)  with the phase written as a power of i. In real
// mode the phase is restricted to {+1, -1} (powers 0 and 2); complex mode
// allows all of {1, i, -1, -i}.
//
// Convention note: the two-qubit-letter "Y" position (a_j = b_j = 1) denotes
// the product sigma_x sigma_z, which is -i times the Hermitian Pauli Y.
class PauliElement {
 public:
  PauliElement() = default;

  PauliElement(SympVector v, int phase_pow, bool complex_mode = false)
      : v_(std::move(v)),
        phase_pow_(((phase_pow % 4) + 4) % 4),
        complex_(complex_mode) {
    if (!complex_ && phase_pow_ % 2 != 0)
      throw std::invalid_argument("imaginary phase requires complex mode");
  }

  static PauliElement identity(size_t n, bool complex_mode = false) {
    return PauliElement(SympVector::zero(n), 0, complex_mode);
  }

  static PauliElement from_xz(BitVec a, BitVec b, bool negative = false,
                              bool complex_mode = false) {
    return PauliElement(SympVector(std::move(a), std::move(b)),
                        negative ? 2 : 0, complex_mode);
  }

  const SympVector& vec() const { return v_; }
  size_t qubits() const { return v_.qubits(); }
  bool complex_mode() const { return complex_; }

  // Phase as a power of i, in {0, 2} for real mode and 0..3 for complex mode.
  int phase_pow() const { return phase_pow_; }
  bool is_negative() const { return phase_pow_ == 2; }

  size_t weight() const { return symplectic_weight(v_); }

  friend bool operator==(const PauliElement&, const PauliElement&) = default;

  std::string to_string() const {
    std::string s;
    switch (phase_pow_) {
      case 0: break;
      case 1: s += "i·"; break;
      case 2: s += "-"; break;
      case 3: s += "-i·"; break;
    }
    s += "X(" + v_.a.to_string() + ")Z(" + v_.b.to_string() + ")";
    return s;
  }

  // Parses the to_string grammar: [+|-] [i·] X(bits)Z(bits). An imaginary
  // phase in the text forces complex mode regardless of the flag.
  static PauliElement parse(std::string_view s, bool complex_mode = false) {
    int pow = 0;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      if (s.front() == '-') pow = 2;
      s.remove_prefix(1);
    }
    if (s.starts_with("i·")) {
      pow += 1;
      s.remove_prefix(std::string_view("i·").size());
      complex_mode = true;
    }
    auto expect = [&s](std::string_view tok) {
      if (!s.starts_with(tok))
        throw std::invalid_argument("malformed Pauli element text");
      s.remove_prefix(tok.size());
    };
    auto bits = [&s, &expect](std::string_view open) {
      expect(open);
      size_t close = s.find(')');
      if (close == std::string_view::npos)
        throw std::invalid_argument("malformed Pauli element text");
      BitVec v = BitVec::from_string(s.substr(0, close));
      s.remove_prefix(close + 1);
      return v;
    };
    BitVec a = bits("X(");
    BitVec b = bits("Z(");
    if (!s.empty()) throw std::invalid_argument("malformed Pauli element text");
    return PauliElement(SympVector(std::move(a), std::move(b)), pow,
                        complex_mode);
  }

 private:
  SympVector v_;
  int phase_pow_ = 0;  // power of i, mod 4
  bool complex_ = false;
};

// Group product, renormalized to X(a)Z(b) form. Moving Z(b1) past X(a2)
// contributes the sign (-1)^{b1 . a2}.
inline PauliElement multiply(const PauliElement& e1, const PauliElement& e2) {
  if (e1.qubits() != e2.qubits())
    throw std::invalid_argument("qubit count mismatch in Pauli product");
  if (e1.complex_mode() != e2.complex_mode())
    throw std::invalid_argument("phase mode mismatch in Pauli product");
  int pow = e1.phase_pow() + e2.phase_pow() +
            2 * static_cast<int>(BitVec::dot(e1.vec().b, e2.vec().a));
  return PauliElement(e1.vec() ^ e2.vec(), pow, e1.complex_mode());
}

inline PauliElement square(const PauliElement& e) { return multiply(e, e); }

// Group inverse: X(a)Z(b) squares to (-1)^{Q} I, so the vector part is its
// own inverse up to that sign, and the scalar phase inverts separately.
inline PauliElement inverse(const PauliElement& e) {
  int pow = (4 - e.phase_pow()) % 4 +
            2 * static_cast<int>(quadratic_form(e.vec()));
  return PauliElement(e.vec(), pow, e.complex_mode());
}

// True iff e1 e2 = e2 e1; the commutator sign is
// (-1)^{symplectic_product(e1, e2)} and phases are central.
inline bool commutes(const PauliElement& e1, const PauliElement& e2) {
  if (e1.qubits() != e2.qubits())
    throw std::invalid_argument("qubit count mismatch in commutation check");
  return !symplectic_product(e1.vec(), e2.vec());
}

// All +1-phase elements of symplectic weight at most t: the identity plus
// every placement of the three single-qubit letters on up to t positions.
// Ordered by weight, ties broken lexicographically on the printed "a|b" text.
inline std::vector<PauliElement> weight_t_error_set(size_t n, size_t t) {
  if (t > n) throw std::invalid_argument("weight bound exceeds qubit count");
  std::vector<PauliElement> out;
  std::vector<SympVector> layer;
  for (size_t w = 0; w <= t; ++w) {
    layer.clear();
    // Enumerate supports of size w, then the 3^w letter assignments.
    std::vector<size_t> pos(w);
    for (size_t i = 0; i < w; ++i) pos[i] = i;
    bool more = (w <= n);
    while (more) {
      size_t assignments = 1;
      for (size_t i = 0; i < w; ++i) assignments *= 3;
      for (size_t code = 0; code < assignments; ++code) {
        SympVector v = SympVector::zero(n);
        size_t c = code;
        for (size_t i = 0; i < w; ++i) {
          switch (c % 3) {  // 0: X, 1: Z, 2: XZ
            case 0: v.a.set(pos[i], true); break;
            case 1: v.b.set(pos[i], true); break;
            case 2: v.a.set(pos[i], true); v.b.set(pos[i], true); break;
          }
          c /= 3;
        }
        layer.push_back(std::move(v));
      }
      // Next support combination in lexicographic order.
      if (w == 0) break;
      size_t i = w;
      while (i > 0 && pos[i - 1] == n - w + (i - 1)) --i;
      if (i == 0) {
        more = false;
      } else {
        ++pos[i - 1];
        for (size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
    std::sort(layer.begin(), layer.end(),
              [](const SympVector& x, const SympVector& y) {
                return printed_less(x, y);
              });
    for (SympVector& v : layer) out.emplace_back(std::move(v), 0);
  }
  return out;
}

}  // namespace stabgeo
