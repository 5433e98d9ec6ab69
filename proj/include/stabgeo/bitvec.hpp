#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabgeo {

// Fixed-length bit vector over GF(2), packed LSB-first into 64-bit words.
// Bit i is printed position i, so from_string("110") sets bits 0 and 1 and
// to_string() round-trips the same left-to-right text.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_string(std::string_view s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string may contain only '0' and '1'");
      }
    }
    return v;
  }

  size_t size() const { return n_; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  size_t word_count() const { return w_.size(); }
  uint64_t word(size_t i) const { return w_[i]; }

  BitVec& operator^=(const BitVec& o) {
    require_same_size(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or size() if the vector is zero.
  size_t lowest_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
  }

  // Lexicographic order on the printed string (position 0 compares first).
  bool printed_less(const BitVec& o) const {
    require_same_size(o);
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        size_t bit = std::countr_zero(d);
        return !((w_[i] >> bit) & 1);
      }
    }
    return false;
  }

  // popcount(u | v) without materializing the union.
  static size_t or_weight(const BitVec& u, const BitVec& v) {
    u.require_same_size(v);
    size_t c = 0;
    for (size_t i = 0; i < u.w_.size(); ++i) c += std::popcount(u.w_[i] | v.w_[i]);
    return c;
  }

  // Parity of the overlap: sum_i u_i v_i mod 2.
  static bool dot(const BitVec& u, const BitVec& v) {
    u.require_same_size(v);
    uint64_t acc = 0;
    for (size_t i = 0; i < u.w_.size(); ++i) acc ^= u.w_[i] & v.w_[i];
    return std::popcount(acc) & 1;
  }

  // Rotate one printed position rightwards: position j takes the old value
  // at j-1 (mod n), so "11000" becomes "01100".
  BitVec cyclic_shift() const {
    BitVec out(n_);
    for (size_t i = 0; i < n_; ++i)
      if (get(i)) out.set((i + 1) % n_, true);
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  void require_same_size(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("bit vector length mismatch");
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace stabgeo
