#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "stabgeo/code.hpp"
#include "stabgeo/gf2.hpp"

namespace stabgeo {

struct DistanceOptions {
  size_t workers = 0;              // 0 means default_worker_count()
  std::optional<uint64_t> budget;  // cap on nonzero vectors to scan
  std::optional<size_t> block_bits;  // override the parallel split, for tests
};

// Minimum symplectic weights over the orthogonal subspace. The *_minus_S
// fields are empty when no vector outside the stabilizer subspace was seen
// (either none exists or a budgeted scan stopped early). `complete` is false
// exactly when a budget cut the enumeration short, making the reported
// minima upper bounds rather than exact values.
struct DistanceReport {
  size_t min_weight_dual = 0;
  std::optional<size_t> min_weight_dual_minus_S;
  SympVector witness;  // first minimum-weight dual vector in scan order
  std::optional<SympVector> witness_minus_S;
  uint64_t vectors_scanned = 0;
  bool complete = true;
};

// Worker count used when DistanceOptions.workers is 0: the STABGEO_WORKERS
// environment variable if set, otherwise the hardware thread count.
inline size_t default_worker_count() {
  if (const char* env = std::getenv("STABGEO_WORKERS")) {
    size_t value = 0;
    bool ok = *env != '\0';
    for (const char* c = env; *c; ++c) {
      if (*c < '0' || *c > '9') {
        ok = false;
        break;
      }
      value = value * 10 + static_cast<size_t>(*c - '0');
    }
    if (!ok || value == 0)
      throw std::invalid_argument(
          "STABGEO_WORKERS must be a positive integer");
    return value;
  }
  size_t hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

namespace detail {

// Enumeration basis for the Gray-code walk, split into a/b halves stored as
// flat word arrays (row r occupies [r*words, (r+1)*words)). Rows below
// dim_s span the stabilizer subspace, so the walk index i visits a
// stabilizer element exactly when i < 2^dim_s.
struct GrayBasis {
  size_t n = 0;
  size_t words = 0;
  size_t dim_s = 0;
  std::vector<uint64_t> a, b;

  size_t rows() const { return words ? a.size() / words : 0; }

  void add_row(const BitVec& packed) {
    size_t base = a.size();
    a.resize(base + words, 0);
    b.resize(base + words, 0);
    for (size_t i = 0; i < n; ++i) {
      if (packed.get(i)) a[base + (i >> 6)] |= uint64_t{1} << (i & 63);
      if (packed.get(n + i)) b[base + (i >> 6)] |= uint64_t{1} << (i & 63);
    }
  }

  // v(gray) = XOR of the rows selected by the bits of gray.
  void load(uint64_t gray, uint64_t* acc_a, uint64_t* acc_b) const {
    for (size_t w = 0; w < words; ++w) acc_a[w] = acc_b[w] = 0;
    while (gray) {
      size_t r = static_cast<size_t>(std::countr_zero(gray));
      gray &= gray - 1;
      for (size_t w = 0; w < words; ++w) {
        acc_a[w] ^= a[r * words + w];
        acc_b[w] ^= b[r * words + w];
      }
    }
  }

  SympVector vector_at(uint64_t index) const {
    std::vector<uint64_t> acc_a(words), acc_b(words);
    load(index ^ (index >> 1), acc_a.data(), acc_b.data());
    SympVector v = SympVector::zero(n);
    for (size_t i = 0; i < n; ++i) {
      if ((acc_a[i >> 6] >> (i & 63)) & 1) v.a.set(i, true);
      if ((acc_b[i >> 6] >> (i & 63)) & 1) v.b.set(i, true);
    }
    return v;
  }
};

// Minimum tracker ordered by (weight, scan index); the scan feeds indices in
// increasing order, so a strict weight improvement keeps the earliest index.
struct ScanBest {
  size_t wt = SIZE_MAX;
  uint64_t index = UINT64_MAX;

  void merge(const ScanBest& o) {
    if (o.wt < wt || (o.wt == wt && o.index < index)) *this = o;
  }
};

// Walks scan indices [lo, hi] (inclusive), one basis-row XOR per step.
inline void scan_range(const GrayBasis& basis, uint64_t lo, uint64_t hi,
                       ScanBest& best, std::vector<uint64_t>& acc_a,
                       std::vector<uint64_t>& acc_b) {
  basis.load(lo ^ (lo >> 1), acc_a.data(), acc_b.data());
  size_t words = basis.words;
  size_t best_wt = best.wt;
  uint64_t best_index = best.index;
  if (words == 1) {
    uint64_t aa = acc_a[0], bb = acc_b[0];
    const uint64_t* ra = basis.a.data();
    const uint64_t* rb = basis.b.data();
    uint64_t i = lo;
    while (true) {
      size_t wt = static_cast<size_t>(std::popcount(aa | bb));
      if (wt < best_wt) {
        best_wt = wt;
        best_index = i;
      }
      if (i == hi) break;
      ++i;
      size_t r = static_cast<size_t>(std::countr_zero(i));
      aa ^= ra[r];
      bb ^= rb[r];
    }
  } else {
    uint64_t i = lo;
    while (true) {
      size_t wt = 0;
      for (size_t w = 0; w < words; ++w)
        wt += static_cast<size_t>(std::popcount(acc_a[w] | acc_b[w]));
      if (wt < best_wt) {
        best_wt = wt;
        best_index = i;
      }
      if (i == hi) break;
      ++i;
      size_t r = static_cast<size_t>(std::countr_zero(i));
      for (size_t w = 0; w < words; ++w) {
        acc_a[w] ^= basis.a[r * words + w];
        acc_b[w] ^= basis.b[r * words + w];
      }
    }
  }
  best.wt = best_wt;
  best.index = best_index;
}

}  // namespace detail

// Enumerates every nonzero vector orthogonal to the stabilizer (Gray-code
// order over the coefficient space, stabilizer basis rows in the low bit
// positions) and reports the minimum weights over the whole subspace and
// over its complement of the stabilizer. Deterministic for any worker
// count: per-block minima are combined by (weight, scan index), which is
// exactly the serial result.
inline DistanceReport distance(const StabilizerCode& code,
                               const DistanceOptions& opts = {}) {
  if (code.n() == 0) throw std::invalid_argument("empty code");
  size_t k = code.k_bar();
  size_t m = code.dual_dim();
  if (!opts.budget && m > 34)
    throw std::invalid_argument(
        "orthogonal subspace too large to enumerate; set a scan budget");
  if (opts.budget && *opts.budget == 0)
    throw std::invalid_argument("scan budget must be positive");

  // Enumeration basis: stabilizer echelon rows first, then vectors from the
  // orthogonal-subspace basis that extend them.
  detail::GrayBasis basis;
  basis.n = code.n();
  basis.words = (code.n() + 63) / 64;
  basis.dim_s = k;
  Echelon acc(2 * code.n());
  for (const BitVec& row : code.stabilizer_echelon().rows()) {
    acc.add(row);
    basis.add_row(row);
  }
  for (const BitVec& row : code.dual_basis().rows())
    if (acc.add(row)) basis.add_row(row);
  if (basis.rows() != m)
    throw std::logic_error("orthogonal basis construction out of step");

  uint64_t total = (m >= 64) ? UINT64_MAX : ((uint64_t{1} << m) - 1);
  uint64_t last = total;
  if (opts.budget && *opts.budget < last) last = *opts.budget;
  uint64_t split = (k >= 64) ? UINT64_MAX : (uint64_t{1} << k);

  // Power-of-two blocks over [1, last]; any split yields the same merged
  // result, so the block count only affects load balance.
  size_t workers = opts.workers ? opts.workers : default_worker_count();
  size_t range_bits = static_cast<size_t>(std::bit_width(last));
  size_t block_bits = opts.block_bits
                          ? *opts.block_bits
                          : std::min<size_t>(
                                {range_bits,
                                 static_cast<size_t>(std::bit_width(
                                     uint64_t{16} * workers)),
                                 range_bits > 12 ? range_bits - 12 : 0});
  if (block_bits > range_bits) block_bits = range_bits;
  if (block_bits > 24) block_bits = 24;  // cap the bookkeeping arrays
  if (range_bits - block_bits > 63) block_bits = range_bits - 63;
  size_t blocks = size_t{1} << block_bits;
  uint64_t block_len = uint64_t{1} << (range_bits - block_bits);

  std::vector<detail::ScanBest> dual_best(blocks), ns_best(blocks);
  std::atomic<size_t> next_block{0};
  auto work = [&]() {
    std::vector<uint64_t> acc_a(basis.words), acc_b(basis.words);
    while (true) {
      size_t blk = next_block.fetch_add(1);
      if (blk >= blocks) return;
      uint64_t lo = blk * block_len;
      uint64_t hi = lo + (block_len - 1);
      if (lo == 0) lo = 1;  // index 0 is the zero vector
      if (hi > last) hi = last;
      if (lo > hi) continue;
      // Indices below `split` stay inside the stabilizer subspace; at and
      // above it they never return, so the complement tracker sees a clean
      // subrange.
      if (hi < split) {
        detail::scan_range(basis, lo, hi, dual_best[blk], acc_a, acc_b);
      } else if (lo >= split) {
        detail::scan_range(basis, lo, hi, ns_best[blk], acc_a, acc_b);
        dual_best[blk] = ns_best[blk];
      } else {
        detail::scan_range(basis, lo, split - 1, dual_best[blk], acc_a, acc_b);
        detail::scan_range(basis, split, hi, ns_best[blk], acc_a, acc_b);
        dual_best[blk].merge(ns_best[blk]);
      }
    }
  };

  size_t spawn = std::min(workers, blocks);
  if (spawn <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (size_t t = 0; t < spawn; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  detail::ScanBest dual, ns;
  for (size_t b = 0; b < blocks; ++b) {
    dual.merge(dual_best[b]);
    ns.merge(ns_best[b]);
  }
  if (dual.wt == SIZE_MAX)
    throw std::logic_error("scan visited no vectors");

  DistanceReport report;
  report.min_weight_dual = dual.wt;
  report.witness = basis.vector_at(dual.index);
  if (ns.wt != SIZE_MAX) {
    report.min_weight_dual_minus_S = ns.wt;
    report.witness_minus_S = basis.vector_at(ns.index);
  }
  report.vectors_scanned = last;
  report.complete = (last == total);
  return report;
}

}  // namespace stabgeo
