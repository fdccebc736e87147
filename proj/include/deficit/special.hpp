#pragma once

// Index sequences tied to A268289: half-value indices (A026644), the
// Lichtenberg sequence (A000975), per-octave minima and the 4^m fixed points.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "deficit/bits.hpp"
#include "deficit/sequence.hpp"

namespace deficit {

/// All n in [1, limit] with A(n) = n/2. limit <= 2^24.
inline std::vector<SeqIndex> half_value_indices(SeqIndex limit) {
  if (limit > (SeqIndex{1} << 24)) throw std::out_of_range("half_value_indices: limit exceeds 2^24");
  std::vector<SeqIndex> out;
  for (SeqIndex n = 1; n <= limit; ++n)
    if (2 * compute_via_recurrence(n) == static_cast<SeqValue>(n)) out.push_back(n);
  return out;
}

/// a(1) = 2, a(2) = 4, a(j) = a(j-1) + 2 a(j-2) + 2.
inline std::vector<SeqIndex> a026644_recurrence(std::size_t count) {
  if (count < 1) throw std::invalid_argument("a026644_recurrence: count must be positive");
  std::vector<SeqIndex> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (j < 2) {
      out.push_back(j == 0 ? 2 : 4);
      continue;
    }
    const int128 next = static_cast<int128>(out[j - 1]) + 2 * static_cast<int128>(out[j - 2]) + 2;
    out.push_back(to_index(next, "a026644 term"));
  }
  return out;
}

inline std::vector<SeqValue> lichtenberg(std::size_t count) {
  std::vector<SeqValue> out;
  for (SeqIndex a : a026644_recurrence(count)) out.push_back(static_cast<SeqValue>(a / 2));
  return out;
}

struct IntervalMinimum {
  SeqIndex argmin = 0;  // smallest index attaining the minimum
  SeqValue min = 0;
  std::vector<SeqIndex> argmins;  // every index attaining it, ascending
};

/// Minimum of A over [2^k, 2^(k+1)), scanned incrementally from A(2^k).
inline IntervalMinimum interval_minimum(int k) {
  if (k < 1 || k > 22) throw std::out_of_range("interval_minimum: k outside [1, 22]");
  const SeqIndex lo = SeqIndex{1} << k;
  const SeqIndex hi = lo << 1;
  IntervalMinimum out;
  SeqValue a = compute_via_recurrence(lo);
  out.min = a;
  out.argmins = {lo};
  for (SeqIndex n = lo + 1; n < hi; ++n) {
    a += deficient_digit_sum(n);
    if (a < out.min) {
      out.min = a;
      out.argmins.clear();
    }
    if (a == out.min) out.argmins.push_back(n);
  }
  out.argmin = out.argmins.front();
  return out;
}

struct FixedPoint {
  int m = 0;
  SeqIndex index = 0;     // (5 * 4^m - 2) / 3
  SeqValue value = 0;     // A(index)
  SeqValue expected = 0;  // 4^m
  bool holds = false;
};

/// A((5*4^m - 2)/3) = 4^m for m = 0..m_max. Failures are reported through
/// FixedPoint::holds rather than thrown.
inline std::vector<FixedPoint> power4_fixed_points(int m_max) {
  if (m_max < 0) throw std::invalid_argument("power4_fixed_points: m_max must be nonnegative");
  std::vector<FixedPoint> out;
  for (int m = 0; m <= m_max; ++m) {
    const int128 numerator = 5 * pow2_wide(2 * m) - 2;
    if (numerator % 3 != 0) throw std::logic_error("(5*4^m - 2) is not divisible by 3");
    FixedPoint fp;
    fp.m = m;
    fp.index = to_index(numerator / 3, "power4 index");
    fp.value = compute_via_recurrence(fp.index);
    fp.expected = static_cast<SeqValue>(pow2_wide(2 * m));
    fp.holds = fp.value == fp.expected;
    out.push_back(fp);
  }
  return out;
}

}  // namespace deficit
