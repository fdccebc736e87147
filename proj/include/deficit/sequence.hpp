#pragma once

// A268289, the cumulated deficient binary digit sum
//
//   A(n) = sum_{m=1..n} (#ones(m) - #zeros(m)),   A(0) = 0,
//
// computed by five independent routes that must agree exactly:
//   cumulative_naive        digit counting over 1..n
//   cardinality_S           |S_n| by direct membership counting
//   compute_via_recurrence  leading-bit descent, O(popcount(n)) steps
//   compute_via_lemma2      closed form in tau at (n+1)/2^m - 1
//   compute_via_takagi      n - 2^k tau((n+1)/2^k - 1)
//
// All indices are capped at 2^60 so the closed forms fit in 128-bit arithmetic.

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "deficit/bits.hpp"
#include "deficit/rational.hpp"
#include "deficit/takagi.hpp"

namespace deficit {

inline SeqValue deficient_digit_sum(SeqIndex m) {
  if (m == 0) throw std::invalid_argument("deficient_digit_sum: m must be >= 1");
  return 2 * static_cast<SeqValue>(std::popcount(m)) - static_cast<SeqValue>(std::bit_width(m));
}

inline SeqValue cumulative_naive(SeqIndex n) {
  check_index(n);
  SeqValue acc = 0;
  for (SeqIndex m = 1; m <= n; ++m) acc += deficient_digit_sum(m);
  return acc;
}

/// m belongs to S_n iff (n - m) mod 2^(b+1) < 2^b, b = floor(log2 m).
inline bool s_membership(SeqIndex m, SeqIndex n) {
  if (m < 1 || m > n) throw std::invalid_argument("s_membership: requires 1 <= m <= n");
  check_index(n);
  const SeqIndex low = SeqIndex{1} << floor_log2(m);
  return ((n - m) & ((low << 1) - 1)) < low;
}

inline SeqValue cardinality_S(SeqIndex n) {
  check_index(n);
  SeqValue count = 0;
  for (SeqIndex m = 1; m <= n; ++m) count += s_membership(m, n) ? 1 : 0;
  return count;
}

struct RecurrenceTrace {
  SeqValue value = 0;
  int steps = 0;  // recurrence applications, excluding the power-of-two base case
};

/// Strips the leading bit repeatedly: for n = r + 2^k with 1 <= r < 2^k,
///   A(r + 2^k) = A(r) + (r+1)(floor(log2 r) - k + 2) + 2^k - 2^(floor(log2 r)+1)
/// until a power of two remains, where A(2^j) = 2^j - j.
inline RecurrenceTrace recurrence_trace(SeqIndex n) {
  check_index(n);
  RecurrenceTrace out;
  if (n == 0) return out;
  int128 acc = 0;
  SeqIndex cur = n;
  while (std::popcount(cur) > 1) {
    const int k = floor_log2(cur);
    const SeqIndex rest = cur - (SeqIndex{1} << k);
    const int j = floor_log2(rest);
    acc += static_cast<int128>(rest + 1) * (j - k + 2) + pow2_wide(k) - pow2_wide(j + 1);
    cur = rest;
    ++out.steps;
  }
  const int j = floor_log2(cur);
  acc += pow2_wide(j) - j;
  out.value = static_cast<SeqValue>(acc);
  return out;
}

inline SeqValue compute_via_recurrence(SeqIndex n) { return recurrence_trace(n).value; }

namespace detail {

// 2^scale * tau(x) for a dyadic x whose exponent is at most `scale`.
inline int128 scaled_tau(const Dyadic& x, int scale) {
  const Dyadic t = takagi_dyadic(x);
  if (t.exp() > scale) throw std::logic_error("scaled_tau: 2^scale * tau(x) is not an integer");
  return static_cast<int128>(t.num()) << (scale - t.exp());
}

}  // namespace detail

/// A(n) = (n+1)(m - k + 1) - (2 + tau(xi)) 2^m + 2^(k+1) - 1
/// with k = floor(log2 n), m = floor(log2(n+1)), xi = (n+1) 2^-m - 1.
inline SeqValue compute_via_lemma2(SeqIndex n) {
  check_index(n);
  if (n == 0) return 0;
  const int k = floor_log2(n);
  const int m = floor_log2(n + 1);
  const SeqIndex top = SeqIndex{1} << m;
  const Dyadic xi(static_cast<std::int64_t>(n + 1 - top), m);
  const int128 v = static_cast<int128>(n + 1) * (m - k + 1) - pow2_wide(m + 1) -
                   detail::scaled_tau(xi, m) + pow2_wide(k + 1) - 1;
  return static_cast<SeqValue>(v);
}

/// A(n) = n - 2^k tau((n+1)/2^k - 1), k = floor(log2 n).
inline SeqValue compute_via_takagi(SeqIndex n) {
  check_index(n);
  if (n == 0) return 0;
  const int k = floor_log2(n);
  const SeqIndex low = SeqIndex{1} << k;
  const Dyadic xi(static_cast<std::int64_t>(n + 1 - low), k);
  return static_cast<SeqValue>(static_cast<int128>(n) - detail::scaled_tau(xi, k));
}

}  // namespace deficit
