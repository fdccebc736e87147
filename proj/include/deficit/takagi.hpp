#pragma once

// Exact evaluation of the Takagi (blancmange) function
//
//   tau(x) = sum_{i >= 0} s(2^i x) / 2^i,   s(y) = distance from y to the nearest integer,
//
// at dyadic and general rational points, plus interval enclosures and the
// functional equations tau satisfies.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deficit/bits.hpp"
#include "deficit/rational.hpp"

namespace deficit {

struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("Interval: lo > hi");
  }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

inline Rational dist_nearest_integer(const Rational& x) {
  Rational f = x.frac();
  Rational g = Rational(1) - f;
  return g < f ? g : f;
}

namespace detail {

inline void require_unit(const Rational& x) {
  if (x < Rational(0) || Rational(1) < x) throw std::domain_error("takagi: argument outside [0, 1]");
}

inline void require_unit(const Dyadic& x) {
  if (x < Dyadic(0, 0) || Dyadic(1, 0) < x)
    throw std::domain_error("takagi: argument outside [0, 1]");
}

// Residue p mod q of a unit-interval rational, with q as a machine word.
// The doubling map is iterated on residues, so 2q must fit in 64 bits.
struct Residue {
  std::uint64_t r;
  std::uint64_t q;
};

inline Residue to_residue(const Rational& x) {
  constexpr std::uint64_t kMaxDen = std::uint64_t{1} << 62;
  if (x.den() > kMaxDen) throw std::out_of_range("takagi: denominator exceeds 2^62");
  const auto q = static_cast<std::uint64_t>(x.den());
  const auto p = static_cast<std::uint64_t>(x.num());
  return {p % q, q};
}

inline std::uint64_t nearest_gap(std::uint64_t r, std::uint64_t q) { return r < q - r ? r : q - r; }

}  // namespace detail

/// Takagi function at a dyadic x in [0, 1]. Exactly x.exp() summands are
/// evaluated; 2^i x is an integer for every later term. `summands`, when
/// given, receives that count.
inline Dyadic takagi_dyadic(const Dyadic& x, int* summands = nullptr) {
  detail::require_unit(x);
  const int e = x.exp();
  const std::uint64_t scale = std::uint64_t{1} << e;
  std::uint64_t r = static_cast<std::uint64_t>(x.num()) % scale;
  // every summand is an integer multiple of 2^-e
  std::uint64_t total = 0;
  for (int i = 0; i < e; ++i) {
    total += detail::nearest_gap(r, scale) >> i;
    r = (r << 1) & (scale - 1);
  }
  if (summands != nullptr) *summands = e;
  return Dyadic(static_cast<std::int64_t>(total), e);
}

/// Takagi function at a rational x in [0, 1], evaluated exactly.
///
/// The doubling orbit frac(2^i x) is eventually periodic. The visited residues
/// are kept in a map to locate the start P and length L of the cycle; the
/// pre-period is summed directly and the periodic tail in closed form:
///
///   tau(x) = (2 D (2^L - 1) + 2 C) / (q 2^P (2^L - 1))
///
/// where D and C are the pre-period and cycle gaps min(r, q - r) read as
/// base-2 numerals. Denominators up to 2^62 are supported.
inline Rational takagi_rational(const Rational& x) {
  detail::require_unit(x);
  const auto [r0, q] = detail::to_residue(x);

  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<std::uint64_t> gaps;
  std::uint64_t r = r0;
  std::size_t cycle_start = 0;
  for (;;) {
    auto [it, fresh] = seen.try_emplace(r, gaps.size());
    if (!fresh) {
      cycle_start = it->second;
      break;
    }
    gaps.push_back(detail::nearest_gap(r, q));
    r = (r << 1) % q;
  }

  const std::size_t pre = cycle_start;
  const std::size_t period = gaps.size() - cycle_start;
  BigInt head = 0;
  for (std::size_t i = 0; i < pre; ++i) head = (head << 1) + gaps[i];
  BigInt cycle = 0;
  for (std::size_t i = pre; i < gaps.size(); ++i) cycle = (cycle << 1) + gaps[i];

  const BigInt mersenne = (BigInt(1) << period) - 1;
  BigInt num = 2 * head * mersenne + 2 * cycle;
  BigInt den = BigInt(q) * (BigInt(1) << pre) * mersenne;
  return Rational(std::move(num), std::move(den));
}

/// N-term truncation of the series with the tail bound 2^(1-N) appended.
inline Interval takagi_enclosure(const Rational& x, int terms) {
  if (terms < 1) throw std::invalid_argument("takagi_enclosure: terms must be positive");
  detail::require_unit(x);
  auto [r, q] = detail::to_residue(x);
  BigInt acc = 0;
  for (int i = 0; i < terms; ++i) {
    acc = (acc << 1) + detail::nearest_gap(r, q);
    r = (r << 1) % q;
  }
  Rational lo(std::move(acc), BigInt(q) << (terms - 1));
  Rational hi = lo + Rational(1).scaled(1 - terms);
  return {std::move(lo), std::move(hi)};
}

inline Rational takagi(const Dyadic& x) { return takagi_dyadic(x).to_rational(); }
inline Rational takagi(const Rational& x) { return takagi_rational(x); }

/// Checks, exactly at x and scale m >= 1:
///   tau((x+1) 2^-m) = 2^-m (m (x+1) - 2x + tau(x))
///   tau(x + 1/2)    = 1/2 - 2x + tau(x)          (only when x <= 1/2)
///   tau(x)          = tau(1 - x)
///   tau(x / 2)      = x/2 + tau(x)/2
inline bool check_functional_equations(const Dyadic& x, int m) {
  if (m < 1) throw std::invalid_argument("check_functional_equations: m must be positive");
  const Dyadic one(1, 0);
  const Dyadic half(1, 1);
  const Dyadic tx = takagi_dyadic(x);

  const Dyadic shifted = (x + one).scaled(-m);
  const Dyadic rhs3 = (Dyadic(m, 0) * (x + one) - x.scaled(1) + tx).scaled(-m);
  bool ok = takagi_dyadic(shifted) == rhs3;

  if (x <= half) ok = ok && takagi_dyadic(x + half) == half - x.scaled(1) + tx;
  ok = ok && takagi_dyadic(one - x) == tx;
  ok = ok && takagi_dyadic(x.scaled(-1)) == x.scaled(-1) + tx.scaled(-1);
  return ok;
}

/// Rational counterpart of the dyadic overload, using orbit evaluation.
inline bool check_functional_equations(const Rational& x, int m) {
  if (m < 1) throw std::invalid_argument("check_functional_equations: m must be positive");
  const Rational one(1);
  const Rational half(BigInt(1), BigInt(2));
  const Rational tx = takagi_rational(x);

  bool ok = takagi_rational((x + one).scaled(-m)) ==
            (Rational(m) * (x + one) - x.scaled(1) + tx).scaled(-m);
  if (x <= half) ok = ok && takagi_rational(x + half) == half - x.scaled(1) + tx;
  ok = ok && takagi_rational(one - x) == tx;
  ok = ok && takagi_rational(x.scaled(-1)) == x.scaled(-1) + tx.scaled(-1);
  return ok;
}

/// tau(n/2^k) <= (n/2^k + 1)/2 - 2^-(k+1), with k taken from the given
/// representation (which need not be in lowest terms).
inline bool tau_upper_bound_check(SeqIndex n, int k) {
  if (k < 0 || k > 61) throw std::out_of_range("tau_upper_bound_check: k outside [0, 61]");
  if (n > (SeqIndex{1} << k)) throw std::domain_error("tau_upper_bound_check: n/2^k outside [0, 1]");
  const Dyadic x(static_cast<std::int64_t>(n), k);
  const Dyadic bound = (x + Dyadic(1, 0)).scaled(-1) - Dyadic(1, k + 1);
  return takagi_dyadic(x) <= bound;
}

}  // namespace deficit
