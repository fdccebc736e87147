#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace deficit {

/// Sequence index. Every public entry point enforces `n <= kMaxIndex`.
using SeqIndex = std::uint64_t;
/// Sequence term or per-integer digit deficit.
using SeqValue = std::int64_t;

using int128 = __int128;

inline constexpr SeqIndex kMaxIndex = SeqIndex{1} << 60;

// floor(log2(n)) from the bit length; n must be nonzero.
constexpr int floor_log2(std::uint64_t n) {
  if (n == 0) throw std::domain_error("floor_log2(0) is undefined");
  return static_cast<int>(std::bit_width(n)) - 1;
}

constexpr std::uint64_t pow2(int e) {
  if (e < 0 || e > 63) throw std::overflow_error("pow2: exponent out of range");
  return std::uint64_t{1} << e;
}

constexpr int128 pow2_wide(int e) {
  if (e < 0 || e > 125) throw std::overflow_error("pow2_wide: exponent out of range");
  return int128{1} << e;
}

inline void check_index(SeqIndex n, const char* what = "index") {
  if (n > kMaxIndex)
    throw std::out_of_range(std::string(what) + " exceeds 2^60");
}

// Narrows a wide intermediate back to an index, enforcing the cap.
inline SeqIndex to_index(int128 v, const char* what = "index") {
  if (v < 0 || v > static_cast<int128>(kMaxIndex))
    throw std::out_of_range(std::string(what) + " outside [0, 2^60]");
  return static_cast<SeqIndex>(v);
}

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // unsigned magnitude handles INT128_MIN
  auto mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (mag != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace deficit
