#pragma once

// Declarative catalog of the identities, bounds and implications relating
// A268289 to the sets S_n and to the Takagi function, with an exhaustive
// sweep driver that evaluates both sides exactly.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "deficit/bits.hpp"
#include "deficit/rational.hpp"
#include "deficit/sequence.hpp"
#include "deficit/takagi.hpp"

namespace deficit {

/// Sweep bounds. `kmax` drives the (n, k) families with 0 <= n <= 2^k,
/// `kmax_iterated` and `mmax` the families iterated m times, `nmax` the
/// single-index statements, `exp_max` the dyadic arguments of the tau
/// scaling laws.
struct SweepLimits {
  int kmax = 12;
  int kmax_iterated = 8;
  int mmax = 6;
  SeqIndex nmax = SeqIndex{1} << 16;
  int exp_max = 10;

  static SweepLimits full() { return {}; }
  static SweepLimits ci() { return {8, 6, 4, SeqIndex{1} << 10, 8}; }

  // DEFICIT_TAKAGI_PROFILE = ci | full; unset means full.
  static SweepLimits from_env() {
    const char* p = std::getenv("DEFICIT_TAKAGI_PROFILE");
    if (p == nullptr || std::string_view(p).empty() || std::string_view(p) == "full") return full();
    if (std::string_view(p) == "ci") return ci();
    throw std::invalid_argument("DEFICIT_TAKAGI_PROFILE must be 'ci' or 'full'");
  }
};

enum class Family {
  Index,        // n in [index_min, nmax]
  LeadingBits,  // k in [1, kmax], n in [1, 2^k - 1]
  NK,           // k in [0, kmax], n in [0, 2^k]
  NKM,          // k in [0, kmax_iterated], m in [0, mmax], n in [0, 2^k]
  DyadicScale,  // xi = n/2^k with k in [0, exp_max], n in [0, 2^k]; m in [0, mmax]
};

enum class Relation {
  Equal,        // all sides equal
  Chain,        // sides nondecreasing
  StrictChain,  // sides strictly increasing
};

struct Params {
  SeqIndex n = 0;
  int k = 0;
  int m = 0;
};

struct CaseEval {
  bool applicable = true;
  std::vector<Rational> sides;
  // Overrides the relation check when the verdict comes from elsewhere.
  std::optional<bool> verdict;
};

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  Family family = Family::NK;
  SeqIndex index_min = 0;  // Family::Index only
  Relation relation = Relation::Equal;
  std::function<CaseEval(const Params&)> evaluate;
  // Negative control: equalities get +1 on the last side, order relations are negated.
  bool corrupted = false;
};

struct Counterexample {
  Params params;
  std::vector<std::string> sides;
  bool boundary = false;  // n == 0 or n == 2^k in an (n, k) family
};

struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> ranges;
  std::uint64_t cases = 0;
  bool pass = false;
  std::vector<Counterexample> counterexamples;
  bool vacuous = false;  // constraint set was empty; never counts as a pass
};

inline std::vector<std::string> param_names(Family f) {
  switch (f) {
    case Family::Index: return {"n"};
    case Family::LeadingBits:
    case Family::NK: return {"k", "n"};
    case Family::NKM:
    case Family::DyadicScale: return {"k", "m", "n"};
  }
  return {};
}

namespace detail {

inline Rational A(int128 index) { return Rational(compute_via_recurrence(to_index(index))); }
inline Rational w(int128 v) { return Rational::from_wide(v); }
inline int128 p2(int e) { return pow2_wide(e); }

// (4^m - 1)/3, asserting divisibility.
inline int128 third_of_mersenne4(int m) {
  const int128 v = p2(2 * m) - 1;
  if (v % 3 != 0) throw std::logic_error("(4^m - 1) is not divisible by 3");
  return v / 3;
}

inline Rational xi_of(const Params& p) { return Rational(BigInt(p.n), BigInt(1) << p.k); }
inline Dyadic dyadic_xi(const Params& p) { return Dyadic(static_cast<std::int64_t>(p.n), p.k); }
inline Rational tau_xi(const Params& p) { return takagi_dyadic(dyadic_xi(p)).to_rational(); }

inline Rational frac(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }

inline CaseEval eq(Rational lhs, Rational rhs) { return {true, {std::move(lhs), std::move(rhs)}, {}}; }

inline IdentityDescriptor make(std::string id, std::string statement, Family family, Relation rel,
                               std::function<CaseEval(const Params&)> fn, SeqIndex index_min = 0) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.statement = std::move(statement);
  d.family = family;
  d.relation = rel;
  d.evaluate = std::move(fn);
  d.index_min = index_min;
  return d;
}

// Affine increment shared by the leading-bit recurrences for A and |S|.
inline int128 leading_bit_increment(SeqIndex n, int k) {
  const int j = floor_log2(n);
  return static_cast<int128>(n + 1) * (j - k + 2) + p2(k) - p2(j + 1);
}

}  // namespace detail

/// The full catalog, in a fixed order.
inline const std::vector<IdentityDescriptor>& catalog() {
  using namespace detail;
  static const std::vector<IdentityDescriptor> entries = [] {
    std::vector<IdentityDescriptor> c;
    const auto NK = Family::NK;
    const auto Eq = Relation::Equal;

    c.push_back(make("lemma1", "A(n+2^k) = A(n) + (n+1)(floor(log2 n)-k+2) + 2^k - 2^(floor(log2 n)+1)",
                     Family::LeadingBits, Eq, [](const Params& p) {
                       // closed-form route, independent of the recurrence under test
                       const SeqIndex hi = p.n + (SeqIndex{1} << p.k);
                       return eq(Rational(compute_via_takagi(hi)),
                                 Rational(compute_via_takagi(p.n)) + w(leading_bit_increment(p.n, p.k)));
                     }));
    c.push_back(make("lemma3", "|S(n+2^k)| = |S(n)| + (n+1)(floor(log2 n)-k+2) + 2^k - 2^(floor(log2 n)+1)",
                     Family::LeadingBits, Eq, [](const Params& p) {
                       const SeqIndex hi = p.n + (SeqIndex{1} << p.k);
                       return eq(Rational(cardinality_S(hi)),
                                 Rational(cardinality_S(p.n)) + w(leading_bit_increment(p.n, p.k)));
                     }));
    c.push_back(make("digit0", "n < 3*2^(k-1) => A(n+2^(k-1)) = A(n) + 2(n+1) - 2^(k+1), k = floor(log2 n)",
                     Family::Index, Eq,
                     [](const Params& p) {
                       const int k = floor_log2(p.n);
                       CaseEval e;
                       e.applicable = 2 * static_cast<int128>(p.n) < 3 * p2(k);
                       if (!e.applicable) return e;
                       e.sides = {A(p.n + p2(k - 1)), A(p.n) + w(2 * static_cast<int128>(p.n + 1) - p2(k + 1))};
                       return e;
                     },
                     2));
    c.push_back(make("majorlink2", "tau(n/2^k) = 1 + n/2^k - (1 + A(n+2^k-1))/2^k", NK, Eq, [](const Params& p) {
      const Rational xi = xi_of(p);
      return eq(tau_xi(p), Rational(1) + xi - (Rational(1) + A(p.n + p2(p.k) - 1)).scaled(-p.k));
    }));
    c.push_back(make("initial_identity",
                     "A(n+2^(m+1)) = 2n - 2^m tau(xi) + 1, m = floor(log2(n+1)), xi = (n+1)/2^m - 1",
                     Family::Index, Eq, [](const Params& p) {
                       const int m = floor_log2(p.n + 1);
                       const Dyadic xi(static_cast<std::int64_t>(p.n + 1 - (SeqIndex{1} << m)), m);
                       const Rational t = takagi_dyadic(xi).to_rational();
                       return eq(A(p.n + p2(m + 1)), w(2 * static_cast<int128>(p.n) + 1) - t.scaled(m));
                     }));
    c.push_back(make("majorlink", "tau(n/2^k) = 2 + 2n/2^k - (1 + A(2^(k+1)+2^k+n-1))/2^k", NK, Eq,
                     [](const Params& p) {
                       const Rational xi = xi_of(p);
                       return eq(tau_xi(p), Rational(2) + xi.scaled(1) -
                                                (Rational(1) + A(p2(p.k + 1) + p2(p.k) + p.n - 1)).scaled(-p.k));
                     }));
    c.push_back(make("oeis1", "A(2^(k+2)-n-1) = 2^(k+1) - 4n + A(2^(k+1)+2^k+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 2) - p.n - 1), w(p2(p.k + 1) - 4 * static_cast<int128>(p.n)) +
                                              A(p2(p.k + 1) + p2(p.k) + p.n - 1));
    }));
    c.push_back(make("oeis2", "A(2^(k+2)+2^(k+1)+n-1) = 2^(k+1) - n + A(2^(k+1)+2^k+n-1)", NK, Eq,
                     [](const Params& p) {
                       return eq(A(p2(p.k + 2) + p2(p.k + 1) + p.n - 1),
                                 w(p2(p.k + 1) - p.n) + A(p2(p.k + 1) + p2(p.k) + p.n - 1));
                     }));
    c.push_back(make("oeis4", "A(2^(k+1)-n-1) = 2^k - 2n + A(2^k+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 1) - p.n - 1), w(p2(p.k) - 2 * static_cast<int128>(p.n)) + A(p2(p.k) + p.n - 1));
    }));
    c.push_back(make("oeis5", "A(2^(k+1)+n-1) = 2^k - n + A(2^k+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 1) + p.n - 1), w(p2(p.k) - p.n) + A(p2(p.k) + p.n - 1));
    }));
    c.push_back(make("oeis6", "A(2^(k+1)+n-1) = n + A(2^(k+1)-n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 1) + p.n - 1), w(p.n) + A(p2(p.k + 1) - p.n - 1));
    }));
    c.push_back(make("oeis7", "A(2^(k+1)+2^k+n-1) = 2n + A(2^(k+1)+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 1) + p2(p.k) + p.n - 1), w(2 * static_cast<int128>(p.n)) + A(p2(p.k + 1) + p.n - 1));
    }));
    c.push_back(make("oeis3", "A(2^(k+1)+2^k+n-1) = 3n + A(2^(k+1)-n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 1) + p2(p.k) + p.n - 1), w(3 * static_cast<int128>(p.n)) + A(p2(p.k + 1) - p.n - 1));
    }));
    c.push_back(make("oeis8", "A(2^(k+2)+2^k-n-1) = 2^k + n + A(2^(k+1)+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 2) + p2(p.k) - p.n - 1), w(p2(p.k) + p.n) + A(p2(p.k + 1) + p.n - 1));
    }));
    c.push_back(make("oeis9", "A(2^(k+3)+2^k+n-1) = 2^(k+2) + A(2^(k+1)+n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 3) + p2(p.k) + p.n - 1), w(p2(p.k + 2)) + A(p2(p.k + 1) + p.n - 1));
    }));
    c.push_back(make("oeis11", "A(2^(k+3)-2^k-n-1) = 3*2^k + A(2^(k+1)-n-1)", NK, Eq, [](const Params& p) {
      return eq(A(p2(p.k + 3) - p2(p.k) - p.n - 1), w(3 * p2(p.k)) + A(p2(p.k + 1) - p.n - 1));
    }));
    c.push_back(make("oeis10sum", "A(2^(k+2m+1) + 2^k(4^m-1)/3 + n-1) = 2^(k+2)(4^m-1)/3 + A(2^(k+1)+n-1)",
                     Family::NKM, Eq, [](const Params& p) {
                       const int128 t = third_of_mersenne4(p.m);
                       return eq(A(p2(p.k + 2 * p.m + 1) + p2(p.k) * t + p.n - 1),
                                 w(p2(p.k + 2) * t) + A(p2(p.k + 1) + p.n - 1));
                     }));
    c.push_back(make("oeis12sum", "A(2^(k+2m+1) - 2^k(4^m-1)/3 - n-1) = 2^k(4^m-1) + A(2^(k+1)-n-1)",
                     Family::NKM, Eq, [](const Params& p) {
                       const int128 t = third_of_mersenne4(p.m);
                       return eq(A(p2(p.k + 2 * p.m + 1) - p2(p.k) * t - p.n - 1),
                                 w(p2(p.k) * (p2(2 * p.m) - 1)) + A(p2(p.k + 1) - p.n - 1));
                     }));
    c.push_back(make("oeis14sum", "A(2^(k+m)+n-1) = 2^k(2^m-1) - mn + A(2^k+n-1)", Family::NKM, Eq,
                     [](const Params& p) {
                       return eq(A(p2(p.k + p.m) + p.n - 1),
                                 w(p2(p.k) * (p2(p.m) - 1) - static_cast<int128>(p.m) * p.n) + A(p2(p.k) + p.n - 1));
                     }));
    c.push_back(make("oeis13sum", "A(2^(k+m+1)+2^(k+m)+n-1) = 2^(k+1)(2^m-1) - mn + A(2^(k+1)+2^k+n-1)",
                     Family::NKM, Eq, [](const Params& p) {
                       return eq(A(p2(p.k + p.m + 1) + p2(p.k + p.m) + p.n - 1),
                                 w(p2(p.k + 1) * (p2(p.m) - 1) - static_cast<int128>(p.m) * p.n) +
                                     A(p2(p.k + 1) + p2(p.k) + p.n - 1));
                     }));
    c.push_back(make("tau_scale_1",
                     "1 - 2 tau(1/6 + (3xi-1)/(6*4^m)) = (1 - 2 tau(xi/2))/4^m = (1 - xi - tau(xi))/4^m",
                     Family::DyadicScale, Eq, [](const Params& p) {
                       const Rational xi = xi_of(p);
                       const Rational arg = frac(1, 6) + (Rational(3) * xi - 1) / Rational(6).scaled(2 * p.m);
                       CaseEval e;
                       e.sides = {Rational(1) - takagi_rational(arg).scaled(1),
                                  (Rational(1) - takagi_rational(xi.scaled(-1)).scaled(1)).scaled(-2 * p.m),
                                  (Rational(1) - xi - takagi_rational(xi)).scaled(-2 * p.m)};
                       return e;
                     }));
    c.push_back(make("tau_scale_2", "2/3 - tau(2/3 + (1/3 - xi)/4^m) = (2/3 - tau(1 - xi))/4^m",
                     Family::DyadicScale, Eq, [](const Params& p) {
                       const Rational xi = xi_of(p);
                       const Rational arg = frac(2, 3) + (frac(1, 3) - xi).scaled(-2 * p.m);
                       return eq(frac(2, 3) - takagi_rational(arg),
                                 (frac(2, 3) - takagi_rational(Rational(1) - xi)).scaled(-2 * p.m));
                     }));
    c.push_back(make("encadrement", "n/2 <= A(n) <= n", Family::Index, Relation::Chain, [](const Params& p) {
      CaseEval e;
      e.sides = {Rational(BigInt(p.n), 2), A(p.n), w(p.n)};
      return e;
    }));
    c.push_back(make("tau_major", "tau(n/2^k) <= (n/2^k + 1)/2 - 1/2^(k+1)", NK, Relation::Chain,
                     [](const Params& p) {
                       CaseEval e;
                       e.sides = {tau_xi(p), (xi_of(p) + 1).scaled(-1) - Rational(1).scaled(-p.k - 1)};
                       e.verdict = tau_upper_bound_check(p.n, p.k);
                       return e;
                     }));
    c.push_back(make("minor", "n >= 3*2^(k-1) => A(n) >= 1 + 3(n - 2^k)/2, k = floor(log2 n)", Family::Index,
                     Relation::Chain,
                     [](const Params& p) {
                       const int k = floor_log2(p.n);
                       CaseEval e;
                       e.applicable = 2 * static_cast<int128>(p.n) >= 3 * p2(k);
                       if (!e.applicable) return e;
                       e.sides = {Rational(1) + w(3 * (static_cast<int128>(p.n) - p2(k))).scaled(-1), A(p.n)};
                       return e;
                     },
                     1));
    c.push_back(make("lemma_half", "A(n) = n/2 => n < 3*2^(k-1) - 1, k = floor(log2 n)", Family::Index,
                     Relation::StrictChain,
                     [](const Params& p) {
                       const int k = floor_log2(p.n);
                       CaseEval e;
                       e.applicable = 2 * compute_via_recurrence(p.n) == static_cast<SeqValue>(p.n);
                       if (!e.applicable) return e;
                       e.sides = {w(p.n), w(3 * p2(k)).scaled(-1) - 1};
                       return e;
                     },
                     1));
    return c;
  }();
  return entries;
}

inline const IdentityDescriptor* find_identity(std::string_view id) {
  for (const auto& d : catalog())
    if (d.id == id) return &d;
  return nullptr;
}

inline IdentityDescriptor corrupted(IdentityDescriptor d) {
  d.corrupted = true;
  return d;
}

namespace detail {

inline bool relation_holds(Relation rel, const std::vector<Rational>& sides) {
  for (std::size_t i = 1; i < sides.size(); ++i) {
    const auto& a = sides[i - 1];
    const auto& b = sides[i];
    switch (rel) {
      case Relation::Equal:
        if (a != b) return false;
        break;
      case Relation::Chain:
        if (b < a) return false;
        break;
      case Relation::StrictChain:
        if (!(a < b)) return false;
        break;
    }
  }
  return true;
}

// Contiguous slice of a sweep: fixed (k, m), n in [n_lo, n_hi].
struct Chunk {
  int k = 0;
  int m = 0;
  SeqIndex n_lo = 0;
  SeqIndex n_hi = 0;
};

struct ChunkResult {
  std::uint64_t cases = 0;
  std::vector<Counterexample> counterexamples;
};

inline constexpr SeqIndex kChunkSpan = 4096;

inline void split(std::vector<Chunk>& out, int k, int m, SeqIndex lo, SeqIndex hi) {
  for (SeqIndex a = lo; a <= hi; a += kChunkSpan) {
    const SeqIndex b = std::min(hi, a + kChunkSpan - 1);
    out.push_back({k, m, a, b});
    if (b == hi) break;
  }
}

// Chunks in (k, m, n) lexicographic order, so concatenated results stay sorted.
inline std::vector<Chunk> plan(const IdentityDescriptor& d, const SweepLimits& lim) {
  std::vector<Chunk> out;
  switch (d.family) {
    case Family::Index:
      if (d.index_min <= lim.nmax) split(out, 0, 0, d.index_min, lim.nmax);
      break;
    case Family::LeadingBits:
      for (int k = 1; k <= lim.kmax; ++k) split(out, k, 0, 1, pow2(k) - 1);
      break;
    case Family::NK:
      for (int k = 0; k <= lim.kmax; ++k) split(out, k, 0, 0, pow2(k));
      break;
    case Family::NKM:
      for (int k = 0; k <= lim.kmax_iterated; ++k)
        for (int m = 0; m <= lim.mmax; ++m) split(out, k, m, 0, pow2(k));
      break;
    case Family::DyadicScale:
      for (int k = 0; k <= lim.exp_max; ++k)
        for (int m = 0; m <= lim.mmax; ++m) split(out, k, m, 0, pow2(k));
      break;
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> describe_ranges(const IdentityDescriptor& d,
                                                                        const SweepLimits& lim) {
  const auto span = [](auto lo, auto hi) { return std::to_string(lo) + ".." + std::to_string(hi); };
  switch (d.family) {
    case Family::Index: return {{"n", span(d.index_min, lim.nmax)}};
    case Family::LeadingBits: return {{"k", span(1, lim.kmax)}, {"n", "1..2^k-1"}};
    case Family::NK: return {{"k", span(0, lim.kmax)}, {"n", "0..2^k"}};
    case Family::NKM: return {{"k", span(0, lim.kmax_iterated)}, {"m", span(0, lim.mmax)}, {"n", "0..2^k"}};
    case Family::DyadicScale: return {{"k", span(0, lim.exp_max)}, {"m", span(0, lim.mmax)}, {"n", "0..2^k"}};
  }
  return {};
}

inline void check_limits(const IdentityDescriptor& d, const SweepLimits& lim) {
  // The largest index any entry touches is below 2^(k + 2m + 4); keep it under the cap.
  if (lim.kmax < 0 || lim.kmax_iterated < 0 || lim.mmax < 0 || lim.exp_max < 0)
    throw std::invalid_argument("sweep limits must be nonnegative");
  if (lim.kmax > 40 || lim.kmax_iterated + 2 * lim.mmax > 56 || lim.exp_max > 40)
    throw std::out_of_range("sweep limits would push indices past 2^60");
  if (d.family == Family::Index) check_index(lim.nmax, "nmax");
}

inline ChunkResult run_chunk(const IdentityDescriptor& d, const Chunk& c) {
  ChunkResult out;
  for (SeqIndex n = c.n_lo;; ++n) {
    const Params p{n, c.k, c.m};
    CaseEval e = d.evaluate(p);
    if (e.applicable) {
      ++out.cases;
      bool ok = e.verdict.has_value() ? *e.verdict : relation_holds(d.relation, e.sides);
      if (d.corrupted) {
        if (d.relation == Relation::Equal) {
          e.sides.back() += Rational(1);
          ok = relation_holds(d.relation, e.sides);
        } else {
          ok = !ok;
        }
      }
      if (!ok) {
        Counterexample ce;
        ce.params = p;
        for (const auto& s : e.sides) ce.sides.push_back(s.str());
        const bool nk = d.family == Family::NK || d.family == Family::NKM || d.family == Family::DyadicScale;
        ce.boundary = nk && (n == 0 || n == pow2(c.k));
        out.counterexamples.push_back(std::move(ce));
      }
    }
    if (n == c.n_hi) break;
  }
  return out;
}

}  // namespace detail

/// Exhaustive sweep of one descriptor. Chunks are evaluated on up to
/// `threads` workers (0 = hardware concurrency) and merged in parameter order.
inline IdentityReport verify(const IdentityDescriptor& d, const SweepLimits& lim, unsigned threads = 0) {
  detail::check_limits(d, lim);
  const auto chunks = detail::plan(d, lim);
  std::vector<detail::ChunkResult> results(chunks.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, chunks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();) results[i] = detail::run_chunk(d, chunks[i]);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();

  IdentityReport r;
  r.id = d.id;
  r.ranges = detail::describe_ranges(d, lim);
  for (auto& c : results) {
    r.cases += c.cases;
    for (auto& ce : c.counterexamples) r.counterexamples.push_back(std::move(ce));
  }
  r.pass = r.counterexamples.empty();
  r.vacuous = r.cases == 0;
  return r;
}

inline std::vector<IdentityReport> verify_all(const SweepLimits& lim, unsigned threads = 0) {
  std::vector<IdentityReport> out;
  for (const auto& d : catalog()) out.push_back(verify(d, lim, threads));
  return out;
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass && !r.vacuous; });
}

}  // namespace deficit
