#pragma once

// Command-line front end. Exit codes: 0 success, 1 verified mismatch or
// counterexample, 2 usage error.

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deficit/identities.hpp"
#include "deficit/report_json.hpp"
#include "deficit/sequence.hpp"
#include "deficit/special.hpp"
#include "deficit/takagi.hpp"

namespace deficit::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr SeqIndex kLinearGuard = SeqIndex{1} << 26;

inline const std::array<std::string, 5> kMethods = {"naive", "sets", "recurrence", "lemma2", "takagi"};

inline SeqValue evaluate(const std::string& method, SeqIndex n) {
  if (method == "naive") return cumulative_naive(n);
  if (method == "sets") return cardinality_S(n);
  if (method == "recurrence") return compute_via_recurrence(n);
  if (method == "lemma2") return compute_via_lemma2(n);
  if (method == "takagi") return compute_via_takagi(n);
  throw UsageError("unknown method: " + method);
}

inline bool is_linear(const std::string& method) {
  return method == "naive" || method == "sets" || method == "all";
}

inline void guard(const std::string& method, SeqIndex n, bool force) {
  check_index(n);
  if (is_linear(method) && n > kLinearGuard && !force)
    throw UsageError("method '" + method + "' is O(n); n > 2^26 requires --force");
}

struct Options {
  // compute / range
  SeqIndex n = 0;
  SeqIndex a = 0;
  SeqIndex b = 0;
  std::string method = "recurrence";
  std::string format;
  std::string out_path;
  bool force = false;
  // takagi
  std::uint64_t p = 0;
  std::optional<std::uint64_t> q;
  std::optional<int> exp;
  std::optional<int> enclose;
  // verify / special
  std::string target;
  std::optional<int> kmax;
  std::optional<int> mmax;
  std::optional<SeqIndex> limit;
  std::optional<std::size_t> count;
  unsigned threads = 0;
  bool negative_control = false;
};

inline int cmd_compute(const Options& o, std::ostream& out) {
  guard(o.method, o.n, o.force);
  if (o.method != "all") {
    out << evaluate(o.method, o.n) << "\n";
    return kOk;
  }
  std::vector<SeqValue> values;
  for (const auto& m : kMethods) values.push_back(evaluate(m, o.n));
  bool match = true;
  for (SeqValue v : values) {
    out << v << " ";
    match = match && v == values.front();
  }
  out << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kOk : kMismatch;
}

inline int cmd_range(const Options& o, std::ostream& stdout_stream) {
  if (o.a > o.b) throw UsageError("range: requires a <= b");
  guard(o.method, o.b, o.force);
  const std::string format = o.format.empty() ? "bfile" : o.format;
  if (format != "bfile" && format != "csv" && format != "json") throw UsageError("unknown format: " + format);

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::out | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file: " + o.out_path);
  }
  std::ostream& out = o.out_path.empty() ? stdout_stream : file;

  if (format == "csv") out << "n,a(n)\n";
  if (format == "json") out << "[";

  bool match = true;
  SeqValue running = 0;
  for (SeqIndex n = o.a;; ++n) {
    SeqValue v = 0;
    if (o.method == "naive") {
      // O(a) warm-up, then one digit count per term
      running = n == o.a ? cumulative_naive(n) : running + deficient_digit_sum(n);
      v = running;
    } else if (o.method == "all") {
      v = evaluate(kMethods.front(), n);
      for (const auto& m : kMethods) match = match && evaluate(m, n) == v;
    } else {
      v = evaluate(o.method, n);
    }
    if (format == "bfile") out << n << " " << v << "\n";
    if (format == "csv") out << n << "," << v << "\n";
    if (format == "json") out << (n == o.a ? "" : ",") << "\n  {\"n\": " << n << ", \"value\": " << v << "}";
    if (n == o.b) break;
  }
  if (format == "json") out << "\n]\n";
  out.flush();
  if (!out) throw UsageError("write failed");
  return match ? kOk : kMismatch;
}

inline int cmd_takagi(const Options& o, std::ostream& out) {
  if (o.q && o.exp) throw UsageError("takagi: give either a denominator or --exp, not both");
  Rational x;
  if (o.exp) {
    if (*o.exp < 0 || *o.exp > Dyadic::kMaxExp) throw UsageError("takagi: --exp outside [0, 62]");
    x = Rational(BigInt(o.p), BigInt(1) << *o.exp);
  } else {
    const std::uint64_t q = o.q.value_or(1);
    if (q == 0) throw UsageError("takagi: zero denominator");
    x = Rational(BigInt(o.p), BigInt(q));
  }
  if (x < Rational(0) || Rational(1) < x) throw UsageError("takagi: argument outside [0, 1]");

  if (o.enclose) {
    if (*o.enclose < 1) throw UsageError("takagi: --enclose needs a positive term count");
    out << takagi_enclosure(x, *o.enclose).str() << "\n";
    return kOk;
  }
  if (o.exp) {
    const Dyadic d(static_cast<std::int64_t>(o.p), *o.exp);
    out << takagi_dyadic(d).str() << "\n";
  } else {
    out << takagi_rational(x).str() << "\n";
  }
  return kOk;
}

inline SweepLimits limits_for(const Options& o) {
  SweepLimits lim = SweepLimits::from_env();
  if (o.kmax) {
    lim.kmax = *o.kmax;
    lim.kmax_iterated = std::min(lim.kmax_iterated, *o.kmax);
    lim.exp_max = std::min(lim.exp_max, *o.kmax);
  }
  if (o.mmax) lim.mmax = *o.mmax;
  if (o.limit) lim.nmax = *o.limit;
  return lim;
}

inline void print_text(const IdentityReport& r, std::ostream& out) {
  if (r.vacuous) {
    out << r.id << " EMPTY cases=0\n";
    return;
  }
  out << r.id << (r.pass ? " PASS" : " FAIL") << " cases=" << r.cases;
  if (!r.pass) {
    const auto& ce = r.counterexamples.front();
    out << " counterexamples=" << r.counterexamples.size() << " first=(";
    for (std::size_t i = 0; i < r.ranges.size(); ++i) {
      const auto& name = r.ranges[i].first;
      out << (i ? "," : "") << name << "=";
      if (name == "n") out << ce.params.n;
      if (name == "k") out << ce.params.k;
      if (name == "m") out << ce.params.m;
    }
    out << ")";
    for (std::size_t i = 0; i < ce.sides.size(); ++i) out << (i ? " | " : " ") << ce.sides[i];
    if (ce.boundary) out << " [boundary]";
  }
  out << "\n";
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format != "text" && format != "json") throw UsageError("verify: --format must be text or json");
  const SweepLimits lim = limits_for(o);

  std::vector<IdentityDescriptor> selected;
  if (o.target == "all") {
    selected = catalog();
  } else {
    const auto* d = find_identity(o.target);
    if (d == nullptr) throw UsageError("unknown identity: " + o.target);
    selected.push_back(*d);
  }

  std::vector<IdentityReport> reports;
  for (auto& d : selected) {
    if (o.negative_control) d = corrupted(std::move(d));
    reports.push_back(verify(d, lim, o.threads));
  }

  if (format == "json") {
    if (o.target == "all") {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    } else {
      out << to_json(reports.front()).dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) print_text(r, out);
  }
  return all_pass(reports) ? kOk : kMismatch;
}

inline int cmd_special(const Options& o, std::ostream& out) {
  const auto join = [&out](const auto& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    out << "\n";
  };
  if (o.target == "a026644") {
    if (o.limit && !o.count) {
      if (*o.limit > (SeqIndex{1} << 24)) throw UsageError("special a026644: --limit exceeds 2^24");
      join(half_value_indices(*o.limit));
    } else {
      join(a026644_recurrence(o.count.value_or(10)));
    }
    return kOk;
  }
  if (o.target == "a000975") {
    join(lichtenberg(o.count.value_or(10)));
    return kOk;
  }
  if (o.target == "power4") {
    const int mmax = o.mmax.value_or(6);
    if (mmax < 0 || mmax > 29) throw UsageError("special power4: --mmax outside [0, 29]");
    bool ok = true;
    const auto points = power4_fixed_points(mmax);
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << (i ? " " : "") << "(" << points[i].index << "," << points[i].value << ")";
      ok = ok && points[i].holds;
    }
    out << "\n";
    return ok ? kOk : kMismatch;
  }
  if (o.target == "minima") {
    const int kmax = o.kmax.value_or(10);
    if (kmax < 1 || kmax > 22) throw UsageError("special minima: --kmax outside [1, 22]");
    for (int k = 1; k <= kmax; ++k) {
      const auto r = interval_minimum(k);
      out << k << " " << r.argmin << " " << r.min << "\n";
    }
    return kOk;
  }
  throw UsageError("unknown special sequence: " + o.target);
}

/// Parses and dispatches. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cumulated deficient binary digit sum (A268289) and the Takagi function, in exact arithmetic",
               "deficit-takagi"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Compute A(n)");
  compute->add_option("n", o.n, "Index, 0 <= n <= 2^60")->required();
  compute->add_option("--method", o.method, "naive|sets|recurrence|lemma2|takagi|all")
      ->check(CLI::IsMember({"naive", "sets", "recurrence", "lemma2", "takagi", "all"}));
  compute->add_flag("--force", o.force, "Allow O(n) methods beyond 2^26");

  auto* range = app.add_subcommand("range", "Emit A(a..b)");
  range->add_option("a", o.a)->required();
  range->add_option("b", o.b)->required();
  range->add_option("--format", o.format, "bfile|csv|json");
  range->add_option("--method", o.method, "naive|sets|recurrence|lemma2|takagi|all")
      ->check(CLI::IsMember({"naive", "sets", "recurrence", "lemma2", "takagi", "all"}));
  range->add_option("--out", o.out_path, "Write to PATH instead of stdout");
  range->add_flag("--force", o.force);

  auto* tak = app.add_subcommand("takagi", "Exact tau(p/q) or tau(p/2^e)");
  tak->add_option("p", o.p)->required();
  tak->add_option("q", o.q);
  tak->add_option("--exp", o.exp, "Dyadic exponent e, argument p/2^e");
  tak->add_option("--enclose", o.enclose, "Print the N-term enclosure instead");

  auto* ver = app.add_subcommand("verify", "Sweep catalog identities");
  ver->add_option("id", o.target, "Catalog id or 'all'")->required();
  ver->add_option("--kmax", o.kmax);
  ver->add_option("--mmax", o.mmax);
  ver->add_option("--limit", o.limit, "Upper bound for single-index statements");
  ver->add_option("--format", o.format, "text|json");
  ver->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
  ver->add_flag("--negative-control", o.negative_control, "Corrupt the selected descriptors");

  auto* special = app.add_subcommand("special", "a026644|a000975|power4|minima");
  special->add_option("which", o.target)->required();
  special->add_option("--count", o.count);
  special->add_option("--limit", o.limit);
  special->add_option("--mmax", o.mmax);
  special->add_option("--kmax", o.kmax);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (range->parsed()) return cmd_range(o, out);
    if (tak->parsed()) return cmd_takagi(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (special->parsed()) return cmd_special(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace deficit::cli
