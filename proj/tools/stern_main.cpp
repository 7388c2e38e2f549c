// Command-line front end: rows, top values, expansions, continuants,
// kappa shapes, verification suites, and a row benchmark.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
// 3 resource cap exceeded.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diatomic/stern.hpp"

namespace {

using diatomic::BigInt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::size_t entry_cap_from_env() {
  const char* raw = std::getenv("STERN_MEM_CAP");
  if (raw == nullptr || *raw == '\0') return diatomic::kDefaultEntryCap;
  std::string text(raw);
  std::size_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("STERN_MEM_CAP must be a decimal integer");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

std::string dec(const BigInt& v) { return diatomic::to_decimal(v); }

json string_array(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const BigInt& v : values) arr.push_back(dec(v));
  return arr;
}

// ---------------------------------------------------------------------------
// row

struct RowOptions {
  std::int64_t r = 0;
  std::string format = "plain";
  bool distinct_only = false;
  bool stats = false;
  bool header = false;
};

int cmd_row(const RowOptions& opt, std::size_t cap) {
  if (opt.r < 0) throw std::invalid_argument("row: r must be >= 0");
  const auto row = diatomic::stern_row(static_cast<std::uint32_t>(opt.r), cap);
  const auto& words = row.words();
  const std::uint64_t base = std::uint64_t{1} << row.r();

  std::vector<std::uint64_t> values;
  if (opt.distinct_only) {
    std::set<std::uint64_t> distinct(words.begin(), words.end());
    values.assign(distinct.begin(), distinct.end());
  } else {
    values = words;
  }

  std::uint64_t max_value = 0;
  std::set<std::uint64_t> distinct;
  std::vector<std::uint64_t> argmax;
  if (opt.stats) {
    for (std::uint64_t w : words) {
      if (w > max_value) max_value = w;
      distinct.insert(w);
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k] == max_value) argmax.push_back(base + k);
    }
  }

  if (opt.format == "json") {
    json out;
    out["r"] = std::to_string(row.r());
    json arr = json::array();
    for (std::uint64_t v : values) arr.push_back(std::to_string(v));
    out["values"] = std::move(arr);
    if (opt.stats) {
      json st;
      st["max"] = std::to_string(max_value);
      st["distinct"] = std::to_string(distinct.size());
      json am = json::array();
      for (std::uint64_t p : argmax) am.push_back(std::to_string(p));
      st["argmax"] = std::move(am);
      out["stats"] = std::move(st);
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  const char separator = opt.format == "csv" ? ',' : ' ';
  if (opt.format == "csv" && opt.header && !opt.distinct_only) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0) std::cout << separator;
      std::cout << base + k;
    }
    std::cout << "\n";
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) std::cout << separator;
    std::cout << values[k];
  }
  std::cout << "\n";
  if (opt.stats && opt.format != "csv") {
    std::cout << "max=" << max_value << " distinct=" << distinct.size()
              << " argmax=";
    for (std::size_t k = 0; k < argmax.size(); ++k) {
      if (k > 0) std::cout << ',';
      std::cout << argmax[k];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// top

struct TopOptions {
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::string method = "both";
  bool positions = false;
};

int cmd_top(const TopOptions& opt, std::size_t cap) {
  if (opt.r < 0 || opt.m < 1) {
    throw std::invalid_argument("top: need r >= 0 and m >= 1");
  }
  std::vector<diatomic::RankedValue> brute;
  if (opt.method == "brute" || opt.method == "both") {
    brute = diatomic::brute_force_top(static_cast<std::uint32_t>(opt.r),
                                      static_cast<std::uint64_t>(opt.m), cap);
  }
  bool mismatch = false;
  const std::int64_t ranks =
      opt.method == "brute" ? static_cast<std::int64_t>(brute.size()) : opt.m;
  for (std::int64_t m = 1; m <= ranks; ++m) {
    json rec;
    rec["rank"] = std::to_string(m);
    if (opt.method == "closed" || opt.method == "both") {
      const auto closed = diatomic::closed_form_L(opt.r, m);
      rec["value"] = dec(closed.value);
      rec["b"] = std::to_string(closed.b);
      rec["i"] = std::to_string(closed.i);
      rec["j"] = std::to_string(closed.j);
    }
    if (opt.method == "brute" || opt.method == "both") {
      const bool have = m <= static_cast<std::int64_t>(brute.size());
      const diatomic::RankedValue* rv =
          have ? &brute[static_cast<std::size_t>(m - 1)] : nullptr;
      if (opt.method == "brute") {
        rec["value"] = dec(rv->value);
      } else {
        rec["brute"] = have ? dec(rv->value) : "absent";
        const bool match =
            have && dec(rv->value) == rec["value"].get<std::string>();
        rec["match"] = match;
        if (!match) mismatch = true;
      }
      if (opt.positions && have) {
        json pos = json::array();
        for (std::uint64_t p : rv->positions) pos.push_back(std::to_string(p));
        rec["positions"] = std::move(pos);
      }
    }
    std::cout << rec.dump() << "\n";
  }
  return mismatch ? kExitMismatch : kExitOk;
}

// ---------------------------------------------------------------------------
// expand

int cmd_expand(const std::string& n_text, bool as_json) {
  for (char ch : n_text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("expand: n must be a decimal integer");
    }
  }
  const BigInt n(n_text);
  const auto canonical = diatomic::canonical_expansion(n);
  const auto sibling = diatomic::sibling_expansion(canonical);
  const BigInt s = diatomic::stern(n);
  const BigInt bridge = diatomic::stern_continuant_bridge(n);
  if (as_json) {
    json out;
    out["n"] = dec(n);
    out["canonical"] = diatomic::to_string(canonical);
    out["sibling"] = diatomic::to_string(sibling);
    out["stern"] = dec(s);
    out["bridge"] = dec(bridge);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "canonical " << diatomic::to_string(canonical) << "\n"
              << "sibling " << diatomic::to_string(sibling) << "\n"
              << "stern " << dec(s) << "\n"
              << "bridge " << dec(bridge) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerdictSink {
  bool emit_json = true;
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> by_check;

  void add(const std::string& check, json params, json expected, json actual,
           bool pass) {
    ++total;
    auto& bucket = by_check[check];
    ++bucket.first;
    if (!pass) {
      ++failed;
      ++bucket.second;
    }
    if (emit_json) {
      json rec;
      rec["check"] = check;
      rec["params"] = std::move(params);
      rec["expected"] = std::move(expected);
      rec["actual"] = std::move(actual);
      rec["pass"] = pass;
      std::cout << rec.dump() << "\n";
    }
  }

  void summarize() const {
    if (emit_json) return;
    for (const auto& [check, counts] : by_check) {
      std::cout << check << ": " << counts.first << " checks, "
                << counts.second << " failed\n";
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << "\n";
  }
};

void verify_theorem(VerdictSink& sink, std::int64_t r_max, std::size_t cap) {
  for (std::int64_t r = 1; r <= r_max; ++r) {
    const std::int64_t ranks = diatomic::closed_form_rank_count(r);
    const auto brute = diatomic::brute_force_top(
        static_cast<std::uint32_t>(r), static_cast<std::uint64_t>(ranks), cap);
    std::vector<BigInt> expected;
    for (const auto& rv : brute) expected.push_back(rv.value);
    std::vector<BigInt> actual;
    for (std::int64_t m = 1; m <= ranks; ++m) {
      actual.push_back(diatomic::closed_form_L(r, m).value);
    }
    const json exp = string_array(expected);
    const json act = string_array(actual);
    sink.add("theorem", json{{"r", std::to_string(r)}}, exp, act, exp == act);
  }
}

void verify_bridge(VerdictSink& sink, std::int64_t r_max) {
  const std::uint64_t n_max = std::uint64_t{1} << std::min<std::int64_t>(
                                  r_max, 24);
  std::uint64_t matches = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (diatomic::stern_continuant_bridge(n) == diatomic::stern(n)) ++matches;
  }
  sink.add("bridge", json{{"n_max", std::to_string(n_max)}},
           std::to_string(n_max), std::to_string(matches), matches == n_max);
}

void verify_expansions(VerdictSink& sink, std::int64_t r_max) {
  const std::int64_t exponent = std::min<std::int64_t>(r_max, 16);
  const std::uint64_t n_max = std::uint64_t{1} << exponent;
  const std::uint32_t top = static_cast<std::uint32_t>(exponent) + 1;
  // Every expansion of n <= 2^t has exponents within {0..t+1}; enumerate
  // every nonempty exponent subset once and bucket by value.
  std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> buckets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (top + 1));
       ++mask) {
    std::vector<std::uint32_t> exps;
    for (std::uint32_t bit = 0; bit <= top; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) exps.push_back(bit);
    }
    std::int64_t value = 0;
    bool negative = exps.size() % 2 == 0;  // lowest term sign is (-1)^d
    for (std::uint32_t e : exps) {
      const auto term = static_cast<std::int64_t>(std::uint64_t{1} << e);
      value += negative ? -term : term;
      negative = !negative;
    }
    if (value >= 1 && static_cast<std::uint64_t>(value) <= n_max) {
      buckets[static_cast<std::uint64_t>(value)].push_back(std::move(exps));
    }
  }
  auto to_exponents = [](const diatomic::AltBinExpansion& e) {
    std::vector<std::uint32_t> exps;
    std::uint64_t k = e.l0;
    exps.push_back(static_cast<std::uint32_t>(k));
    for (std::uint64_t l : e.tail) {
      k += l;
      exps.push_back(static_cast<std::uint32_t>(k));
    }
    return exps;
  };
  std::uint64_t good = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto& found = buckets[n];
    const auto canonical = diatomic::canonical_expansion(n);
    const auto expected_a = to_exponents(canonical);
    const auto expected_b = to_exponents(diatomic::sibling_expansion(canonical));
    const bool ok =
        found.size() == 2 &&
        ((found[0] == expected_a && found[1] == expected_b) ||
         (found[0] == expected_b && found[1] == expected_a));
    if (ok) ++good;
  }
  sink.add("expansions", json{{"n_max", std::to_string(n_max)}},
           std::to_string(n_max), std::to_string(good), good == n_max);
}

void verify_identities(VerdictSink& sink, std::int64_t r_max) {
  const std::uint64_t p_max = static_cast<std::uint64_t>(
      std::min<std::int64_t>(r_max, 30));
  const std::uint64_t span = p_max + 1;
  const std::uint64_t triples = span * span * span;
  std::uint64_t good = 0;
  for (std::uint64_t p0 = 0; p0 <= p_max; ++p0) {
    for (std::uint64_t p1 = 0; p1 <= p_max; ++p1) {
      for (std::uint64_t p2 = 0; p2 <= p_max; ++p2) {
        if (diatomic::kappa_closed_forms(p0, p1, p2).verified) ++good;
      }
    }
  }
  sink.add("identities", json{{"p_max", std::to_string(p_max)}},
           std::to_string(triples), std::to_string(good), good == triples);
}

void verify_bounds(VerdictSink& sink, std::int64_t r_max) {
  for (std::int64_t r = 6; r <= std::min<std::int64_t>(r_max, 20); ++r) {
    const auto eb = diatomic::extremal_bounds(r);
    json expected = json::array(
        {"min=" + dec(eb.weight1_min_closed),
         "mark3_max=" + dec(eb.one_mark3_max_closed),
         "marks22_max=" + dec(eb.two_marks2_max_closed), "max_below_row=yes",
         std::string("comparison=") + (r == 7 ? "equal" : "strict")});
    json actual = json::array(
        {"min=" + dec(eb.weight1_min), "mark3_max=" + dec(eb.one_mark3_max),
         "marks22_max=" + dec(eb.two_marks2_max),
         std::string("max_below_row=") +
             (eb.weight1_max < eb.row_max ? "yes" : "no"),
         std::string("comparison=") +
             (!eb.comparison_holds ? "violated"
                                   : (eb.comparison_strict ? "strict"
                                                           : "equal"))});
    sink.add("bounds", json{{"r", std::to_string(r)}}, expected, actual,
             expected == actual);
  }
}

void verify_conjecture7(VerdictSink& sink, std::int64_t r_max) {
  for (std::int64_t m = 1; 4 * m - 2 <= r_max; ++m) {
    for (std::int64_t r = 4 * m - 2; r <= r_max; ++r) {
      const auto w = diatomic::check_conjecture7(r, m);
      sink.add("conjecture7",
               json{{"r", std::to_string(r)}, {"m", std::to_string(m)}},
               dec(w.prev + w.prev2), dec(w.current), w.holds);
    }
  }
}

void verify_conjecture9(VerdictSink& sink, std::int64_t r_max) {
  for (std::int64_t m = 2; 4 * m - 4 <= r_max; ++m) {
    for (std::int64_t r = 4 * m - 4; r <= r_max; ++r) {
      const auto w = diatomic::check_conjecture9(r, m);
      sink.add("conjecture9",
               json{{"r", std::to_string(r)}, {"m", std::to_string(m)}},
               dec(w.fib_gap), dec(w.higher - w.lower), w.holds);
    }
  }
}

int cmd_verify(const std::string& suite, std::int64_t r_max, bool emit_json,
               std::size_t cap) {
  VerdictSink sink;
  sink.emit_json = emit_json;
  const bool all = suite == "all";
  // r_max <= 0 means "per-suite default"
  if (all || suite == "theorem") {
    verify_theorem(sink, r_max > 0 ? r_max : 14, cap);
  }
  if (all || suite == "bridge") verify_bridge(sink, r_max > 0 ? r_max : 16);
  if (all || suite == "expansions") {
    verify_expansions(sink, r_max > 0 ? r_max : 12);
  }
  if (all || suite == "identities") {
    verify_identities(sink, r_max > 0 ? r_max : 30);
  }
  if (all || suite == "bounds") verify_bounds(sink, r_max > 0 ? r_max : 20);
  if (all || suite == "conjecture7") {
    verify_conjecture7(sink, r_max > 0 ? r_max : 40);
  }
  if (all || suite == "conjecture9") {
    verify_conjecture9(sink, r_max > 0 ? r_max : 40);
  }
  sink.summarize();
  return sink.failed == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench_row(std::int64_t r, std::size_t cap) {
  if (r < 0) throw std::invalid_argument("bench row: r must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const auto row = diatomic::stern_row(static_cast<std::uint32_t>(r), cap);
  const auto built = std::chrono::steady_clock::now();
  std::uint64_t max_value = 0;
  for (std::uint64_t w : row.words()) {
    if (w > max_value) max_value = w;
  }
  const auto scanned = std::chrono::steady_clock::now();
  using ms = std::chrono::duration<double, std::milli>;
  std::cout << "row " << r << ": " << row.size() << " entries, build "
            << ms(built - start).count() << " ms, scan "
            << ms(scanned - built).count() << " ms, max " << max_value << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stern diatomic array toolkit"};
  app.require_subcommand(1);

  RowOptions row_opt;
  auto* row_cmd = app.add_subcommand("row", "Print one row of the array");
  row_cmd->add_option("r", row_opt.r, "Row index")->required();
  row_cmd->add_option("--format", row_opt.format, "plain, csv, or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  row_cmd->add_flag("--distinct-only", row_opt.distinct_only,
                    "Distinct values, ascending");
  row_cmd->add_flag("--stats", row_opt.stats,
                    "Append max, distinct count, argmax positions");
  row_cmd->add_flag("--header", row_opt.header,
                    "CSV only: prepend a line of absolute positions");

  TopOptions top_opt;
  auto* top_cmd =
      app.add_subcommand("top", "Largest distinct row values by rank");
  top_cmd->add_option("r", top_opt.r, "Row index")->required();
  top_cmd->add_option("m", top_opt.m, "Number of ranks")->required();
  top_cmd->add_option("--method", top_opt.method, "closed, brute, or both")
      ->check(CLI::IsMember({"closed", "brute", "both"}));
  top_cmd->add_flag("--positions", top_opt.positions,
                    "Include attaining positions (brute methods)");

  std::string expand_n;
  bool expand_json = false;
  auto* expand_cmd =
      app.add_subcommand("expand", "Both alternating binary expansions of n");
  expand_cmd->add_option("n", expand_n, "Positive integer")->required();
  expand_cmd->add_flag("--json", expand_json, "Emit one JSON object");

  std::string continuant_text;
  auto* continuant_cmd =
      app.add_subcommand("continuant", "Continuant of a composition");
  continuant_cmd->add_option("composition", continuant_text, "e.g. 1,2,1")
      ->required();

  std::string kappa_text;
  auto* kappa_cmd =
      app.add_subcommand("kappa", "Continuant of a padded shape");
  kappa_cmd->add_option("shape", kappa_text, "pads|marks, e.g. 1,6|2")
      ->required();

  std::string suite = "all";
  std::int64_t r_max = 0;
  std::string emit = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->check(CLI::IsMember({"theorem", "bridge", "expansions", "identities",
                             "bounds", "conjecture7", "conjecture9", "all"}));
  verify_cmd->add_option("--r-max", r_max, "Override the sweep limit");
  verify_cmd->add_option("--emit", emit, "json (verdict lines) or summary")
      ->check(CLI::IsMember({"json", "summary"}));

  std::int64_t bench_r = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Timing measurements");
  bench_cmd->require_subcommand(1);
  auto* bench_row_cmd = bench_cmd->add_subcommand("row", "Time a row build");
  bench_row_cmd->add_option("r", bench_r, "Row index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::size_t cap = entry_cap_from_env();
    if (row_cmd->parsed()) return cmd_row(row_opt, cap);
    if (top_cmd->parsed()) return cmd_top(top_opt, cap);
    if (expand_cmd->parsed()) return cmd_expand(expand_n, expand_json);
    if (continuant_cmd->parsed()) {
      std::cout << dec(diatomic::continuant(
                       diatomic::Composition::parse(continuant_text)))
                << "\n";
      return kExitOk;
    }
    if (kappa_cmd->parsed()) {
      std::cout << dec(diatomic::kappa(diatomic::parse_kappa_shape(kappa_text)))
                << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(suite, r_max, emit == "json", cap);
    }
    if (bench_row_cmd->parsed()) return cmd_bench_row(bench_r, cap);
  } catch (const diatomic::resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
