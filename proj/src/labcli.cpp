#include "cliquelab/labcli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquelab/bitgraph.hpp"
#include "cliquelab/bounds.hpp"
#include "cliquelab/cliquesearch.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/sorters.hpp"

namespace cliquelab {

namespace {

using nlohmann::json;

// Exhaustive enumeration refuses instances past this many candidates.
constexpr std::uint64_t kEnumerationGuard = 10'000'000;

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kNoResult = 1;
constexpr int kError = 2;

void emit(const std::string& payload, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "a..b" or a single "a"; both ends inclusive.
std::pair<long, long> parse_range(const std::string& text) {
  auto fail = [&] {
    throw std::invalid_argument("range must look like \"4..12\" or \"6\", "
                                "got \"" + text + "\"");
  };
  auto parse_long = [&](const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      fail();
    }
    if (pos != s.size()) fail();
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = parse_long(text);
    return {v, v};
  }
  return {parse_long(text.substr(0, dots)),
          parse_long(text.substr(dots + 2))};
}

std::uint64_t guarded_candidate_count(long n, long q) {
  ExactInt c = binomial(n, q);
  if (c > static_cast<unsigned long>(kEnumerationGuard)) {
    throw std::domain_error(
        "refusing exhaustive enumeration: C(" + std::to_string(n) + ", " +
        std::to_string(q) + ") = " + to_decimal(c) + " exceeds the guard of " +
        std::to_string(kEnumerationGuard));
  }
  return c.get_ui();
}

json tally_json(const ComparisonTally& tally) {
  json t;
  t["candidates_enumerated"] = tally.candidates_enumerated;
  t["subnetwork_comparisons"] = tally.subnetwork_comparisons;
  t["word_ops"] = tally.words.ops();
  return t;
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
  long n = 0;
  std::vector<int> clique;
  int q = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  bool example = false;
  bool flat = false;
  std::string out_path;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  Network net = example_network();
  std::vector<int> members{2, 3, 4};
  if (opt.example) {
    if ((opt.n != 0 && opt.n != 6) || !opt.clique.empty() || opt.q != 0) {
      throw std::invalid_argument(
          "--example fixes the 6-node built-in network; it only allows "
          "--n 6 and no clique options");
    }
  } else {
    if (opt.n < 1) {
      throw std::invalid_argument("gen requires --n >= 1 (or --example)");
    }
    if (opt.clique.empty() == (opt.q == 0)) {
      throw std::invalid_argument(
          "give exactly one of --clique or --q (or use --example)");
    }
    if (!opt.clique.empty()) {
      members = opt.clique;
    } else {
      if (opt.q < 1 || opt.q > opt.n) {
        throw std::invalid_argument("--q must lie in [1, n]");
      }
      members.clear();
      for (int v = static_cast<int>(opt.n) - opt.q + 1;
           v <= static_cast<int>(opt.n); ++v) {
        members.push_back(v);
      }
    }
    PlantSpec spec(NodeSet(static_cast<int>(opt.n), members), opt.density,
                   opt.seed);
    net = plant_clique(spec);
  }

  if (opt.out_path.empty()) {
    // Without --out the network text itself is the output.
    out << network_text(net, opt.flat);
    return kOk;
  }
  write_network_file(opt.out_path, net, opt.flat);
  json echo;
  echo["command"] = "gen";
  echo["n"] = net.order();
  echo["members"] = members;
  echo["flat"] = opt.flat;
  echo["out"] = opt.out_path;
  if (opt.example) {
    echo["example"] = true;
  } else {
    echo["density"] = opt.density;
    echo["seed"] = opt.seed;
    echo["generator"] = SplitMix64::kName;
  }
  out << dump(echo);
  return kOk;
}

// ------------------------------------------------------------- search ----

struct SearchOptions {
  std::string in_path;
  int q = 0;
  bool first = false;
  bool strict = false;
  unsigned word_width = 64;
  unsigned workers = 1;
  std::string format = "json";
  std::string out_path;
};

int cmd_search(const SearchOptions& opt, std::ostream& out) {
  if (opt.format != "json") {
    throw std::invalid_argument("search emits JSON only; --format " +
                                opt.format + " is not supported here");
  }
  Network net = read_network_file(opt.in_path);
  if (opt.q < 1 || opt.q > net.order()) {
    throw std::invalid_argument("clique size q must satisfy 1 <= q <= n, "
                                "got q=" + std::to_string(opt.q) +
                                " at order " + std::to_string(net.order()));
  }
  guarded_candidate_count(net.order(), opt.q);

  ComparisonTally tally(opt.word_width);
  std::vector<NodeSet> found;
  bool hit = true;
  if (opt.first) {
    auto first_hit = search_first(net, opt.q, tally, opt.strict);
    hit = first_hit.has_value();
    if (first_hit) found.push_back(std::move(*first_hit));
  } else {
    found = search_all(net, opt.q, tally, opt.strict, opt.workers);
  }

  json j;
  j["order"] = net.order();
  j["q"] = opt.q;
  json hits = json::array();
  for (const NodeSet& s : found) hits.push_back(s.members());
  j["found"] = std::move(hits);
  j["tally"] = tally_json(tally);
  j["strict_mode"] = opt.strict;
  j["word_width"] = opt.word_width;
  emit(dump(j), opt.out_path, out);
  return hit ? kOk : kNoResult;
}

// ------------------------------------------------------------- bounds ----

struct BoundsOptions {
  std::string range = "2..16";
  bool census = false;
  std::string format = "json";
  std::string out_path;
};

int cmd_bounds(const BoundsOptions& opt, std::ostream& out) {
  auto [lo, hi] = parse_range(opt.range);
  std::vector<BoundRow> rows = bound_report(lo, hi, opt.census);
  std::string payload = opt.format == "csv"
                            ? bound_report_csv(rows, opt.census)
                            : bound_report_json(rows, opt.census);
  emit(payload, opt.out_path, out);
  return kOk;
}

// --------------------------------------------------------------- sort ----

struct SortOptions {
  std::string algorithm;
  std::string input;
  int all_perms = 0;
  unsigned radix_width = 0;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
};

struct SortInput {
  std::vector<Element> values;
  std::string kind;
  bool used_rng = false;
};

SortInput load_sort_input(const std::string& spec, std::uint64_t seed) {
  SortInput in;
  auto count_after = [&](std::size_t colon) -> std::size_t {
    std::string tail = spec.substr(colon + 1);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tail, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tail.size() || v < 1) {
      throw std::invalid_argument("input spec \"" + spec +
                                  "\" needs a positive count after ':'");
    }
    return static_cast<std::size_t>(v);
  };
  if (spec.rfind("descending:", 0) == 0) {
    in.values = descending_input(count_after(spec.find(':')));
    in.kind = "descending";
    return in;
  }
  if (spec.rfind("random:", 0) == 0) {
    std::size_t n = count_after(spec.find(':'));
    SplitMix64 rng(seed);
    in.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      in.values.push_back(static_cast<Element>(rng.next_below(65536)));
    }
    in.kind = "random";
    in.used_rng = true;
    return in;
  }
  if (spec == "perm256") {
    in.values.resize(256);
    for (int i = 0; i < 256; ++i) in.values[i] = i;
    SplitMix64 rng(seed);
    for (int i = 255; i >= 1; --i) {
      auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(in.values[i], in.values[j]);
    }
    in.kind = "perm256";
    in.used_rng = true;
    return in;
  }
  std::ifstream f(spec);
  if (!f) {
    throw std::runtime_error("cannot open input file: " + spec +
                             " (specs: descending:N, random:N, perm256, "
                             "or a file of integers)");
  }
  Element v;
  while (f >> v) in.values.push_back(v);
  if (!f.eof()) {
    throw std::invalid_argument("input file " + spec +
                                " contains non-integer tokens");
  }
  in.kind = "file";
  return in;
}

int cmd_sort(const SortOptions& opt, std::ostream& out) {
  if (opt.format != "json") {
    throw std::invalid_argument("sort emits JSON only; --format " +
                                opt.format + " is not supported here");
  }
  auto alg = algorithm_from_name(opt.algorithm);
  if (!alg) {
    throw std::invalid_argument(
        "unknown algorithm \"" + opt.algorithm +
        "\"; choose bubble-restart, bubble, merge, or radix");
  }
  if (opt.input.empty() == (opt.all_perms == 0)) {
    throw std::invalid_argument("give exactly one of --input or --all-perms");
  }

  json j;
  j["algorithm"] = algorithm_name(*alg);
  if (opt.all_perms > 0) {
    WorstCaseScan scan = worst_case_scan(*alg, static_cast<unsigned>(opt.all_perms));
    long n = opt.all_perms;
    j["input_kind"] = "all-perms";
    j["n"] = n;
    j["max_comparisons"] = scan.max_comparisons;
    j["witness"] = scan.witness;
    j["bound_lb"] = to_decimal(comparison_lower_bound(n));
    j["bound_est"] = comparison_bound_estimate(n);
    emit(dump(j), opt.out_path, out);
    return kOk;
  }

  SortInput in = load_sort_input(opt.input, opt.seed);
  if (in.values.empty()) {
    throw std::invalid_argument("sort input must contain at least one element");
  }
  SortResult r = run_sort(*alg, in.values, opt.radix_width);
  long n = static_cast<long>(in.values.size());
  j["input_kind"] = in.kind;
  j["n"] = n;
  json t;
  t["comparisons"] = r.tally.comparisons;
  t["swaps"] = r.tally.swaps;
  t["moves"] = r.tally.moves;
  t["radix_passes"] = r.tally.radix_passes;
  t["total_ops"] = r.tally.total_ops();
  j["tally"] = std::move(t);
  j["bound_lb"] = to_decimal(comparison_lower_bound(n));
  j["bound_est"] = comparison_bound_estimate(n);
  if (in.used_rng) {
    j["generator"] = SplitMix64::kName;
    j["seed"] = opt.seed;
  }
  emit(dump(j), opt.out_path, out);
  return kOk;
}

// ------------------------------------------------------------- report ----

struct ReportOptions {
  std::string range;
  std::string q_rule = "half";
  double density = 0.5;
  std::uint64_t seed = 1;
  bool strict = false;
  unsigned word_width = 64;
  unsigned workers = 1;
  std::string format = "json";
  std::string out_path;
};

int cmd_report(const ReportOptions& opt, std::ostream& out) {
  auto [lo, hi] = parse_range(opt.range);
  if (lo < 1) {
    throw std::invalid_argument("report range starts at n >= 1");
  }
  std::optional<int> fixed_q;
  if (opt.q_rule != "half") {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(opt.q_rule, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != opt.q_rule.size() || v < 1) {
      throw std::invalid_argument(
          "--q takes \"half\" or a positive integer, got \"" + opt.q_rule +
          "\"");
    }
    fixed_q = v;
  }

  struct RowPlan {
    long n;
    int q;
  };
  std::vector<RowPlan> plan;
  for (long n = lo; n <= hi; ++n) {
    int q = fixed_q ? *fixed_q
                    : static_cast<int>(std::max<long>(1, n / 2));
    if (q > n) continue;  // fixed q larger than this order: nothing to scan
    plan.push_back({n, q});
  }
  for (const RowPlan& row : plan) {
    guarded_candidate_count(row.n, row.q);  // refuse the sweep up front
  }

  json meta;
  meta["command"] = "report";
  meta["density"] = opt.density;
  meta["generator"] = SplitMix64::kName;
  meta["seed"] = opt.seed;
  meta["strict_mode"] = opt.strict;
  meta["word_width"] = opt.word_width;
  meta["workers"] = opt.workers;
  meta["q_rule"] = fixed_q ? json(*fixed_q) : json("half");

  json rows = json::array();
  std::string csv =
      "n,q,predicted,measured,match,word_ops,h,phi_num,phi_den\n";
  for (const RowPlan& rp : plan) {
    const int n = static_cast<int>(rp.n);
    std::vector<int> members;
    for (int v = n - rp.q + 1; v <= n; ++v) members.push_back(v);
    PlantSpec spec(NodeSet(n, members), opt.density, opt.seed);
    Network net = plant_clique(spec);
    ComparisonTally tally(opt.word_width);
    search_all(net, rp.q, tally, opt.strict, opt.workers);

    ExactInt predicted = binomial(rp.n, rp.q);
    bool match = predicted == ExactInt(static_cast<unsigned long>(
                                  tally.subnetwork_comparisons));
    json row;
    row["n"] = rp.n;
    row["q"] = rp.q;
    row["predicted"] = to_decimal(predicted);
    row["measured"] = tally.subnetwork_comparisons;
    row["match"] = match ? "pass" : "fail";
    row["word_ops"] = tally.words.ops();
    std::string h_text, phi_num_text, phi_den_text;
    if (rp.n % 2 == 0) {
      h_text = to_decimal(central_binomial(rp.n));
      ExactRatio envelope = central_binomial_floor(rp.n);
      phi_num_text = to_decimal(envelope.get_num());
      phi_den_text = to_decimal(envelope.get_den());
      row["h"] = h_text;
      row["phi_num"] = phi_num_text;
      row["phi_den"] = phi_den_text;
    } else {
      row["h"] = nullptr;
      row["phi_num"] = nullptr;
      row["phi_den"] = nullptr;
    }
    rows.push_back(std::move(row));

    csv += std::to_string(rp.n) + "," + std::to_string(rp.q) + "," +
           to_decimal(predicted) + "," +
           std::to_string(tally.subnetwork_comparisons) + "," +
           (match ? "pass" : "fail") + "," +
           std::to_string(tally.words.ops()) + "," + h_text + "," +
           phi_num_text + "," + phi_den_text + "\n";
  }

  std::string payload;
  if (opt.format == "csv") {
    payload = csv;
  } else {
    json j;
    j["metadata"] = std::move(meta);
    j["rows"] = std::move(rows);
    payload = dump(j);
  }
  emit(payload, opt.out_path, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"bit-string clique search and instrumented sorting toolkit",
               "cliquelab"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "generate a network with a planted clique");
  gen_cmd->add_option("--n", gen.n, "network order");
  gen_cmd->add_option("--clique", gen.clique, "planted members, e.g. 5,6,7")
      ->delimiter(',');
  gen_cmd->add_option("--q", gen.q, "plant on the last q nodes");
  gen_cmd->add_option("--p", gen.density, "background edge density")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_flag("--example", gen.example, "emit the built-in 6-node network");
  gen_cmd->add_flag("--flat", gen.flat, "write the single-line flat form");
  gen_cmd->add_option("--out", gen.out_path, "write the network here");

  SearchOptions search;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "exhaustive clique search over a network file");
  search_cmd->add_option("--in", search.in_path, "network file")->required();
  search_cmd->add_option("--q", search.q, "clique size")->required();
  search_cmd->add_flag("--first", search.first, "stop at the first hit");
  search_cmd->add_flag("--strict", search.strict,
                       "no early exit in equality scans");
  search_cmd->add_option("--word-width", search.word_width,
                         "counted word width (1..64)");
  search_cmd->add_option("--workers", search.workers, "parallel rank slices");
  search_cmd->add_option("--format", search.format, "json");
  search_cmd->add_option("--out", search.out_path, "write findings here");

  BoundsOptions bounds;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "exact combinatorial bound table");
  bounds_cmd->add_option("--n", bounds.range, "order range, e.g. 2..16");
  bounds_cmd->add_flag("--census", bounds.census,
                       "add the clique census columns (enumeration-backed)");
  bounds_cmd->add_option("--format", bounds.format, "json or csv");
  bounds_cmd->add_option("--out", bounds.out_path, "write the table here");

  SortOptions sort;
  CLI::App* sort_cmd = app.add_subcommand(
      "sort", "run one instrumented sorting algorithm");
  sort_cmd->add_option("--alg", sort.algorithm,
                       "bubble-restart | bubble | merge | radix")
      ->required();
  sort_cmd->add_option("--input", sort.input,
                       "descending:N | random:N | perm256 | file path");
  sort_cmd->add_option("--all-perms", sort.all_perms,
                       "scan every permutation of 1..N (N <= 8)");
  sort_cmd->add_option("--w", sort.radix_width, "radix width in bits");
  sort_cmd->add_option("--seed", sort.seed, "generator seed");
  sort_cmd->add_option("--format", sort.format, "json");
  sort_cmd->add_option("--out", sort.out_path, "write the tally here");

  ReportOptions report;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "sweep planted instances and check tallies against C(n,q)");
  report_cmd->add_option("--n", report.range, "order range, e.g. 4..12")
      ->required();
  report_cmd->add_option("--q", report.q_rule, "\"half\" or a fixed size");
  report_cmd->add_option("--p", report.density, "background edge density")
      ->check(CLI::Range(0.0, 1.0));
  report_cmd->add_option("--seed", report.seed, "generator seed");
  report_cmd->add_flag("--strict", report.strict,
                       "no early exit in equality scans");
  report_cmd->add_option("--word-width", report.word_width,
                         "counted word width (1..64)");
  report_cmd->add_option("--workers", report.workers, "parallel rank slices");
  report_cmd->add_option("--format", report.format, "json or csv");
  report_cmd->add_option("--out", report.out_path, "write the report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen, out);
    if (app.got_subcommand(search_cmd)) return cmd_search(search, out);
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(bounds, out);
    if (app.got_subcommand(sort_cmd)) return cmd_sort(sort, out);
    if (app.got_subcommand(report_cmd)) return cmd_report(report, out);
    err << "error: no subcommand selected\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace cliquelab
