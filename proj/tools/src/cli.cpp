#include "permsort_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permsort/analysis.hpp"
#include "permsort/bijection.hpp"
#include "permsort/errors.hpp"
#include "permsort/operators.hpp"
#include "permsort/report_json.hpp"
#include "permsort/tree.hpp"
#include "permsort/wilf.hpp"

namespace permsort::cli {

namespace {

using nlohmann::json;

// Bad flag values or combinations; reported with exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string pick_format(const RunConfig& config, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string format = config.format.empty() ? fallback : config.format;
  for (const char* a : allowed) {
    if (format == a) return format;
  }
  throw InputError("format '" + format + "' is not available for " + config.subcommand);
}

Permutation read_permutation(const RunConfig& config) { return parse_permutation(config.perm_text); }

AnalysisOptions analysis_options(const RunConfig& config) {
  AnalysisOptions options;
  options.jobs = config.jobs;
  options.node_budget = config.budget;
  return options;
}

int cmd_sort(const RunConfig& config, std::ostream& out) {
  const auto format = pick_format(config, "text", {"text", "json", "tsv"});
  const auto op = OperatorExpr::parse(config.op_text);
  const auto perm = read_permutation(config);
  const auto result = apply(op, perm);
  if (format == "json") {
    out << json{{"operator", op}, {"input", perm}, {"output", result}}.dump(2) << '\n';
  } else if (format == "tsv") {
    out << "operator\tinput\toutput\n" << op.to_string() << '\t' << perm << '\t' << result << '\n';
  } else {
    out << result << '\n';
  }
  return kExitPass;
}

int cmd_preimages(const RunConfig& config, std::ostream& out) {
  const auto format = pick_format(config, "text", {"text", "json", "tsv"});
  const auto op = OperatorExpr::parse(config.op_text);
  const auto target = read_permutation(config);
  Budget budget(config.budget);
  const auto pre = preimages(op, target, target.size(), &budget);
  if (format == "json") {
    out << json{{"operator", op}, {"target", target}, {"count", pre.size()}, {"preimages", pre}}.dump(2)
        << '\n';
  } else if (format == "tsv") {
    out << "index\tpreimage\n";
    for (std::size_t i = 0; i < pre.size(); ++i) out << i + 1 << '\t' << pre[i] << '\n';
  } else {
    for (const auto& theta : pre) out << theta << '\n';
    out << "count: " << pre.size() << '\n';
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto format = pick_format(config, "json", {"json", "text", "tsv"});
  const auto op = OperatorExpr::parse(config.op_text);
  const auto options = analysis_options(config);

  std::vector<VerificationReport> reports;
  for (int n = 1; n <= config.n; ++n) {
    reports.push_back(verify_theorem(op, n, options));
    reports.push_back(verify_respects_P(op, n, options));
  }

  const bool any_fail = std::any_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status == Status::kFail; });
  const bool any_limit = std::any_of(reports.begin(), reports.end(),
                                     [](const auto& r) { return r.status == Status::kScaleLimit; });
  const Status overall = any_fail ? Status::kFail : any_limit ? Status::kScaleLimit : Status::kPass;

  if (format == "json") {
    out << json{{"operator", op}, {"n_max", config.n}, {"status", to_string(overall)}, {"reports", reports}}
               .dump(2)
        << '\n';
  } else if (format == "tsv") {
    out << "kind\toperator\tsize\tstatus\tcount_SA\tcount_SRA\tcounterexamples\n";
    for (const auto& r : reports) {
      out << r.kind << '\t' << r.op.to_string() << '\t' << r.size << '\t' << to_string(r.status) << '\t'
          << r.count_SA << '\t' << r.count_SRA << '\t' << r.counterexamples.size() << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << r.kind << ' ' << r.op.to_string() << " n=" << r.size << ' ' << to_string(r.status);
      if (r.kind == "theorem") out << " count_SA=" << r.count_SA << " count_SRA=" << r.count_SRA;
      if (!r.message.empty()) out << " (" << r.message << ')';
      out << '\n';
      for (const auto& c : r.counterexamples) out << "  " << c << '\n';
    }
    out << "overall: " << to_string(overall) << '\n';
  }

  if (any_fail) return kExitFail;
  if (any_limit) return kExitScaleLimit;
  return kExitPass;
}

int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err) {
  pick_format(config, "dot", {"dot"});
  const auto perm = read_permutation(config);
  if (config.kind == "tin") {
    out << to_dot(tin(perm), "tin");
    return kExitPass;
  }
  const auto canon = canonical_tree(perm);
  if (config.kind == "canonical") {
    if (!canon) {
      err << "permsort: " << perm << " is not in the image of S\n";
      return kExitInput;
    }
    out << to_dot(*canon, "canonical");
    return kExitPass;
  }
  if (!canon) return kExitPass;  // empty forest
  auto forest = star_expansions(*canon);
  std::stable_partition(forest.begin(), forest.end(), [&](const auto& t) { return t == *canon; });
  for (std::size_t i = 0; i < forest.size(); ++i) out << to_dot(forest[i], "T" + std::to_string(i + 1));
  return kExitPass;
}

int cmd_wilf(const RunConfig& config, std::ostream& out) {
  const auto format = pick_format(config, "text", {"text", "json"});
  const int n = config.n;
  if (n < 1) throw InputError("wilf needs --n >= 1");
  const int order = config.order < 0 ? config.bound : config.order;

  std::vector<Permutation> wedges;
  for (int k = 0; k < n; ++k) wedges.push_back(wedge_pattern(n, k));
  auto sorted_wedges = wedges;
  std::sort(sorted_wedges.begin(), sorted_wedges.end());
  const auto classified = classify_patterns(n, config.bound);
  const bool classification_ok = classified == sorted_wedges;
  const auto gf = check_class_gf(n, order);

  std::vector<WilfPairReport> pairs;
  for (int k = 0; k < n; ++k) pairs.push_back(check_wilf_pair(n, k, order));

  // The same unordered pair of classes reached from more than one k.
  std::map<std::pair<Permutation, Permutation>, std::vector<int>> seen;
  std::vector<int> self_paired;
  for (const auto& p : pairs) {
    if (p.self_paired) self_paired.push_back(p.k);
    seen[std::minmax(p.pattern, p.partner_pattern)].push_back(p.k);
  }
  std::vector<std::vector<int>> duplicates;
  for (const auto& [key, ks] : seen) {
    if (ks.size() > 1) duplicates.push_back(ks);
  }

  const bool pairs_ok = std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.passed(); });
  const bool ok = classification_ok && gf.passed() && pairs_ok;

  if (format == "json") {
    out << json{{"n", n},
                {"bound", config.bound},
                {"order", order},
                {"wedge_patterns", wedges},
                {"classified", classified},
                {"classification_matches", classification_ok},
                {"class_gf", gf},
                {"pairs", pairs},
                {"duplicate_pairs", duplicates},
                {"self_paired", self_paired},
                {"status", ok ? "pass" : "fail"}}
               .dump(2)
        << '\n';
  } else {
    out << "wedge patterns of size " << n << ":\n";
    for (int k = 0; k < n; ++k) out << "  k=" << k << "  " << wedges[static_cast<std::size_t>(k)] << '\n';
    out << "classified (verified up to size " << config.bound << "): " << classified.size() << " patterns, "
        << (classification_ok ? "matches" : "differs from") << " the wedge set\n";
    for (const auto& c : classified) out << "  " << c << '\n';
    out << "class counts vs F_" << n << " up to size " << order << ": "
        << (gf.passed() ? "pass" : "fail") << '\n';
    for (const auto& m : gf.mismatches) out << "  " << m << '\n';
    out << "Wilf pairs via reverse(P(sigma)):\n";
    for (const auto& p : pairs) {
      out << "  k=" << p.k << " -> k=" << p.partner_k << "  " << (p.passed() ? "pass" : "fail") << '\n';
      for (const auto& f : p.failures) out << "    " << f << '\n';
    }
    for (const auto& ks : duplicates) {
      out << "duplicate pair from k =";
      for (int k : ks) out << ' ' << k;
      out << '\n';
    }
    for (int k : self_paired) out << "self-paired k=" << k << '\n';
    out << "overall: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_series(const RunConfig& config, std::ostream& out) {
  const auto format = pick_format(config, "text", {"text", "json", "tsv"});
  if (config.n < 1) throw InputError("series needs --n >= 1");
  const int order = config.order < 0 ? 9 : config.order;
  const auto f = series_F(config.n, order);

  bool ok = true;
  json check = nullptr;
  if (config.check) {
    const auto gf = check_class_gf(config.n, order);
    ok = gf.passed();
    check = gf;
  }

  if (format == "json") {
    json j{{"n", config.n}, {"order", order}, {"coefficients", coefficient_strings(f)}};
    if (config.check) j["check"] = check;
    out << j.dump(2) << '\n';
  } else if (format == "tsv") {
    out << "degree\tcoefficient\n";
    const auto coeffs = coefficient_strings(f);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << '\t' << coeffs[i] << '\n';
  } else {
    out << to_string(f) << '\n';
    if (config.check) out << "enumeration check: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "sort") return cmd_sort(config, out);
  if (config.subcommand == "preimages") return cmd_preimages(config, out);
  if (config.subcommand == "verify") return cmd_verify(config, out);
  if (config.subcommand == "tree") return cmd_tree(config, out, err);
  if (config.subcommand == "wilf") return cmd_wilf(config, out);
  if (config.subcommand == "series") return cmd_series(config, out);
  throw InputError("unknown subcommand " + config.subcommand);
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

std::uint64_t default_budget() {
  const char* env = std::getenv("PERMSORT_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return Budget::kDefaultLimit;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InputError("PERMSORT_NODE_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::vector<std::string> perm_tokens;
  std::uint64_t budget_flag = 0;

  CLI::App app{"Stack sorting, reversal and pattern-class experiments", "permsort"};
  app.require_subcommand(1);
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot", "tsv"}));
  app.add_option("--jobs", config.jobs, "Worker threads (0 = all cores)");
  app.add_option("--budget", budget_flag, "Node budget for preimage searches")->check(CLI::PositiveNumber);

  auto with_perm = [&](CLI::App* sub) {
    sub->add_option("perm", perm_tokens, "Permutation in one-line notation, e.g. 3,1,2")->required();
  };
  auto with_op = [&](CLI::App* sub) {
    sub->add_option("--op", config.op_text, "Operator word over {S, R}; leftmost is applied last")
        ->required();
  };

  auto* sort = app.add_subcommand("sort", "Apply an operator to a permutation");
  with_op(sort);
  with_perm(sort);

  auto* pre = app.add_subcommand("preimages", "List all preimages of a permutation");
  with_op(pre);
  with_perm(pre);

  auto* verify = app.add_subcommand("verify", "Check the S o A / S o R o A correspondence for sizes 1..n");
  with_op(verify);
  verify->add_option("--n", config.n, "Largest size")->required()->check(CLI::NonNegativeNumber);

  auto* tree = app.add_subcommand("tree", "Emit a decreasing tree as DOT");
  tree->add_option("--kind", config.kind, "tin, canonical or preimage-forest")
      ->check(CLI::IsMember({"tin", "canonical", "preimage-forest"}));
  with_perm(tree);

  auto* wilf = app.add_subcommand("wilf", "Classify patterns and check Wilf pairs");
  wilf->add_option("--n", config.n, "Pattern size")->required()->check(CLI::PositiveNumber);
  wilf->add_option("--bound", config.bound, "Largest class member size checked")
      ->check(CLI::NonNegativeNumber);
  wilf->add_option("--order", config.order, "Largest size for class counts (default: bound)")
      ->check(CLI::NonNegativeNumber);

  auto* series = app.add_subcommand("series", "Coefficients of F_n");
  series->add_option("--n", config.n, "Index of F")->required()->check(CLI::PositiveNumber);
  series->add_option("--order", config.order, "Truncation order (default 9)")
      ->check(CLI::NonNegativeNumber);
  series->add_flag("--check", config.check, "Compare with class enumeration");

  for (auto* sub : {sort, pre, verify, tree, wilf, series}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  config.perm_text = join_tokens(perm_tokens);

  try {
    config.budget = budget_flag != 0 ? budget_flag : default_budget();
    return dispatch(config, out, err);
  } catch (const BudgetExceeded& e) {
    err << "permsort: " << e.what() << '\n';
    return kExitScaleLimit;
  } catch (const ParseError& e) {
    err << "permsort: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidPermutation& e) {
    err << "permsort: invalid permutation: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "permsort: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "permsort: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "permsort: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "permsort: internal error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace permsort::cli
