// Command-line front end: expand the series families, query the partition
// statistics, and run identity verifications.  Exit codes: 0 all checks
// passed, 1 at least one identity mismatch, 2 usage or parameter error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmac/identities.hpp"

using namespace qmac;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sign parse_sign(const std::string& s) { return s == "minus" ? Sign::Minus : Sign::Plus; }

std::optional<int> parse_m(const std::string& s) {
  if (s == "inf") return std::nullopt;
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--m expects a non-negative integer or 'inf', got '" + s + "'");
  }
}

// "6" or "0..25"
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return {v, v};
    }
    size_t used = 0;
    int from = std::stoi(s.substr(0, dots), &used);
    int to = std::stoi(s.substr(dots + 2), &used);
    if (from < 0 || to < from) throw std::invalid_argument(s);
    return {from, to};
  } catch (const std::exception&) {
    throw UsageError("expected N or FROM..TO with 0 <= FROM <= TO, got '" + s + "'");
  }
}

std::string coeff_list_text(const std::vector<Int>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  std::string family = "A";
  std::string sign = "plus";
  int k = 0;
  std::string m = "inf";
  int order = 20;
  std::string format = "text";
};

int run_expand(const ExpandArgs& args) {
  std::optional<int> m = parse_m(args.m);
  SeriesSpec spec{args.family == "A" ? Family::A : Family::C, parse_sign(args.sign), args.k, m,
                  args.order};
  TruncatedSeries series = macmahon_series(spec);

  if (args.format == "json") {
    ordered_json j;
    j["family"] = args.family;
    j["sign"] = args.sign;
    j["k"] = args.k;
    if (m)
      j["m"] = *m;
    else
      j["m"] = "inf";
    j["order"] = args.order;
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : series.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << args.family << (spec.sign == Sign::Plus ? "+" : "-") << " k=" << args.k
              << " m=" << args.m << " order=" << args.order << ": " << series << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ stat

struct StatArgs {
  std::string name;
  std::optional<int> k;
  std::string n = "0";
  std::optional<int> m;
  std::optional<int> l;
  std::optional<int> s;
  std::optional<int> t;
  bool force = false;
  std::string format = "text";
};

int require_param(const std::optional<int>& value, const char* flag, const std::string& stat) {
  if (!value) throw UsageError("statistic '" + stat + "' requires " + flag);
  return *value;
}

int run_stat(const StatArgs& args) {
  auto [n_from, n_to] = parse_range(args.n);
  if (!args.force && n_to > kOracleSoftGuard) {
    throw UsageError("n = " + std::to_string(n_to) + " exceeds the brute-force guard (" +
                     std::to_string(kOracleSoftGuard) + "); pass --force to override");
  }
  const int guard = std::max(n_to, kOracleSoftGuard);

  std::vector<Int> values;
  for (int n = n_from; n <= n_to; ++n) {
    if (args.name == "a+")
      values.push_back(a_stat(Sign::Plus, require_param(args.k, "--k", args.name), n, guard));
    else if (args.name == "a-")
      values.push_back(a_stat(Sign::Minus, require_param(args.k, "--k", args.name), n, guard));
    else if (args.name == "c+")
      values.push_back(c_stat(Sign::Plus, require_param(args.k, "--k", args.name), n, guard));
    else if (args.name == "c-")
      values.push_back(c_stat(Sign::Minus, require_param(args.k, "--k", args.name), n, guard));
    else if (args.name == "p3")
      values.push_back(p3(n, guard));
    else if (args.name == "overline-p")
      values.push_back(overpartition_count(n, guard));
    else if (args.name == "P")
      values.push_back(P_count(require_param(args.m, "--m", args.name),
                               require_param(args.l, "--l", args.name), n, guard));
    else if (args.name == "Q")
      values.push_back(Q_count(require_param(args.m, "--m", args.name),
                               require_param(args.s, "--s", args.name),
                               require_param(args.t, "--t", args.name), n, guard));
    else
      throw UsageError("unknown statistic '" + args.name + "'");
  }

  if (args.format == "json") {
    ordered_json j;
    j["stat"] = args.name;
    if (args.name == "a+" || args.name == "a-" || args.name == "c+" || args.name == "c-")
      j["k"] = *args.k;
    if (args.name == "P" || args.name == "Q") j["m"] = *args.m;
    if (args.name == "P") j["l"] = *args.l;
    if (args.name == "Q") {
      j["s"] = *args.s;
      j["t"] = *args.t;
    }
    if (n_from == n_to) {
      j["n"] = n_from;
      j["value"] = values[0].str();
    } else {
      j["n_from"] = n_from;
      j["n_to"] = n_to;
      ordered_json vs = ordered_json::array();
      for (const Int& v : values) vs.push_back(v.str());
      j["values"] = vs;
    }
    std::cout << j.dump() << "\n";
  } else {
    if (n_from == n_to)
      std::cout << values[0].str() << "\n";
    else
      std::cout << coeff_list_text(values) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity = "all";
  int order = 50;
  int max_k = 4;
  int max_m = 8;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<int> l;
  std::string sign = "both";
  std::optional<int> n_max;
  std::optional<int> a_max;
  std::string format = "text";
};

std::vector<Sign> signs_for(const IdentityInfo& info, const std::string& requested) {
  if (!info.sign_dependent) {
    if (requested == "minus")
      throw UsageError("identity '" + info.id + "' is stated for the + family only");
    return {Sign::Plus};
  }
  if (requested == "plus") return {Sign::Plus};
  if (requested == "minus") return {Sign::Minus};
  return {Sign::Plus, Sign::Minus};
}

std::vector<IdentityReport> run_verify_grid(const VerifyArgs& args) {
  if (args.identity == "all") return verify_suite(args.order, args.max_k, args.max_m);

  const IdentityInfo* info = find_identity(args.identity);
  if (!info) throw UnknownIdentity("unknown identity: " + args.identity);

  std::vector<IdentityReport> reports;
  auto run_point = [&](VerifyParams p) { reports.push_back(verify(info->id, p)); };

  if (info->kind == IdentityKind::Series) {
    std::vector<int> ks;
    if (args.k)
      ks.push_back(*args.k);
    else
      for (int k = std::max(1, info->min_k); k <= args.max_k; ++k) ks.push_back(k);
    for (int k : ks) {
      for (Sign sign : signs_for(*info, args.sign)) {
        VerifyParams p;
        p.k = k;
        p.sign = sign;
        p.order = args.order;
        if (info->finite_m) {
          std::vector<int> ms;
          if (args.m)
            ms.push_back(*args.m);
          else
            for (int m = k; m <= args.max_m; ++m) ms.push_back(m);
          for (int m : ms) {
            p.m = m;
            run_point(p);
          }
        } else {
          run_point(p);
        }
      }
    }
    return reports;
  }

  if (info->id == "c-10") {
    for (int m = args.m ? *args.m : 1; m <= (args.m ? *args.m : 6); ++m) {
      for (int k = args.k ? *args.k : 1; k <= (args.k ? *args.k : 3); ++k) {
        VerifyParams p;
        p.k = k;
        p.m = m;
        p.n_max = args.n_max;
        run_point(p);
      }
    }
    return reports;
  }

  if (info->id == "c-14") {
    for (int m = args.m ? *args.m : 1; m <= (args.m ? *args.m : 6); ++m) {
      for (int l = args.l ? *args.l : 0; l <= (args.l ? *args.l : m); ++l) {
        VerifyParams p;
        p.l = l;
        p.m = m;
        p.n_max = args.n_max;
        run_point(p);
      }
    }
    return reports;
  }

  // c-1, c-2, zeil-rec
  for (int k = args.k ? *args.k : 1; k <= (args.k ? *args.k : 8); ++k) {
    VerifyParams p;
    p.k = k;
    p.a_max = args.a_max;
    run_point(p);
  }
  return reports;
}

int run_verify(const VerifyArgs& args) {
  std::vector<IdentityReport> reports = run_verify_grid(args);
  int failed = 0;
  for (const IdentityReport& r : reports) failed += r.pass ? 0 : 1;

  if (args.format == "json") {
    ordered_json out = ordered_json::array();
    for (const IdentityReport& r : reports) {
      ordered_json j;
      j["id"] = r.id;
      ordered_json params = ordered_json::object();
      for (const auto& [key, value] : r.params) params[key] = value;
      j["params"] = params;
      j["range"] = r.range;
      j["status"] = r.pass ? "pass" : "fail";
      if (r.first_mismatch) {
        ordered_json mm;
        mm["index"] = r.first_mismatch->index;
        mm["lhs"] = r.first_mismatch->lhs.str();
        mm["rhs"] = r.first_mismatch->rhs.str();
        j["first_mismatch"] = mm;
      } else {
        j["first_mismatch"] = nullptr;
      }
      if (!r.note.empty()) j["note"] = r.note;
      out.push_back(j);
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const IdentityReport& r : reports) {
      std::string params;
      for (const auto& [key, value] : r.params) params += " " + key + "=" + value;
      std::printf("%-4s %-8s%s  [%s]  (%.3fs)\n", r.pass ? "pass" : "FAIL", r.id.c_str(),
                  params.c_str(), r.range.c_str(), r.elapsed_seconds);
      if (r.first_mismatch) {
        std::printf("     first mismatch at %lld: lhs=%s rhs=%s\n", r.first_mismatch->index,
                    r.first_mismatch->lhs.str().c_str(), r.first_mismatch->rhs.str().c_str());
      }
      if (!r.note.empty()) std::printf("     note: %s\n", r.note.c_str());
    }
    std::printf("%zu checks, %d failed\n", reports.size(), failed);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic toolkit for MacMahon-type q-series"};
  app.require_subcommand(1);

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand("expand", "expand a series family to a coefficient list");
  expand->add_option("--family", expand_args.family, "series family")
      ->required()
      ->check(CLI::IsMember({"A", "C"}));
  expand->add_option("--sign", expand_args.sign, "family sign")
      ->check(CLI::IsMember({"plus", "minus"}));
  expand->add_option("--k", expand_args.k, "number of distinct part sizes")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--m", expand_args.m, "part bound, or 'inf' for the limit");
  expand->add_option("--order", expand_args.order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--format", expand_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  StatArgs stat_args;
  CLI::App* stat = app.add_subcommand("stat", "evaluate a partition statistic by enumeration");
  stat->add_option("name", stat_args.name, "one of a+, a-, c+, c-, p3, overline-p, P, Q")
      ->required()
      ->check(CLI::IsMember({"a+", "a-", "c+", "c-", "p3", "overline-p", "P", "Q"}));
  stat->add_option("--k", stat_args.k, "distinct part sizes (a/c statistics)");
  stat->add_option("--n", stat_args.n, "weight, N or FROM..TO")->required();
  stat->add_option("--m", stat_args.m, "part bound (P and Q)");
  stat->add_option("--l", stat_args.l, "multiplicity-one count (P)");
  stat->add_option("--s", stat_args.s, "total part count (Q)");
  stat->add_option("--t", stat_args.t, "multiplicity-two count (Q)");
  stat->add_flag("--force", stat_args.force, "override the brute-force guard");
  stat->add_option("--format", stat_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* ver = app.add_subcommand("verify", "check identities coefficient by coefficient");
  ver->add_option("id", verify_args.identity, "identity id or 'all' (positional)");
  ver->add_option("--identity", verify_args.identity, "identity id or 'all'")
      ->excludes("id");
  ver->add_option("--order", verify_args.order, "series truncation order")
      ->check(CLI::PositiveNumber);
  ver->add_option("--max-k", verify_args.max_k, "largest k in sweeps")->check(CLI::PositiveNumber);
  ver->add_option("--max-m", verify_args.max_m, "largest m in sweeps")->check(CLI::PositiveNumber);
  ver->add_option("--k", verify_args.k, "fix k to a single value");
  ver->add_option("--m", verify_args.m, "fix m to a single value");
  ver->add_option("--l", verify_args.l, "fix l (c-14)");
  ver->add_option("--sign", verify_args.sign, "which signs to run")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  ver->add_option("--n-max", verify_args.n_max, "combinatorial sweep bound");
  ver->add_option("--a-max", verify_args.a_max, "lemma sweep bound");
  ver->add_option("--format", verify_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (expand->parsed()) return run_expand(expand_args);
    if (stat->parsed()) return run_stat(stat_args);
    return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
