#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncg/catalog.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/harness.hpp"
#include "ncg/parallel.hpp"
#include "ncg/structure.hpp"

namespace {

using ncg::CheckResult;
using ncg::CheckStatus;
using ncg::Error;
using ncg::ErrorKind;
using ncg::FiniteGroup;
using nlohmann::json;

struct Options {
  std::vector<std::string> groups;
  std::vector<std::string> catalogs;
  std::vector<std::string> families;
  int max_order = 64;
  std::string report;
  int clique_cap = 200;
  int iso_cap = 2000;
  int jobs = 0;  // 0 = take NCG_JOBS, else 1
};

int effective_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  if (const char* env = std::getenv("NCG_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void add_source_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.groups,
                  "group spec (family:param, witness name, or catalog record name); repeatable");
  cmd->add_option("--catalog", o.catalogs, "JSONL catalog file; repeatable");
  cmd->add_option("--families", o.families,
                  "built-in families to include (comma separated, or 'all')")
      ->delimiter(',');
  cmd->add_option("--max-order", o.max_order, "largest group order to sweep")
      ->capture_default_str();
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--report", o.report, "write the JSONL report here instead of stdout");
  cmd->add_option("--clique-cap", o.clique_cap, "vertex cap for the clique solver")
      ->capture_default_str();
  cmd->add_option("--iso-cap", o.iso_cap, "vertex cap for general graph isomorphism")
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads (or set NCG_JOBS)");
}

/// Groups to operate on: explicit --group specs win; otherwise the union
/// of --catalog files and (when no catalog is given, or --families asks
/// for them) the built-in catalog, filtered by --max-order.
std::vector<FiniteGroup> resolve_groups(const Options& o) {
  std::vector<FiniteGroup> loaded;
  for (const std::string& path : o.catalogs) {
    std::vector<FiniteGroup> file = ncg::read_catalog(path);
    loaded.insert(loaded.end(), file.begin(), file.end());
  }

  if (!o.groups.empty()) {
    std::vector<FiniteGroup> out;
    for (const std::string& spec : o.groups) {
      auto it = std::find_if(loaded.begin(), loaded.end(),
                             [&](const FiniteGroup& g) { return g.name() == spec; });
      if (it != loaded.end()) {
        out.push_back(*it);
        continue;
      }
      try {
        out.push_back(ncg::make_group(spec));
      } catch (const Error& e) {
        throw Error(ErrorKind::UsageError, e.what());
      }
    }
    return out;
  }

  if (o.catalogs.empty() || !o.families.empty()) {
    std::vector<FiniteGroup> builtin = ncg::builtin_catalog(o.max_order, o.families);
    loaded.insert(loaded.end(), builtin.begin(), builtin.end());
  }

  std::vector<FiniteGroup> out;
  std::set<std::string> names;
  for (FiniteGroup& g : loaded) {
    if (g.order() > o.max_order) continue;
    if (!names.insert(g.name()).second) continue;  // catalog shadows builtins
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.name() < b.name();
  });
  return out;
}

int emit_report(const std::vector<CheckResult>& rows, const Options& o) {
  const std::string text = ncg::render_report(rows);
  if (o.report.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.report, std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open report file '" + o.report + "'");
    out << text;
    if (!out.good()) throw Error(ErrorKind::IoError, "write failed for '" + o.report + "'");
  }
  const bool failed = std::any_of(rows.begin(), rows.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::fail;
  });
  return failed ? 1 : 0;
}

/// Sweeps never abort on a single group: scope errors become
/// not_applicable rows, anything else becomes a fail row.
template <typename Fn>
CheckResult guarded(const std::string& id, const FiniteGroup& g, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    CheckResult r;
    r.check_id = id;
    r.subjects = {g.name()};
    switch (e.kind()) {
      case ErrorKind::AbelianGroup:
      case ErrorKind::NotPGroup:
      case ErrorKind::NotACGroup:
      case ErrorKind::NotSolvable:
      case ErrorKind::SizeLimitExceeded:
      case ErrorKind::OrderLimitExceeded:
        r.status = CheckStatus::not_applicable;
        r.witness = {{"reason", e.what()}};
        break;
      default:
        r.status = CheckStatus::fail;
        r.witness = {{"error", e.what()}};
        break;
    }
    return r;
  }
}

int run_per_group_check(const std::string& id, const Options& o) {
  const std::vector<FiniteGroup> groups = resolve_groups(o);
  std::vector<CheckResult> rows(groups.size());
  ncg::parallel_for(static_cast<int>(groups.size()), effective_jobs(o), [&](int i) {
    const FiniteGroup& g = groups[i];
    rows[i] = guarded(id, g, [&]() -> CheckResult {
      if (id == "lemma2.5") return ncg::check_lemma_2_5(g, o.clique_cap);
      if (id == "lemma2.6") return ncg::check_lemma_2_6_sweep(g);
      if (id == "prop2.7") return ncg::check_prop_2_7(g);
      if (id == "lemma2.8") return ncg::check_lemma_2_8(g);
      return ncg::check_frobenius(g);
    });
  });
  return emit_report(rows, o);
}

int run_pair_check(const std::string& id, const Options& o) {
  ncg::ScanOptions sopts;
  sopts.clique_cap = o.clique_cap;
  sopts.iso_cap = o.iso_cap;
  sopts.jobs = effective_jobs(o);
  sopts.theorem_mode = id == "theorem1.2";
  ncg::PairReport report = scan_pairs(resolve_groups(o), sopts);
  std::vector<CheckResult> rows;
  if (id == "lemma2.1" || id == "lemma2.4") {
    for (CheckResult& r : report.rows)
      if (r.check_id == id) rows.push_back(std::move(r));
  } else {
    rows = std::move(report.rows);
  }
  return emit_report(rows, o);
}

int run_check(const std::string& id, const Options& o) {
  static const std::set<std::string> per_group = {"lemma2.5", "lemma2.6", "prop2.7",
                                                  "lemma2.8", "frobenius"};
  static const std::set<std::string> pairwise = {"lemma2.1", "lemma2.4", "theorem1.2"};
  if (per_group.count(id)) return run_per_group_check(id, o);
  if (pairwise.count(id)) return run_pair_check(id, o);
  throw Error(ErrorKind::UsageError, "unknown check id '" + id + "'");
}

int run_classify(const Options& o) {
  const std::vector<FiniteGroup> groups = resolve_groups(o);
  std::vector<CheckResult> rows(groups.size());
  ncg::parallel_for(static_cast<int>(groups.size()), effective_jobs(o), [&](int i) {
    const FiniteGroup& g = groups[i];
    rows[i] = guarded("classify", g, [&]() -> CheckResult {
      const ncg::ACClass cls = ncg::classify_ac(g, o.clique_cap);
      CheckResult r;
      r.check_id = "classify";
      r.subjects = {g.name()};
      r.status = CheckStatus::pass;
      r.witness = cls.witness;
      return r;
    });
  });
  return emit_report(rows, o);
}

int run_scan(const Options& o) {
  ncg::ScanOptions sopts;
  sopts.clique_cap = o.clique_cap;
  sopts.iso_cap = o.iso_cap;
  sopts.jobs = effective_jobs(o);
  ncg::PairReport report = scan_pairs(resolve_groups(o), sopts);
  return emit_report(report.rows, o);
}

FiniteGroup resolve_single(const Options& o) {
  std::vector<FiniteGroup> groups = resolve_groups(o);
  if (groups.size() != 1)
    throw Error(ErrorKind::UsageError, "this command needs exactly one --group");
  return std::move(groups.front());
}

int run_graph(const Options& o, const std::string& dot_path, const std::string& json_path) {
  const FiniteGroup g = resolve_single(o);
  const ncg::NCGraph graph = ncg::noncommuting_graph(g);
  auto write_file = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    out << text;
    if (!out.good()) throw Error(ErrorKind::IoError, "write failed for '" + path + "'");
  };
  if (!dot_path.empty()) write_file(dot_path, ncg::to_dot(graph));
  if (!json_path.empty()) write_file(json_path, ncg::graph_to_json(graph).dump(2) + "\n");
  if (dot_path.empty() && json_path.empty())
    std::cout << ncg::graph_to_json(graph).dump(2) << "\n";
  return 0;
}

int run_profile(const Options& o, const std::string& json_path) {
  const FiniteGroup g = resolve_single(o);
  const ncg::PGroupProfile prof = ncg::p_group_profile(g);
  json j;
  j["group"] = g.name();
  j["p"] = prof.p;
  j["n"] = prof.n;
  j["r"] = prof.r;
  j["a_list"] = prof.a_list;
  j["u"] = prof.u;
  j["compatible_center_orders"] = ncg::compatible_center_orders(prof);
  if (json_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + json_path + "'");
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_build_catalog(const Options& o, const std::string& out_path) {
  const std::vector<FiniteGroup> groups = ncg::builtin_catalog(o.max_order, o.families);
  ncg::write_catalog(groups, out_path);
  std::cout << "wrote " << groups.size() << " groups to " << out_path << "\n";
  return 0;
}

int run_ingest(const Options& o, const std::string& out_path) {
  if (o.catalogs.empty())
    throw Error(ErrorKind::UsageError, "ingest needs at least one --catalog");
  std::vector<FiniteGroup> groups;
  for (const std::string& path : o.catalogs) {
    std::vector<FiniteGroup> file = ncg::read_catalog(path);
    for (FiniteGroup& g : file)
      if (g.order() <= o.max_order) groups.push_back(std::move(g));
  }
  const ncg::DedupeResult dd = ncg::dedupe(groups);
  for (const auto& [a, b] : dd.suspected) {
    json j;
    j["suspected_duplicate"] = {a, b};
    std::cout << j.dump() << "\n";
  }
  json summary;
  summary["ingested"] = static_cast<long long>(dd.kept.size());
  summary["suspected_duplicates"] = static_cast<long long>(dd.suspected.size());
  std::cout << summary.dump() << "\n";
  if (!out_path.empty()) ncg::write_catalog(dd.kept, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-commuting graph construction and verification harness"};
  app.require_subcommand(1);

  Options opt;
  std::string check_id, dot_path, json_path, out_path;

  CLI::App* build = app.add_subcommand("build-catalog", "write the built-in catalog as JSONL");
  add_source_flags(build, opt);
  build->add_option("--out", out_path, "output JSONL path")->required();

  CLI::App* ingest = app.add_subcommand("ingest", "validate external catalogs, flag duplicates");
  add_source_flags(ingest, opt);
  ingest->add_option("--out", out_path, "write the merged catalog here");

  CLI::App* graph = app.add_subcommand("graph", "export a non-commuting graph");
  add_source_flags(graph, opt);
  graph->add_option("--dot", dot_path, "write Graphviz DOT here");
  graph->add_option("--json", json_path, "write the JSON form here");

  CLI::App* check = app.add_subcommand("check", "run one check across the selected groups");
  check->add_option("id", check_id,
                    "lemma2.1 lemma2.4 lemma2.5 lemma2.6 prop2.7 lemma2.8 frobenius theorem1.2")
      ->required();
  add_source_flags(check, opt);
  add_run_flags(check, opt);

  CLI::App* classify = app.add_subcommand("classify", "type solvable AC-groups (H1..H5)");
  add_source_flags(classify, opt);
  add_run_flags(classify, opt);

  CLI::App* scan = app.add_subcommand("scan-pairs", "all-pairs graph comparison over a catalog");
  add_source_flags(scan, opt);
  add_run_flags(scan, opt);

  CLI::App* profile = app.add_subcommand("profile", "p-group numeric profile");
  add_source_flags(profile, opt);
  profile->add_option("--json", json_path, "write the profile JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build_catalog(opt, out_path);
    if (ingest->parsed()) return run_ingest(opt, out_path);
    if (graph->parsed()) return run_graph(opt, dot_path, json_path);
    if (check->parsed()) return run_check(check_id, opt);
    if (classify->parsed()) return run_classify(opt);
    if (scan->parsed()) return run_scan(opt);
    if (profile->parsed()) return run_profile(opt, json_path);
  } catch (const Error& e) {
    std::cerr << "ncg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ncg: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
