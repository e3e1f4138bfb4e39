#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/harness.hpp"
#include "ncg/parallel.hpp"
#include "ncg/structure.hpp"

namespace ncg {

namespace {

using nlohmann::json;

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct ScanEntry {
  const FiniteGroup* group = nullptr;
  std::optional<NCGraph> graph;
  std::string key;  // fingerprint bucket key
  bool p_group = false;
};

IsoMap invert(const IsoMap& iso) {
  IsoMap inv;
  inv.forward.assign(iso.forward.size(), 0);
  for (std::size_t i = 0; i < iso.forward.size(); ++i) inv.forward[iso.forward[i]] = int(i);
  return inv;
}

}  // namespace

PairReport scan_pairs(const std::vector<FiniteGroup>& groups, const ScanOptions& opts) {
  std::vector<const FiniteGroup*> sorted;
  sorted.reserve(groups.size());
  for (const FiniteGroup& g : groups) sorted.push_back(&g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FiniteGroup* a, const FiniteGroup* b) {
                     return a->name() < b->name();
                   });

  PairReport report;
  const int count = static_cast<int>(sorted.size());
  std::vector<ScanEntry> entries(count);
  parallel_for(count, opts.jobs, [&](int i) {
    ScanEntry& e = entries[i];
    e.group = sorted[i];
    if (e.group->is_abelian()) return;
    e.graph = noncommuting_graph(*e.group);
    e.key = fingerprint_to_json(fingerprint(*e.graph)).dump();
    e.p_group = is_prime_power(e.group->order());
  });

  std::map<std::string, std::vector<int>> buckets;
  for (int i = 0; i < count; ++i) {
    const ScanEntry& e = entries[i];
    if (!e.graph) {
      CheckResult r;
      r.check_id = opts.theorem_mode ? "theorem1.2" : "scan-pairs";
      r.subjects = {e.group->name()};
      r.status = CheckStatus::not_applicable;
      r.witness = {{"reason", "abelian"}};
      report.rows.push_back(std::move(r));
      continue;
    }
    buckets[e.key].push_back(i);
  }

  const char* pair_check = opts.theorem_mode ? "theorem1.2" : "scan-pairs";
  for (const auto& [key, members] : buckets) {
    for (std::size_t bi = 0; bi < members.size(); ++bi) {
      for (std::size_t bj = bi + 1; bj < members.size(); ++bj) {
        const ScanEntry& ea = entries[members[bi]];
        const ScanEntry& eb = entries[members[bj]];
        const bool has_p_group = ea.p_group || eb.p_group;
        if (opts.theorem_mode && !has_p_group) continue;

        std::optional<IsoMap> iso;
        try {
          iso = are_isomorphic(*ea.graph, *eb.graph, opts.iso_cap);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
          CheckResult r;
          r.check_id = pair_check;
          r.subjects = {ea.group->name(), eb.group->name()};
          r.status = CheckStatus::not_applicable;
          r.witness = {{"reason", "isomorphism cap exceeded"},
                       {"vertices", ea.graph->vertex_count()}};
          report.rows.push_back(std::move(r));
          continue;
        }
        if (!iso) continue;

        ++report.isomorphic_pairs;
        json violations = json::array();
        if (ea.group->order() != eb.group->order()) {
          ++report.conjecture_violations;
          violations.push_back("CONJECTURE-VIOLATION");
          if (has_p_group) {
            ++report.theorem_violations;
            violations.push_back("THEOREM-VIOLATION");
          }
        }
        CheckResult r;
        r.check_id = pair_check;
        r.subjects = {ea.group->name(), eb.group->name()};
        r.status = violations.empty() ? CheckStatus::pass : CheckStatus::fail;
        r.witness = {{"orders", {ea.group->order(), eb.group->order()}},
                     {"z", {center(*ea.group).size(), center(*eb.group).size()}},
                     {"vertices", ea.graph->vertex_count()},
                     {"violations", violations}};
        report.rows.push_back(std::move(r));

        if (has_p_group) {
          const bool a_is_p = ea.p_group;
          const ScanEntry& ep = a_is_p ? ea : eb;
          const ScanEntry& eh = a_is_p ? eb : ea;
          const IsoMap dir = a_is_p ? *iso : invert(*iso);
          report.rows.push_back(check_lemma_2_4(*ep.group, *eh.group));
          report.rows.push_back(check_lemma_2_1(*ep.group, *eh.group, dir));
        }
      }
    }
  }
  return report;
}

}  // namespace ncg
