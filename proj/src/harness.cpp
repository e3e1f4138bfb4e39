#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/bitset.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/harness.hpp"
#include "ncg/structure.hpp"

namespace ncg {

namespace {

using nlohmann::json;

CheckResult make_result(std::string id, std::vector<std::string> subjects,
                        CheckStatus status, json witness) {
  CheckResult r;
  r.check_id = std::move(id);
  r.subjects = std::move(subjects);
  r.status = status;
  r.witness = std::move(witness);
  return r;
}

/// Base prime when m is a prime power > 1, else 0.
int prime_power_base(long long m) {
  if (m < 2) return 0;
  long long p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (p * p > m) p = m;
  while (m % p == 0) m /= p;
  return m == 1 ? static_cast<int>(p) : 0;
}

long long power_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* ac_type_name(ACType t) {
  switch (t) {
    case ACType::H1: return "H1";
    case ACType::H2: return "H2";
    case ACType::H3: return "H3";
    case ACType::H4: return "H4";
    case ACType::H5: return "H5";
  }
  return "?";
}

json CheckResult::to_json() const {
  json j;
  j["check"] = check_id;
  j["subjects"] = subjects;
  j["status"] = check_status_name(status);
  j["witness"] = witness;
  return j;
}

CheckResult check_lemma_2_1(const FiniteGroup& g, const FiniteGroup& h, const IsoMap& iso) {
  const NCGraph gg = noncommuting_graph(g);
  const NCGraph gh = noncommuting_graph(h);
  if (!verify_isomorphism(gg, gh, iso))
    throw Error(ErrorKind::InvalidIso, "map is not an isomorphism between " + g.name() +
                                           " and " + h.name());

  const long long zg = static_cast<long long>(center(g).size());
  const long long zh = static_cast<long long>(center(h).size());

  json failures = json::array();
  bool strong_vertex = false;
  for (int i = 0; i < gg.vertex_count(); ++i) {
    const int x = gg.vertices[i];
    const int y = gh.vertices[iso.forward[i]];
    const long long cg = static_cast<long long>(centralizer(g, x).size());
    const long long ch = static_cast<long long>(centralizer(h, y).size());
    const long long cls = g.order() / cg;
    const long long rhs = (cls - 1) * (zh - zg);
    if (rhs % ch != 0)
      failures.push_back({{"x", x},
                          {"image", y},
                          {"class_size", cls},
                          {"partner_centralizer", ch},
                          {"rhs", rhs}});
    if (cg * cg >= static_cast<long long>(g.order()) * zg) strong_vertex = true;
  }

  const bool part2_applies = zg >= zh && strong_vertex;
  const bool part2_ok = !part2_applies || g.order() == h.order();
  if (!part2_ok)
    failures.push_back({{"part2", "orders differ"},
                        {"orders", {g.order(), h.order()}}});

  json w;
  w["z"] = {zg, zh};
  w["orders"] = {g.order(), h.order()};
  w["vertices"] = gg.vertex_count();
  w["part2_applied"] = part2_applies;
  if (!failures.empty()) w["failures"] = failures;
  return make_result("lemma2.1", {g.name(), h.name()},
                     failures.empty() ? CheckStatus::pass : CheckStatus::fail, w);
}

std::vector<long long> compatible_center_orders(const PGroupProfile& profile) {
  const long long bound = power_ll(profile.p, profile.r) * (power_ll(profile.p, profile.u) - 1);
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= bound; ++d) {
    if (bound % d != 0) continue;
    divisors.push_back(d);
    if (d != bound / d) divisors.push_back(bound / d);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

CheckResult check_lemma_2_4(const FiniteGroup& p_group, const FiniteGroup& partner) {
  PGroupProfile profile;
  try {
    profile = p_group_profile(p_group);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPGroup || e.kind() == ErrorKind::AbelianGroup)
      return make_result("lemma2.4", {p_group.name(), partner.name()},
                         CheckStatus::not_applicable, {{"reason", e.what()}});
    throw;
  }
  const long long bound =
      power_ll(profile.p, profile.r) * (power_ll(profile.p, profile.u) - 1);
  const long long zh = static_cast<long long>(center(partner).size());
  json w;
  w["p"] = profile.p;
  w["r"] = profile.r;
  w["u"] = profile.u;
  w["bound"] = bound;
  w["partner_z"] = zh;
  return make_result("lemma2.4", {p_group.name(), partner.name()},
                     bound % zh == 0 ? CheckStatus::pass : CheckStatus::fail, w);
}

CheckResult check_lemma_2_5(const FiniteGroup& g, int clique_cap) {
  if (g.is_abelian())
    return make_result("lemma2.5", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "abelian"}});
  const CentralizerPartition part = ac_partition(g);
  if (!part.is_ac)
    return make_result("lemma2.5", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "not an AC-group"}});
  const int zn = center(g).size();
  const long long quot = g.order() / zn;
  const int p = prime_power_base(quot);
  if (p == 0)
    return make_result("lemma2.5", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "G/Z is not a p-group"}, {"quotient_order", quot}});

  const int omega_partition = static_cast<int>(part.components.size());
  const int omega_clique = max_clique(noncommuting_graph(g), clique_cap);

  json w;
  w["p"] = p;
  w["z"] = zn;
  w["omega"] = omega_clique;
  w["partition_omega"] = omega_partition;
  if (omega_partition != omega_clique)
    return make_result("lemma2.5", {g.name()}, CheckStatus::fail, w);
  w["residue"] = (omega_clique - 1) % p;
  return make_result("lemma2.5", {g.name()},
                     (omega_clique - 1) % p == 0 ? CheckStatus::pass : CheckStatus::fail, w);
}

CheckResult check_lemma_2_6(const FiniteGroup& g, const Subgroup& c, int a) {
  if (!c.parent().same_group(g))
    throw Error(ErrorKind::ValidationError, "subgroup belongs to a different group");
  if (!c.is_abelian())
    return make_result("lemma2.6", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "C is not abelian"}});
  const int n = g.order();
  std::vector<int> conj_c;
  conj_c.reserve(c.size());
  for (int x : c.members()) conj_c.push_back(g.conj(x, a));

  Bitset cca(n), cac(n);
  for (int c1 : c.members())
    for (std::size_t i = 0; i < conj_c.size(); ++i) {
      cca.set(g.mul(c1, conj_c[i]));
      cac.set(g.mul(conj_c[i], c1));
    }
  json w;
  w["c_order"] = c.size();
  w["a"] = a;
  if (!(cca == cac))
    return make_result("lemma2.6", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "C*C^a != C^a*C"}, {"c_order", c.size()}, {"a", a}});

  const Subgroup k = commutator_with_element(c, a);
  Bitset prod(n);
  for (int c1 : c.members())
    for (int kk : k.members()) prod.set(g.mul(c1, kk));

  w["k_order"] = k.size();
  w["product_size"] = static_cast<long long>(cca.count());
  return make_result("lemma2.6", {g.name()},
                     prod == cca ? CheckStatus::pass : CheckStatus::fail, w);
}

CheckResult check_lemma_2_6_sweep(const FiniteGroup& g) {
  const int n = g.order();
  std::set<std::vector<int>> seen;
  for (int x = 0; x < n; ++x) seen.insert(closure_members(g, {x}));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) seen.insert(closure_members(g, {x, y}));

  long long abelian_subgroups = 0, applicable = 0, skipped = 0;
  for (const auto& members : seen) {
    const Subgroup c(g, members);
    if (!c.is_abelian()) continue;
    ++abelian_subgroups;
    for (int a = 0; a < n; ++a) {
      const CheckResult r = check_lemma_2_6(g, c, a);
      if (r.status == CheckStatus::fail) {
        json w = r.witness;
        w["c_members"] = members;
        return make_result("lemma2.6", {g.name()}, CheckStatus::fail, w);
      }
      if (r.status == CheckStatus::pass)
        ++applicable;
      else
        ++skipped;
    }
  }
  json w;
  w["subgroups"] = static_cast<long long>(seen.size());
  w["abelian_subgroups"] = abelian_subgroups;
  w["applicable"] = applicable;
  w["hypothesis_failed"] = skipped;
  return make_result("lemma2.6", {g.name()}, CheckStatus::pass, w);
}

CheckResult check_prop_2_7(const FiniteGroup& g) {
  if (g.is_abelian())
    return make_result("prop2.7", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "abelian"}});
  const auto nc = nilpotency_class(g);
  if (!nc || *nc <= 2)
    return make_result("prop2.7", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "nilpotency class not > 2"},
                        {"class", nc ? json(*nc) : json(nullptr)}});
  const CentralizerPartition part = ac_partition(g);
  if (!part.is_ac)
    return make_result("prop2.7", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "not an AC-group"}});

  int max_size = 0;
  for (const Subgroup& comp : part.components) max_size = std::max(max_size, comp.size());
  std::vector<int> normal_sizes;
  for (const Subgroup& comp : part.components)
    if (is_normal(g, comp)) normal_sizes.push_back(comp.size());

  json w;
  w["class"] = *nc;
  std::vector<int> sizes;
  for (const Subgroup& comp : part.components) sizes.push_back(comp.size());
  std::sort(sizes.begin(), sizes.end());
  w["component_sizes"] = sizes;
  w["normal_component_sizes"] = normal_sizes;
  const bool ok = normal_sizes.size() == 1 && normal_sizes[0] == max_size;
  return make_result("prop2.7", {g.name()}, ok ? CheckStatus::pass : CheckStatus::fail, w);
}

CheckResult check_lemma_2_8(const FiniteGroup& g) {
  PGroupProfile profile;
  try {
    profile = p_group_profile(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPGroup || e.kind() == ErrorKind::AbelianGroup)
      return make_result("lemma2.8", {g.name()}, CheckStatus::not_applicable,
                         {{"reason", e.what()}});
    throw;
  }
  const auto nc = nilpotency_class(g);
  if (!nc || *nc != 2)
    return make_result("lemma2.8", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "nilpotency class != 2"},
                        {"class", nc ? json(*nc) : json(nullptr)}});
  json w;
  w["p"] = profile.p;
  w["r"] = profile.r;
  w["a_list"] = profile.a_list;
  w["class"] = *nc;
  const bool ok = std::all_of(profile.a_list.begin(), profile.a_list.end(),
                              [&](int a) { return a <= profile.r; });
  return make_result("lemma2.8", {g.name()}, ok ? CheckStatus::pass : CheckStatus::fail, w);
}

CheckResult check_frobenius(const FiniteGroup& g, int order_cap) {
  const auto fs = frobenius_structure(g, order_cap);
  if (!fs)
    return make_result("frobenius", {g.name()}, CheckStatus::not_applicable,
                       {{"reason", "no Frobenius structure"}});
  const Subgroup& f = fs->kernel;
  const Subgroup& k = fs->complement;
  json w;
  w["kernel_order"] = f.size();
  w["complement_order"] = k.size();
  json failures = json::array();

  if ((f.size() - 1) % k.size() != 0)
    failures.push_back({{"reason", "|K| does not divide |F|-1"}});

  std::vector<int> f1_orders;
  for (const Subgroup& n : normal_subgroups(g, order_cap)) {
    if (n.size() <= 1 || n.size() > f.size()) continue;
    if (!std::all_of(n.members().begin(), n.members().end(),
                     [&](int x) { return f.contains(x); }))
      continue;
    f1_orders.push_back(n.size());

    const std::vector<int> h1 = [&] {
      std::vector<int> seed = k.members();
      seed.insert(seed.end(), n.members().begin(), n.members().end());
      return closure_members(g, seed);
    }();
    if (static_cast<long long>(h1.size()) !=
        static_cast<long long>(k.size()) * n.size()) {
      failures.push_back({{"f1_order", n.size()},
                          {"reason", "|K*F1| != |K||F1|"},
                          {"kf1_order", static_cast<long long>(h1.size())}});
      continue;
    }
    bool f1_normal_in_h1 = true;
    for (int h : h1)
      for (int x : n.members())
        if (!n.contains(g.conj(x, h))) f1_normal_in_h1 = false;
    if (!f1_normal_in_h1) {
      failures.push_back({{"f1_order", n.size()}, {"reason", "F1 not normal in K*F1"}});
      continue;
    }
    bool kernel_condition = true;
    int bad_x = -1, bad_y = -1;
    for (int x : n.members()) {
      if (x == 0) continue;
      for (int y : h1) {
        if (y == 0) continue;
        if (g.mul(x, y) == g.mul(y, x) && !n.contains(y)) {
          kernel_condition = false;
          bad_x = x;
          bad_y = y;
        }
      }
    }
    if (!kernel_condition)
      failures.push_back({{"f1_order", n.size()},
                          {"reason", "centralizer escapes F1 inside K*F1"},
                          {"x", bad_x},
                          {"y", bad_y}});
  }
  w["f1_orders"] = f1_orders;
  if (!failures.empty()) w["failures"] = failures;
  return make_result("frobenius", {g.name()},
                     failures.empty() ? CheckStatus::pass : CheckStatus::fail, w);
}

std::string render_report(const std::vector<CheckResult>& rows) {
  std::vector<const CheckResult*> order;
  order.reserve(rows.size());
  for (const CheckResult& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const CheckResult* a, const CheckResult* b) {
                     if (a->subjects != b->subjects) return a->subjects < b->subjects;
                     if (a->check_id != b->check_id) return a->check_id < b->check_id;
                     return a->witness.dump() < b->witness.dump();
                   });
  long long pass = 0, fail = 0, na = 0;
  std::string out;
  for (const CheckResult* r : order) {
    switch (r->status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::not_applicable: ++na; break;
    }
    out += r->to_json().dump();
    out += '\n';
  }
  json summary;
  summary["summary"] = {{"pass", pass}, {"fail", fail}, {"not_applicable", na}};
  out += summary.dump();
  out += '\n';
  return out;
}

}  // namespace ncg
