#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/harness.hpp"
#include "ncg/structure.hpp"

namespace ncg {

namespace {

using nlohmann::json;

int valuation(long long m, int p) {
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

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

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// G = A x Q with A abelian and Q a non-abelian Sylow p-subgroup, if that
/// decomposition exists. Both factors must be normal, which for the
/// Sylow factor means the p-elements number exactly p^e.
struct SylowSplit {
  Subgroup a;
  Subgroup q;
};

std::optional<SylowSplit> sylow_split(const FiniteGroup& g) {
  const int n = g.order();
  const std::vector<int> orders = g.element_orders();
  for (int p : prime_divisors(n)) {
    long long pe = 1;
    for (int e = valuation(n, p); e > 0; --e) pe *= p;
    std::vector<int> q_members, a_members;
    for (int x = 0; x < n; ++x) {
      const int ox = orders[x];
      if (x == 0 || prime_power_base(ox) == p) q_members.push_back(x);
      if (ox % p != 0) a_members.push_back(x);
    }
    if (static_cast<long long>(q_members.size()) != pe) continue;
    if (static_cast<long long>(a_members.size()) != n / pe) continue;
    SylowSplit split{Subgroup(g, a_members), Subgroup(g, q_members)};
    if (!split.a.is_abelian()) continue;
    bool commute = true;
    for (int a : split.a.members())
      for (int q : split.q.members())
        if (g.mul(a, q) != g.mul(q, a)) commute = false;
    if (!commute) continue;
    return split;
  }
  return std::nullopt;
}

[[noreturn]] void unclassifiable(const FiniteGroup& g, const std::string& why) {
  throw Error(ErrorKind::Unclassifiable, g.name() + ": " + why);
}

}  // namespace

ACClass classify_ac(const FiniteGroup& g, int clique_cap) {
  if (g.is_abelian())
    throw Error(ErrorKind::AbelianGroup, g.name() + " is abelian");
  if (!is_solvable(g))
    throw Error(ErrorKind::NotSolvable, g.name() + " is not solvable");
  const CentralizerPartition part = ac_partition(g);
  if (!part.is_ac)
    throw Error(ErrorKind::NotACGroup, g.name() + " has a non-abelian centralizer");

  const Subgroup z = center(g);
  const int zn = z.size();
  const int n = g.order();

  ACClass out;
  out.clique_omega = max_clique(noncommuting_graph(g), clique_cap);
  if (static_cast<int>(part.components.size()) != out.clique_omega)
    throw Error(ErrorKind::ValidationError,
                g.name() + ": centralizer partition count " +
                    std::to_string(part.components.size()) +
                    " != clique number " + std::to_string(out.clique_omega));

  json w;
  w["order"] = n;
  w["z"] = zn;

  // H4: direct product of an abelian group and a non-abelian p-group
  // (covers non-abelian p-groups themselves, with trivial A).
  if (auto split = sylow_split(g)) {
    const FiniteGroup qg = subgroup_as_group(split->q, g.name() + "|q");
    if (!qg.is_abelian()) {
      const CentralizerPartition qpart = ac_partition(qg);
      if (qpart.is_ac) {
        out.type_tag = ACType::H4;
        out.predicted_omega = static_cast<int>(qpart.components.size());
        out.a_sub = split->a;
        out.q_sub = split->q;
        w["type"] = "H4";
        w["a_order"] = split->a.size();
        w["q_order"] = split->q.size();
        w["q_omega"] = out.predicted_omega;
        w["a_members"] = split->a.members();
        w["q_members"] = split->q.members();
      }
    }
  }

  // H1: non-nilpotent with an abelian normal subgroup of prime index.
  if (w.find("type") == w.end() && !nilpotency_class(g)) {
    const std::vector<Subgroup> normals = normal_subgroups(g, n);
    for (auto it = normals.rbegin(); it != normals.rend(); ++it) {
      const int index = n / it->size();
      if (prime_power_base(index) != index) continue;  // index must be prime
      if (!it->is_abelian()) continue;
      if (!std::all_of(z.members().begin(), z.members().end(),
                       [&](int x) { return it->contains(x); }))
        throw Error(ErrorKind::ValidationError,
                    g.name() + ": center escapes the abelian maximal subgroup");
      out.type_tag = ACType::H1;
      out.n_sub = *it;
      out.predicted_omega = it->size() / zn + 1;
      w["type"] = "H1";
      w["n_order"] = it->size();
      w["index"] = index;
      w["n_members"] = it->members();
      break;
    }
  }

  // H3 and the Frobenius shapes live in the central quotient.
  if (w.find("type") == w.end()) {
    const Quotient q = quotient(g, z);

    if (q.group.order() == 24) {
      auto sizes = conjugacy_classes(q.group).sizes;
      std::sort(sizes.begin(), sizes.end());
      if (sizes == std::vector<int>{1, 3, 6, 6, 8}) {
        out.type_tag = ACType::H3;
        out.predicted_omega = 13;
        w["type"] = "H3";
        w["central_quotient_order"] = 24;
        w["quotient_class_sizes"] = sizes;
      }
    }

    if (w.find("type") == w.end()) {
      const auto fs = frobenius_structure(q.group, q.group.order());
      if (!fs) unclassifiable(g, "central quotient is not a Frobenius group");

      std::vector<int> f_members, k_members;
      for (int x = 0; x < n; ++x) {
        if (fs->kernel.contains(q.projection[x])) f_members.push_back(x);
        if (fs->complement.contains(q.projection[x])) k_members.push_back(x);
      }
      const Subgroup f(g, f_members);
      const Subgroup k(g, k_members);
      out.f_sub = f;
      out.k_sub = k;
      w["f_order"] = f.size();
      w["k_order"] = k.size();
      w["f_members"] = f.members();
      w["k_members"] = k.members();

      if (f.is_abelian() && k.is_abelian()) {
        out.type_tag = ACType::H2;
        out.predicted_omega = f.size() / zn + 1;
        w["type"] = "H2";
      } else if (!f.is_abelian()) {
        const FiniteGroup fg = subgroup_as_group(f, g.name() + "|f");
        const Subgroup fg_center = center(fg);
        std::vector<int> zf;
        for (int i : fg_center.members()) zf.push_back(f.members()[i]);
        std::sort(zf.begin(), zf.end());
        if (zf != z.members())
          unclassifiable(g, "Z(F) differs from Z(G) under the Frobenius kernel");
        const int q_base = prime_power_base(f.size() / zn);
        if (q_base == 0)
          unclassifiable(g, "F/Z is not a prime power");

        H5Profile prof;
        prof.q = q_base;
        prof.kappa = valuation(f.size(), q_base);
        prof.b = f.size() / power_ll(q_base, prof.kappa);
        prof.omega = valuation(zn, q_base);
        if (zn != prof.b * power_ll(q_base, prof.omega))
          throw Error(ErrorKind::ValidationError,
                      g.name() + ": |Z| is not b*q^omega");

        bool kappa_nu_bound = true;
        for (int fx : f.members()) {
          if (z.contains(fx)) continue;
          const long long c = centralizer(g, fx).size();
          const int nu = valuation(c, q_base);
          if (c / power_ll(q_base, nu) != prof.b)
            unclassifiable(g, "noncentral kernel centralizer is not b*q^nu");
          if (nu < prof.omega || nu >= prof.kappa)
            throw Error(ErrorKind::ValidationError,
                        g.name() + ": centralizer exponent outside [omega, kappa)");
          if (std::find(prof.nu_list.begin(), prof.nu_list.end(), nu) ==
              prof.nu_list.end())
            prof.nu_list.push_back(nu);
          if (prof.kappa - nu > prof.omega) kappa_nu_bound = false;
        }
        std::sort(prof.nu_list.begin(), prof.nu_list.end());
        const long long qk = power_ll(q_base, prof.kappa);
        if (n % qk != 0 || (n / qk) % q_base == 0)
          throw Error(ErrorKind::ValidationError,
                      g.name() + ": |G| is not a*q^kappa with gcd(a,q)=1");
        prof.a = n / qk;

        const int f_omega =
            static_cast<int>(ac_partition(fg).components.size());
        out.type_tag = ACType::H5;
        out.h5 = prof;
        out.predicted_omega = f.size() / zn + f_omega;
        w["type"] = "H5";
        w["k_abelian"] = k.is_abelian();
        w["f_omega"] = f_omega;
        w["kappa_minus_nu_le_omega"] = kappa_nu_bound;
        w["profile"] = {{"q", prof.q},     {"kappa", prof.kappa},
                        {"omega", prof.omega}, {"nu", prof.nu_list},
                        {"a", prof.a},     {"b", prof.b}};
      } else {
        unclassifiable(g, "abelian Frobenius kernel with non-abelian complement");
      }
    }
  }

  if (out.predicted_omega != out.clique_omega)
    throw Error(ErrorKind::ValidationError,
                g.name() + ": predicted clique number " +
                    std::to_string(out.predicted_omega) + " != solver result " +
                    std::to_string(out.clique_omega));

  w["predicted_omega"] = out.predicted_omega;
  w["clique_omega"] = out.clique_omega;
  out.witness = std::move(w);
  return out;
}

}  // namespace ncg
