#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/structure.hpp"

namespace ncg {

enum class CheckStatus { pass, fail, not_applicable };

const char* check_status_name(CheckStatus s);

/// One report row. `witness` carries enough data to re-verify the
/// verdict by hand (orders, subgroup members, offending elements, ...).
struct CheckResult {
  std::string check_id;
  std::vector<std::string> subjects;
  CheckStatus status = CheckStatus::not_applicable;
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

/// lemma2.1: for a graph isomorphism phi between the non-commuting
/// graphs of g and h, every vertex x satisfies
///   |C_H(phi(x))| divides (|x^G| - 1) * (|Z(H)| - |Z(G)|),
/// and if |Z(g)| >= |Z(h)| and some vertex has |C_G(x)|^2 >= |G||Z(G)|
/// then |G| = |H|. Throws InvalidIso if `iso` is not an isomorphism.
CheckResult check_lemma_2_1(const FiniteGroup& g, const FiniteGroup& h, const IsoMap& iso);

/// All center orders |Z(H)| compatible with lemma2.4 for a partner of a
/// p-group with the given profile: the divisors of p^r * (p^u - 1).
std::vector<long long> compatible_center_orders(const PGroupProfile& profile);

/// lemma2.4: if the partner's non-commuting graph is isomorphic to the
/// p-group's, then |Z(partner)| divides p^r * (p^u - 1).
CheckResult check_lemma_2_4(const FiniteGroup& p_group, const FiniteGroup& partner);

/// lemma2.5: for an AC-group with G/Z(G) a p-group, the clique number
/// satisfies omega = 1 (mod p). The centralizer-partition count is
/// cross-checked against the branch-and-bound clique solver.
CheckResult check_lemma_2_5(const FiniteGroup& g, int clique_cap = 200);

/// lemma2.6: for an abelian subgroup C and element a with C*C^a = C^a*C,
/// that product set equals C * [C,a]. Reported not_applicable when the
/// product sets differ (hypothesis fails).
CheckResult check_lemma_2_6(const FiniteGroup& g, const Subgroup& c, int a);

/// Exhaustive lemma2.6 sweep: every abelian subgroup generated by one or
/// two elements, against every a in G.
CheckResult check_lemma_2_6_sweep(const FiniteGroup& g);

/// prop2.7: in an AC-group of nilpotency class > 2, exactly one member
/// of the centralizer partition is normal, and it has maximal order.
CheckResult check_prop_2_7(const FiniteGroup& g);

/// lemma2.8: in a non-abelian p-group of class 2, every conjugacy class
/// size p^a satisfies a <= r where |Z| = p^r.
CheckResult check_lemma_2_8(const FiniteGroup& g);

/// frobenius: if G has a Frobenius structure (F, K), then |K| divides
/// |F| - 1, and for every nontrivial normal subgroup F1 of G inside F,
/// the product K*F1 is again a Frobenius group with kernel F1.
CheckResult check_frobenius(const FiniteGroup& g, int order_cap = 512);

/// The five shapes of a solvable non-abelian AC-group.
enum class ACType { H1, H2, H3, H4, H5 };

const char* ac_type_name(ACType t);

/// Arithmetic profile of an H5 group: |F| = b * q^kappa with gcd(b,q)=1,
/// |Z| = b * q^omega, |G| = a * q^kappa, noncentral f in F have
/// |C(f)| = b * q^nu for nu in nu_list.
struct H5Profile {
  int q = 0;
  int kappa = 0;
  int omega = 0;
  std::vector<int> nu_list;
  long long a = 0;
  long long b = 0;
};

struct ACClass {
  ACType type_tag = ACType::H1;
  int predicted_omega = 0;
  int clique_omega = 0;
  std::optional<Subgroup> n_sub;  // H1: abelian normal of prime index
  std::optional<Subgroup> f_sub;  // H2/H5: preimage of the Frobenius kernel
  std::optional<Subgroup> k_sub;  // H2/H5: preimage of the complement
  std::optional<Subgroup> a_sub;  // H4: abelian direct factor
  std::optional<Subgroup> q_sub;  // H4: prime-power direct factor
  std::optional<H5Profile> h5;
  nlohmann::json witness;
};

/// Decides which of H1..H5 a solvable non-abelian AC-group is, computes
/// the predicted clique number for that shape, and asserts it against
/// the clique solver. Throws AbelianGroup / NotSolvable / NotACGroup
/// when g is out of scope and Unclassifiable when no shape matches.
ACClass classify_ac(const FiniteGroup& g, int clique_cap = 200);

struct ScanOptions {
  int clique_cap = 200;
  int iso_cap = 2000;
  int jobs = 1;
  /// Restrict pair rows to pairs with a prime-power-order member and
  /// label them theorem1.2 instead of scan-pairs.
  bool theorem_mode = false;
};

struct PairReport {
  std::vector<CheckResult> rows;
  int isomorphic_pairs = 0;
  int theorem_violations = 0;
  int conjecture_violations = 0;
};

/// All-pairs graph comparison over a catalog: buckets by fingerprint,
/// decides isomorphism inside buckets, flags THEOREM-VIOLATION (order
/// mismatch with a p-group member) and CONJECTURE-VIOLATION (order
/// mismatch in general), and runs lemma2.1 / lemma2.4 on every
/// isomorphic pair with a p-group member. Pairs skipped by the iso cap
/// get a not_applicable row.
PairReport scan_pairs(const std::vector<FiniteGroup>& groups, const ScanOptions& opts = {});

/// Deterministic JSONL rendering: rows sorted by subjects then check id,
/// one object per line, then a summary line with per-status counts.
std::string render_report(const std::vector<CheckResult>& rows);

}  // namespace ncg
