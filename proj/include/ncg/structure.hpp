#pragma once

#include <optional>
#include <vector>

#include "ncg/group.hpp"

namespace ncg {

/// Conjugacy classes, each sorted ascending, listed in order of smallest
/// member (so the identity class comes first). Construction cross-checks
/// |class| * |centralizer| = |G| for every element and that the size-1
/// classes are exactly the center.
struct ClassData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;   // element -> class index
  std::vector<int> sizes;      // aligned with `classes`
  int center_size = 0;
};

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int x);

/// Centralizer of x inside a subgroup H of g.
std::vector<int> centralizer_in(const FiniteGroup& g, const std::vector<int>& h_members, int x);

ClassData conjugacy_classes(const FiniteGroup& g);

Subgroup derived_subgroup(const FiniteGroup& g);

/// G >= G' >= G'' >= ... down to the point where it stabilizes.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);

/// {0} = Z_0 <= Z_1 <= ... until the series stabilizes (at G iff nilpotent).
std::vector<Subgroup> upper_central_series(const FiniteGroup& g);

/// Nilpotency class, or nullopt when the upper central series stalls
/// below the whole group.
std::optional<int> nilpotency_class(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// All normal subgroups (including the trivial one and G), found by
/// closing unions of conjugacy classes. Sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int order_cap = 512);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element -> coset index
};

/// G/N with cosets indexed by smallest member, so the coset of the
/// identity is index 0. The projection is verified to be a homomorphism.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// [C, a] = closure of { c^-1 * (a^-1 c a) : c in C }.
Subgroup commutator_with_element(const Subgroup& c, int a);

/// The distinct centralizers of non-central elements. For an AC-group
/// these partition G - Z(G) after removing the center from each, and the
/// structure is verified: pairwise intersections equal the center, the
/// union covers G, every component is abelian, and the counting identity
/// |G| = -(w-1)|Z| + sum of component orders holds (w = component count).
struct CentralizerPartition {
  std::vector<Subgroup> components;
  bool is_ac = false;
};

CentralizerPartition ac_partition(const FiniteGroup& g);

bool is_ac_group(const FiniteGroup& g);

struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
};

/// Looks for a proper nontrivial normal subgroup N with every centralizer
/// of a nonidentity member inside N, then for a complement. A qualifying
/// kernel with no complement is an internal contradiction and raises
/// KernelFoundNoComplement.
std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      int order_cap = 512);

/// Numeric profile of a non-abelian p-group: |G| = p^n, |Z| = p^r, the
/// distinct nontrivial class sizes p^a1 < ... < p^ak, and
/// u = gcd(a1, ..., ak, n - r).
struct PGroupProfile {
  int p = 0;
  int n = 0;
  int r = 0;
  std::vector<int> a_list;
  int u = 0;
};

PGroupProfile p_group_profile(const FiniteGroup& g);

/// The subgroup as a standalone group: members reindexed in ascending
/// order (the identity stays at 0), table induced from the parent.
FiniteGroup subgroup_as_group(const Subgroup& s, std::string name = "");

}  // namespace ncg
