#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncg/group.hpp"

namespace ncg {

/// One catalog line as parsed from JSONL; `kind` is "table" or "perm".
struct CatalogRecord {
  std::string name;
  std::string kind;
  int order = 0;
  std::vector<std::vector<int>> table;  // kind == "table"
  int degree = 0;                       // kind == "perm"
  std::vector<std::vector<int>> gens;
  nlohmann::json invariants;            // optional, re-verified on read
};

/// Structural invariants cached in catalog records: order, center order,
/// sorted class sizes, sorted element orders, and (for non-abelian
/// groups) the non-commuting graph fingerprint.
nlohmann::json group_invariants(const FiniteGroup& g);

/// Reads a JSONL catalog, constructs every group through the normal
/// validating constructors, and re-verifies any cached invariants.
/// ParseError carries the line number, ValidationError the record name.
std::vector<FiniteGroup> read_catalog(const std::string& path,
                                      int order_cap = kDefaultOrderCap);

/// Writes records sorted by name, one JSON object per line, atomically
/// (temp file + rename). Groups serialize as explicit tables.
void write_catalog(const std::vector<FiniteGroup>& groups, const std::string& path,
                   bool with_invariants = true);

/// Flags suspected duplicates (identical invariant bundles) without
/// dropping anything.
struct DedupeResult {
  std::vector<FiniteGroup> kept;
  std::vector<std::pair<std::string, std::string>> suspected;
};

DedupeResult dedupe(const std::vector<FiniteGroup>& groups);

/// Group addressing used by the CLI and the built-in catalog:
/// "family:param" (cyclic, dihedral, dicyclic, symmetric, alternating,
/// heisenberg, gl2, sl2) or a named witness (f20, gd18, c2xd4, c2xq8,
/// c3xd4, c3xq8).
FiniteGroup make_group(const std::string& spec);

/// Family keywords accepted by --families (plus "all"/"builtin").
const std::vector<std::string>& builtin_family_keywords();

/// Every non-abelian built-in group of order <= max_order from the
/// requested families (empty list = all), sorted by name.
std::vector<FiniteGroup> builtin_catalog(int max_order,
                                         const std::vector<std::string>& families = {});

}  // namespace ncg
