#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/catalog.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/structure.hpp"

namespace ncg {

namespace {

using nlohmann::json;

json sorted_class_sizes(const FiniteGroup& g) {
  auto sizes = conjugacy_classes(g).sizes;
  std::sort(sizes.begin(), sizes.end());
  return json(sizes);
}

json sorted_element_orders(const FiniteGroup& g) {
  auto orders = g.element_orders();
  std::sort(orders.begin(), orders.end());
  return json(orders);
}

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError,
              path + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void record_fail(const std::string& name, const std::string& msg) {
  throw Error(ErrorKind::ValidationError, "record '" + name + "': " + msg);
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& name,
                                         const char* field) {
  if (!j.is_array()) record_fail(name, std::string(field) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) record_fail(name, std::string(field) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) record_fail(name, std::string(field) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

FiniteGroup build_record(const CatalogRecord& rec, int order_cap) {
  FiniteGroup g = [&] {
    try {
      if (rec.kind == "table") return from_cayley_table(rec.table, rec.name);
      return from_permutation_generators(rec.degree, rec.gens, rec.name, order_cap);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ValidationError) throw;
      record_fail(rec.name, e.what());
    }
  }();
  if (g.order() != rec.order)
    record_fail(rec.name, "declared order " + std::to_string(rec.order) +
                              " but constructed order " + std::to_string(g.order()));
  if (!rec.invariants.is_null()) {
    const json actual = group_invariants(g);
    for (auto it = rec.invariants.begin(); it != rec.invariants.end(); ++it) {
      if (!actual.contains(it.key()))
        record_fail(rec.name, "unknown invariant '" + it.key() + "'");
      if (actual.at(it.key()) != it.value())
        record_fail(rec.name, "invariant '" + it.key() + "' mismatch: cached " +
                                  it.value().dump() + ", recomputed " +
                                  actual.at(it.key()).dump());
    }
  }
  return g;
}

}  // namespace

json group_invariants(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["z"] = static_cast<int>(center(g).size());
  j["class_sizes"] = sorted_class_sizes(g);
  j["elem_orders"] = sorted_element_orders(g);
  if (g.is_abelian())
    j["fingerprint"] = nullptr;
  else
    j["fingerprint"] = fingerprint_to_json(fingerprint(noncommuting_graph(g)));
  return j;
}

std::vector<FiniteGroup> read_catalog(const std::string& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open catalog '" + path + "'");

  std::vector<FiniteGroup> out;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      parse_fail(path, lineno, e.what());
    }
    if (!j.is_object()) parse_fail(path, lineno, "record is not a JSON object");
    for (const char* field : {"name", "kind", "order"})
      if (!j.contains(field))
        parse_fail(path, lineno, std::string("missing field '") + field + "'");
    CatalogRecord rec;
    if (!j["name"].is_string() || !j["kind"].is_string() || !j["order"].is_number_integer())
      parse_fail(path, lineno, "name/kind must be strings and order an integer");
    rec.name = j["name"].get<std::string>();
    rec.kind = j["kind"].get<std::string>();
    rec.order = j["order"].get<int>();
    if (rec.name.empty()) parse_fail(path, lineno, "empty record name");
    if (!seen.insert(rec.name).second)
      record_fail(rec.name, "duplicate record name");
    if (rec.kind == "table") {
      if (!j.contains("table")) parse_fail(path, lineno, "table record without 'table'");
      rec.table = int_matrix(j["table"], rec.name, "table");
    } else if (rec.kind == "perm") {
      if (!j.contains("degree") || !j.contains("gens"))
        parse_fail(path, lineno, "perm record needs 'degree' and 'gens'");
      if (!j["degree"].is_number_integer())
        parse_fail(path, lineno, "'degree' must be an integer");
      rec.degree = j["degree"].get<int>();
      rec.gens = int_matrix(j["gens"], rec.name, "gens");
    } else {
      parse_fail(path, lineno, "unknown kind '" + rec.kind + "'");
    }
    if (j.contains("invariants")) rec.invariants = j["invariants"];
    out.push_back(build_record(rec, order_cap));
  }
  return out;
}

void write_catalog(const std::vector<FiniteGroup>& groups, const std::string& path,
                   bool with_invariants) {
  std::vector<FiniteGroup> sorted = groups;
  std::sort(sorted.begin(), sorted.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.name() < b.name();
  });

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + tmp + "' for writing");
    for (const FiniteGroup& g : sorted) {
      json j;
      j["name"] = g.name();
      j["kind"] = "table";
      j["order"] = g.order();
      std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
      j["table"] = table;
      if (with_invariants) j["invariants"] = group_invariants(g);
      out << j.dump() << "\n";
    }
    if (!out.good()) throw Error(ErrorKind::IoError, "write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorKind::IoError, "cannot rename '" + tmp + "' to '" + path + "'");
}

DedupeResult dedupe(const std::vector<FiniteGroup>& groups) {
  DedupeResult res;
  res.kept = groups;
  std::map<std::string, std::vector<std::string>> buckets;
  for (const FiniteGroup& g : groups)
    buckets[group_invariants(g).dump()].push_back(g.name());
  for (auto& [key, names] : buckets) {
    if (names.size() < 2) continue;
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        res.suspected.emplace_back(names[i], names[j]);
  }
  std::sort(res.suspected.begin(), res.suspected.end());
  return res;
}

}  // namespace ncg
