#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ncg/catalog.hpp"
#include "ncg/errors.hpp"
#include "ncg/group.hpp"
#include "ncg/harness.hpp"
#include "ncg/structure.hpp"

using nlohmann::json;
using ncg::Error;
using ncg::ErrorKind;
using ncg::FiniteGroup;

namespace {

std::filesystem::path tmp_file(const char* tag) {
  return std::filesystem::temp_directory_path() /
         (std::string("ncg_test_") + tag + ".jsonl");
}

struct TmpFile {
  std::filesystem::path path;
  explicit TmpFile(const char* tag) : path(tmp_file(tag)) {}
  ~TmpFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  void write(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
};

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

std::string record_line(const FiniteGroup& g, json invariants = nullptr) {
  json j;
  j["name"] = g.name();
  j["kind"] = "table";
  j["order"] = g.order();
  j["table"] = table_of(g);
  if (!invariants.is_null()) j["invariants"] = invariants;
  return j.dump() + "\n";
}

}  // namespace

TEST_CASE("group invariants capture order, center, classes and fingerprint") {
  const json inv = ncg::group_invariants(ncg::make_group("dihedral:4"));
  CHECK(inv["order"] == 8);
  CHECK(inv["z"] == 2);
  CHECK(inv["class_sizes"] == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(inv["elem_orders"] == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK(!inv["fingerprint"].is_null());
  CHECK(inv["fingerprint"]["vertices"] == 6);

  const json ab = ncg::group_invariants(ncg::standard_family(ncg::Family::cyclic, 6));
  CHECK(ab["fingerprint"].is_null());
}

TEST_CASE("catalog write/read roundtrip preserves multiplication tables") {
  const std::vector<FiniteGroup> groups = {
      ncg::make_group("symmetric:3"), ncg::make_group("dihedral:4"),
      ncg::make_group("dicyclic:2"), ncg::make_group("heisenberg:3")};
  const TmpFile f("roundtrip");
  ncg::write_catalog(groups, f.path.string());

  const std::vector<FiniteGroup> back = ncg::read_catalog(f.path.string());
  REQUIRE(back.size() == 4);
  // file is sorted by name
  CHECK(back[0].name() == "dicyclic:2");
  CHECK(back[1].name() == "dihedral:4");
  CHECK(back[2].name() == "heisenberg:3");
  CHECK(back[3].name() == "symmetric:3");
  for (const FiniteGroup& g : groups) {
    const auto it = std::find_if(back.begin(), back.end(), [&](const FiniteGroup& h) {
      return h.name() == g.name();
    });
    REQUIRE(it != back.end());
    CHECK(table_of(*it) == table_of(g));
  }

  // every line is one JSON record with cached invariants
  std::ifstream in(f.path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    CHECK(j["kind"] == "table");
    CHECK(j.contains("invariants"));
    ++lines;
  }
  CHECK(lines == 4);
}

TEST_CASE("reader reports the offending line and record") {
  const std::string c4 =
      record_line(ncg::standard_family(ncg::Family::cyclic, 4));

  {
    const TmpFile f("badjson");
    f.write(c4 + "this is not json\n");
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
  }
  {
    const TmpFile f("missing");
    f.write("{\"kind\":\"table\",\"order\":4}\n");
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(std::string(e.what()).find("name") != std::string::npos);
    }
  }
  {
    const TmpFile f("kind");
    f.write("{\"name\":\"x\",\"kind\":\"magic\",\"order\":2,\"table\":[[0]]}\n");
    CHECK_THROWS_AS(ncg::read_catalog(f.path.string()), Error);
  }
  {
    const TmpFile f("dup");
    f.write(c4 + c4);
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
}

TEST_CASE("reader re-verifies declared orders and cached invariants") {
  const FiniteGroup d4 = ncg::make_group("dihedral:4");
  {
    json j;
    j["name"] = "d4bad";
    j["kind"] = "table";
    j["order"] = 9;
    j["table"] = table_of(d4);
    const TmpFile f("order");
    f.write(j.dump() + "\n");
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("d4bad") != std::string::npos);
    }
  }
  {
    json tampered = ncg::group_invariants(d4);
    tampered["z"] = 4;
    FiniteGroup copy = ncg::from_cayley_table(table_of(d4), "d4tampered");
    const TmpFile f("tamper");
    f.write(record_line(copy, tampered));
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("'z' mismatch") != std::string::npos);
    }
  }
  {
    // generator is not a bijection
    const TmpFile f("badperm");
    f.write("{\"name\":\"p\",\"kind\":\"perm\",\"order\":2,\"degree\":3,"
            "\"gens\":[[0,0,1]]}\n");
    try {
      ncg::read_catalog(f.path.string());
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("record 'p'") != std::string::npos);
    }
  }
  {
    // broken Cayley table: row 1 repeats an entry
    json j;
    j["name"] = "latin";
    j["kind"] = "table";
    j["order"] = 2;
    j["table"] = std::vector<std::vector<int>>{{0, 1}, {1, 1}};
    const TmpFile f("latin");
    f.write(j.dump() + "\n");
    CHECK_THROWS_AS(ncg::read_catalog(f.path.string()), Error);
  }
}

TEST_CASE("ingesting the semidihedral group from the data directory") {
  const std::string path = std::string(NCG_DATA_DIR) + "/sd16.jsonl";
  const std::vector<FiniteGroup> groups = ncg::read_catalog(path);
  REQUIRE(groups.size() == 1);
  const FiniteGroup& sd = groups[0];
  CHECK(sd.name() == "sd16");
  CHECK(sd.order() == 16);
  CHECK(ncg::nilpotency_class(sd) == 3);

  const ncg::PGroupProfile prof = ncg::p_group_profile(sd);
  CHECK(prof.p == 2);
  CHECK(prof.n == 4);
  CHECK(prof.r == 1);
  CHECK(prof.a_list == std::vector<int>{1, 2});
  CHECK(prof.u == 1);

  CHECK(ncg::check_prop_2_7(sd).status == ncg::CheckStatus::pass);
  const ncg::ACClass cls = ncg::classify_ac(sd);
  CHECK(cls.type_tag == ncg::ACType::H4);
  CHECK(cls.clique_omega == 5);

  // the closure cap is enforced while rebuilding perm records
  try {
    ncg::read_catalog(path, 8);
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(std::string(e.what()).find("sd16") != std::string::npos);
  }
}

TEST_CASE("ingested groups join the scan and pair with the builtins") {
  std::vector<FiniteGroup> groups = ncg::builtin_catalog(16);
  groups.push_back(ncg::read_catalog(std::string(NCG_DATA_DIR) + "/sd16.jsonl")[0]);
  const ncg::PairReport report = ncg::scan_pairs(groups);

  CHECK(report.isomorphic_pairs == 7);
  CHECK(report.theorem_violations == 0);
  CHECK(report.conjecture_violations == 0);

  std::vector<std::vector<std::string>> sd_pairs;
  int lemma21 = 0;
  for (const ncg::CheckResult& r : report.rows) {
    CHECK(r.status == ncg::CheckStatus::pass);
    if (r.check_id == "lemma2.1") ++lemma21;
    if (r.check_id == "scan-pairs" &&
        (r.subjects[0] == "sd16" || r.subjects[1] == "sd16"))
      sd_pairs.push_back(r.subjects);
  }
  CHECK(lemma21 == 5);
  std::sort(sd_pairs.begin(), sd_pairs.end());
  const std::vector<std::vector<std::string>> expected = {
      {"dicyclic:4", "sd16"}, {"dihedral:8", "sd16"}};
  CHECK(sd_pairs == expected);
}

TEST_CASE("dedupe flags same-invariant pairs without dropping anything") {
  const FiniteGroup q8 = ncg::make_group("dicyclic:2");
  const FiniteGroup q8copy = ncg::from_cayley_table(table_of(q8), "q8copy");
  const std::vector<FiniteGroup> groups = {ncg::make_group("dihedral:4"), q8,
                                           q8copy};
  const ncg::DedupeResult res = ncg::dedupe(groups);
  CHECK(res.kept.size() == 3);
  REQUIRE(res.suspected.size() == 1);
  CHECK(res.suspected[0] == std::pair<std::string, std::string>{"dicyclic:2", "q8copy"});
}
