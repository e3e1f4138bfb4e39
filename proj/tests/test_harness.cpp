#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ncg/catalog.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/harness.hpp"
#include "ncg/structure.hpp"

using ncg::ACType;
using ncg::CheckResult;
using ncg::CheckStatus;
using ncg::Error;
using ncg::ErrorKind;
using ncg::Family;
using ncg::FiniteGroup;

namespace {

FiniteGroup make(const char* spec) { return ncg::make_group(spec); }

}  // namespace

TEST_CASE("lemma2.5 applies exactly to AC-groups with p-group central quotient") {
  const CheckResult d4 = ncg::check_lemma_2_5(make("dihedral:4"));
  CHECK(d4.status == CheckStatus::pass);
  CHECK(d4.witness["p"] == 2);
  CHECK(d4.witness["omega"] == 3);
  CHECK(d4.witness["residue"] == 0);

  const CheckResult h3 = ncg::check_lemma_2_5(make("heisenberg:3"));
  CHECK(h3.status == CheckStatus::pass);
  CHECK(h3.witness["p"] == 3);
  CHECK(h3.witness["omega"] == 4);

  CHECK(ncg::check_lemma_2_5(make("dihedral:8")).witness["omega"] == 5);

  // G/Z has composite order for these
  CHECK(ncg::check_lemma_2_5(make("symmetric:3")).status == CheckStatus::not_applicable);
  CHECK(ncg::check_lemma_2_5(make("sl2:3")).status == CheckStatus::not_applicable);
  // not an AC-group
  CHECK(ncg::check_lemma_2_5(make("symmetric:4")).status == CheckStatus::not_applicable);
  // abelian
  CHECK(ncg::check_lemma_2_5(ncg::standard_family(Family::cyclic, 9)).status ==
        CheckStatus::not_applicable);
}

TEST_CASE("lemma2.1 accepts matched pairs and validates its certificate") {
  const FiniteGroup d4 = make("dihedral:4");
  const FiniteGroup q8 = make("dicyclic:2");
  const auto iso = ncg::are_isomorphic(ncg::noncommuting_graph(d4),
                                       ncg::noncommuting_graph(q8));
  REQUIRE(iso.has_value());
  const CheckResult r = ncg::check_lemma_2_1(d4, q8, *iso);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.subjects == std::vector<std::string>{"dihedral:4", "dicyclic:2"});
  CHECK(r.witness["part2_applied"] == true);  // |C|^2 = 16 >= |G||Z| = 16

  ncg::IsoMap identity;
  identity.forward = {0, 1, 2, 3, 4, 5};
  const CheckResult same = ncg::check_lemma_2_1(d4, d4, identity);
  CHECK(same.status == CheckStatus::pass);

  ncg::IsoMap junk;
  junk.forward = {0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(ncg::check_lemma_2_1(d4, q8, junk), Error);
}

TEST_CASE("lemma2.4 bounds the partner center through the p-group profile") {
  const CheckResult r = ncg::check_lemma_2_4(make("dihedral:4"), make("dicyclic:2"));
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["bound"] == 2);
  CHECK(r.witness["partner_z"] == 2);

  const ncg::PGroupProfile prof = ncg::p_group_profile(make("dihedral:4"));
  CHECK(ncg::compatible_center_orders(prof) == std::vector<long long>{1, 2});

  const ncg::PGroupProfile d16 = ncg::p_group_profile(make("dihedral:8"));
  // bound = 2^1 * (2^1 - 1) = 2
  CHECK(ncg::compatible_center_orders(d16) == std::vector<long long>{1, 2});

  CHECK(ncg::check_lemma_2_4(make("symmetric:3"), make("dihedral:4")).status ==
        CheckStatus::not_applicable);
}

TEST_CASE("lemma2.6 product decomposition for abelian subgroups") {
  const FiniteGroup d4 = make("dihedral:4");
  const CheckResult r = ncg::check_lemma_2_6(d4, ncg::subgroup_closure(d4, {1}), 4);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.witness["k_order"] == 2);

  // hypothesis failure exists: some C, a in S4 with C*C^a != C^a*C
  const FiniteGroup s4 = make("symmetric:4");
  bool found_inapplicable = false;
  for (int x = 1; x < s4.order() && !found_inapplicable; ++x) {
    const ncg::Subgroup c = ncg::subgroup_closure(s4, {x});
    for (int a = 0; a < s4.order(); ++a) {
      const CheckResult t = ncg::check_lemma_2_6(s4, c, a);
      CHECK(t.status != CheckStatus::fail);
      if (t.status == CheckStatus::not_applicable) {
        found_inapplicable = true;
        break;
      }
    }
  }
  CHECK(found_inapplicable);

  for (const char* spec : {"symmetric:3", "dihedral:4", "dicyclic:2", "dihedral:6",
                           "alternating:4", "f20"}) {
    const CheckResult sweep = ncg::check_lemma_2_6_sweep(make(spec));
    CHECK(sweep.status == CheckStatus::pass);
    CHECK(sweep.witness["applicable"].get<long long>() > 0);
  }
}

TEST_CASE("prop2.7 singles out one normal component of maximal order") {
  const CheckResult d16 = ncg::check_prop_2_7(make("dihedral:8"));
  CHECK(d16.status == CheckStatus::pass);
  CHECK(d16.witness["class"] == 3);
  CHECK(d16.witness["normal_component_sizes"] == std::vector<int>{8});

  CHECK(ncg::check_prop_2_7(make("dicyclic:4")).status == CheckStatus::pass);
  CHECK(ncg::check_prop_2_7(make("dihedral:16")).status == CheckStatus::pass);
  CHECK(ncg::check_prop_2_7(make("dicyclic:8")).status == CheckStatus::pass);

  // class 2: hypothesis not met
  CHECK(ncg::check_prop_2_7(make("dihedral:4")).status == CheckStatus::not_applicable);
  CHECK(ncg::check_prop_2_7(make("heisenberg:3")).status == CheckStatus::not_applicable);
  // not nilpotent
  CHECK(ncg::check_prop_2_7(make("symmetric:3")).status == CheckStatus::not_applicable);
}

TEST_CASE("lemma2.8 class size exponents in class-2 p-groups") {
  const CheckResult d4 = ncg::check_lemma_2_8(make("dihedral:4"));
  CHECK(d4.status == CheckStatus::pass);
  CHECK(d4.witness["a_list"] == std::vector<int>{1});

  CHECK(ncg::check_lemma_2_8(make("heisenberg:3")).status == CheckStatus::pass);
  CHECK(ncg::check_lemma_2_8(make("dicyclic:2")).status == CheckStatus::pass);

  // class 3 escapes the hypothesis, and the bound really fails there:
  // dihedral:8 has a class of size 4 = 2^2 while |Z| = 2^1.
  const CheckResult d16 = ncg::check_lemma_2_8(make("dihedral:8"));
  CHECK(d16.status == CheckStatus::not_applicable);
  const ncg::PGroupProfile prof = ncg::p_group_profile(make("dihedral:8"));
  CHECK(prof.a_list.back() == 2);
  CHECK(prof.r == 1);

  CHECK(ncg::check_lemma_2_8(make("symmetric:3")).status == CheckStatus::not_applicable);
}

TEST_CASE("frobenius check verifies kernels, complements and sub-structures") {
  const CheckResult s3 = ncg::check_frobenius(make("symmetric:3"));
  CHECK(s3.status == CheckStatus::pass);
  CHECK(s3.witness["kernel_order"] == 3);
  CHECK(s3.witness["complement_order"] == 2);
  CHECK(s3.witness["f1_orders"] == std::vector<int>{3});

  const CheckResult a4 = ncg::check_frobenius(make("alternating:4"));
  CHECK(a4.status == CheckStatus::pass);
  CHECK(a4.witness["kernel_order"] == 4);
  CHECK(a4.witness["f1_orders"] == std::vector<int>{4});

  const CheckResult f20 = ncg::check_frobenius(make("f20"));
  CHECK(f20.status == CheckStatus::pass);
  CHECK(f20.witness["kernel_order"] == 5);
  CHECK(f20.witness["complement_order"] == 4);

  const CheckResult gd18 = ncg::check_frobenius(make("gd18"));
  CHECK(gd18.status == CheckStatus::pass);
  CHECK(gd18.witness["kernel_order"] == 9);
  CHECK(gd18.witness["f1_orders"] == std::vector<int>{3, 3, 3, 3, 9});

  CHECK(ncg::check_frobenius(make("dihedral:4")).status == CheckStatus::not_applicable);
  CHECK(ncg::check_frobenius(make("symmetric:4")).status == CheckStatus::not_applicable);
  CHECK(ncg::check_frobenius(make("dihedral:6")).status == CheckStatus::not_applicable);
}

TEST_CASE("classifier types the standard witnesses") {
  const ncg::ACClass s3 = ncg::classify_ac(make("symmetric:3"));
  CHECK(s3.type_tag == ACType::H1);
  CHECK(s3.predicted_omega == 4);
  CHECK(s3.clique_omega == 4);
  REQUIRE(s3.n_sub.has_value());
  CHECK(s3.n_sub->size() == 3);

  const ncg::ACClass f20 = ncg::classify_ac(make("f20"));
  CHECK(f20.type_tag == ACType::H2);
  CHECK(f20.predicted_omega == 6);
  CHECK(f20.f_sub->size() == 5);
  CHECK(f20.k_sub->size() == 4);

  const ncg::ACClass gl = ncg::classify_ac(make("gl2:3"));
  CHECK(gl.type_tag == ACType::H3);
  CHECK(gl.predicted_omega == 13);

  const ncg::ACClass c3d4 = ncg::classify_ac(make("c3xd4"));
  CHECK(c3d4.type_tag == ACType::H4);
  CHECK(c3d4.predicted_omega == 3);
  CHECK(c3d4.a_sub->size() == 3);
  CHECK(c3d4.q_sub->size() == 8);

  const ncg::ACClass d4 = ncg::classify_ac(make("dihedral:4"));
  CHECK(d4.type_tag == ACType::H4);
  CHECK(d4.a_sub->size() == 1);
  CHECK(d4.q_sub->size() == 8);

  const ncg::ACClass gd18 = ncg::classify_ac(make("gd18"));
  CHECK(gd18.type_tag == ACType::H1);
  CHECK(gd18.predicted_omega == 10);

  const ncg::ACClass a4 = ncg::classify_ac(make("alternating:4"));
  CHECK(a4.type_tag == ACType::H1);
  CHECK(a4.predicted_omega == 5);
}

TEST_CASE("classifier extracts the H5 arithmetic profile") {
  const ncg::ACClass sl = ncg::classify_ac(make("sl2:3"));
  CHECK(sl.type_tag == ACType::H5);
  CHECK(sl.predicted_omega == 7);
  CHECK(sl.clique_omega == 7);
  REQUIRE(sl.h5.has_value());
  CHECK(sl.h5->q == 2);
  CHECK(sl.h5->kappa == 3);
  CHECK(sl.h5->omega == 1);
  CHECK(sl.h5->nu_list == std::vector<int>{2});
  CHECK(sl.h5->a == 3);
  CHECK(sl.h5->b == 1);
  CHECK(sl.f_sub->size() == 8);
  CHECK(sl.k_sub->size() == 6);
  CHECK(sl.witness["k_abelian"] == true);
  CHECK(sl.witness["kappa_minus_nu_le_omega"] == true);
}

TEST_CASE("classifier rejects out-of-scope groups") {
  try {
    ncg::classify_ac(ncg::standard_family(Family::cyclic, 6));
    FAIL("expected AbelianGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AbelianGroup);
  }
  try {
    ncg::classify_ac(make("alternating:5"));
    FAIL("expected NotSolvable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSolvable);
  }
  try {
    ncg::classify_ac(make("symmetric:4"));
    FAIL("expected NotACGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACGroup);
  }
}

TEST_CASE("every solvable AC-group in the catalog gets a type") {
  const std::map<std::string, ACType> expected = {
      {"alternating:4", ACType::H1}, {"c2xd4", ACType::H4},
      {"c2xq8", ACType::H4},         {"c3xd4", ACType::H4},
      {"c3xq8", ACType::H4},         {"f20", ACType::H2},
      {"gd18", ACType::H1},          {"gl2:3", ACType::H3},
      {"heisenberg:3", ACType::H4},  {"sl2:3", ACType::H5},
      {"symmetric:3", ACType::H1},
  };
  for (const FiniteGroup& g : ncg::builtin_catalog(64)) {
    ncg::ACType got;
    try {
      got = ncg::classify_ac(g).type_tag;
    } catch (const Error& e) {
      const bool out_of_scope = e.kind() == ErrorKind::NotSolvable ||
                                e.kind() == ErrorKind::NotACGroup;
      if (!out_of_scope) {
        CAPTURE(g.name());
        CHECK(out_of_scope);
      }
      continue;
    }
    const auto it = expected.find(g.name());
    if (it != expected.end()) {
      CAPTURE(g.name());
      CHECK(got == it->second);
    }
    if (g.name().rfind("dihedral:", 0) == 0) {
      const int n = std::stoi(g.name().substr(9));
      CHECK(got == ((n & (n - 1)) == 0 ? ACType::H4 : ACType::H1));
    }
    if (g.name().rfind("dicyclic:", 0) == 0) {
      const int m = std::stoi(g.name().substr(9));
      CHECK(got == ((m & (m - 1)) == 0 ? ACType::H4 : ACType::H1));
    }
  }
}

TEST_CASE("the order-24 class multiset used by the H3 test is unique") {
  // Among all order-24 groups in the catalog, only symmetric:4 has class
  // sizes {1,3,6,6,8}, and it is exactly the central quotient of gl2:3.
  const std::vector<int> sig = {1, 3, 6, 6, 8};
  for (const FiniteGroup& g : ncg::builtin_catalog(24)) {
    if (g.order() != 24) continue;
    auto sizes = ncg::conjugacy_classes(g).sizes;
    std::sort(sizes.begin(), sizes.end());
    CAPTURE(g.name());
    CHECK((sizes == sig) == (g.name() == "symmetric:4"));
  }
  const FiniteGroup gl = make("gl2:3");
  const ncg::Quotient q = ncg::quotient(gl, ncg::center(gl));
  auto sizes = ncg::conjugacy_classes(q.group).sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == sig);
}

TEST_CASE("pair scan finds the dihedral/dicyclic collisions and no violations") {
  const std::vector<FiniteGroup> catalog = ncg::builtin_catalog(24);
  ncg::ScanOptions opts;
  const ncg::PairReport report = ncg::scan_pairs(catalog, opts);

  CHECK(report.isomorphic_pairs == 9);
  CHECK(report.theorem_violations == 0);
  CHECK(report.conjecture_violations == 0);

  std::vector<std::vector<std::string>> pair_subjects;
  int lemma21 = 0, lemma24 = 0;
  for (const CheckResult& r : report.rows) {
    CHECK(r.status == CheckStatus::pass);
    if (r.check_id == "scan-pairs") pair_subjects.push_back(r.subjects);
    if (r.check_id == "lemma2.1") ++lemma21;
    if (r.check_id == "lemma2.4") ++lemma24;
  }
  CHECK(lemma21 == 3);  // dihedral:4/dicyclic:2, dihedral:8/dicyclic:4, c2xd4/c2xq8
  CHECK(lemma24 == 3);

  std::sort(pair_subjects.begin(), pair_subjects.end());
  const std::vector<std::vector<std::string>> expected = {
      {"c2xd4", "c2xq8"},
      {"c3xd4", "c3xq8"},
      {"dicyclic:2", "dihedral:4"},
      {"dicyclic:3", "dihedral:6"},
      {"dicyclic:4", "dihedral:8"},
      {"dicyclic:5", "dihedral:10"},
      {"dicyclic:6", "dihedral:12"},
      {"dihedral:3", "symmetric:3"},
      {"dihedral:9", "gd18"},
  };
  CHECK(pair_subjects == expected);
}

TEST_CASE("theorem mode restricts the scan to pairs with a p-group member") {
  ncg::ScanOptions opts;
  opts.theorem_mode = true;
  const ncg::PairReport report = ncg::scan_pairs(ncg::builtin_catalog(24), opts);
  int pair_rows = 0;
  for (const CheckResult& r : report.rows) {
    CHECK(r.status == CheckStatus::pass);
    if (r.check_id == "theorem1.2") ++pair_rows;
  }
  CHECK(pair_rows == 3);
  CHECK(report.theorem_violations == 0);
}

TEST_CASE("reports are deterministic across thread counts") {
  const std::vector<FiniteGroup> catalog = ncg::builtin_catalog(32);
  ncg::ScanOptions serial;
  serial.jobs = 1;
  ncg::ScanOptions parallel;
  parallel.jobs = 8;
  const std::string a = ncg::render_report(ncg::scan_pairs(catalog, serial).rows);
  const std::string b = ncg::render_report(ncg::scan_pairs(catalog, parallel).rows);
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("report rendering sorts rows and appends a summary") {
  CheckResult r1;
  r1.check_id = "lemma2.5";
  r1.subjects = {"zzz"};
  r1.status = CheckStatus::pass;
  r1.witness = {{"p", 2}};
  CheckResult r2;
  r2.check_id = "lemma2.8";
  r2.subjects = {"aaa"};
  r2.status = CheckStatus::fail;
  r2.witness = {{"p", 3}};
  CheckResult r3;
  r3.check_id = "lemma2.5";
  r3.subjects = {"aaa"};
  r3.status = CheckStatus::not_applicable;
  r3.witness = {{"reason", "abelian"}};

  const std::string text = ncg::render_report({r1, r2, r3});
  const std::string expected =
      "{\"check\":\"lemma2.5\",\"status\":\"not_applicable\",\"subjects\":[\"aaa\"],"
      "\"witness\":{\"reason\":\"abelian\"}}\n"
      "{\"check\":\"lemma2.8\",\"status\":\"fail\",\"subjects\":[\"aaa\"],"
      "\"witness\":{\"p\":3}}\n"
      "{\"check\":\"lemma2.5\",\"status\":\"pass\",\"subjects\":[\"zzz\"],"
      "\"witness\":{\"p\":2}}\n"
      "{\"summary\":{\"fail\":1,\"not_applicable\":1,\"pass\":1}}\n";
  CHECK(text == expected);

  // every line parses back as JSON
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    CHECK(nlohmann::json::parse(text.substr(start, end - start)).is_object());
    start = end + 1;
  }
}
