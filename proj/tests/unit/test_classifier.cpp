#include <set>
#include <vector>

#include "doctest.h"
#include "nacent/classifier.hpp"
#include "nacent/corpus.hpp"
#include "nacent/errors.hpp"
#include "nacent/predicates.hpp"
#include "../oracles.hpp"

using namespace nacent;

namespace {

std::set<oracle::Set> as_sets(const std::vector<Subgroup>& hs) {
  std::set<oracle::Set> out;
  for (const auto& h : hs) {
    oracle::Set s(h.parent().order());
    for (Element x : h.elements()) s[x] = true;
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("cent_stats agrees with naive recomputation") {
  for (const char* spec : {"cyclic(1)", "cyclic(8)", "symmetric(3)", "symmetric(4)", "dicyclic(2)", "heisenberg(3)",
                           "alternating(5)", "direct_product(symmetric(3),dihedral(4))", "sl23"}) {
    CAPTURE(spec);
    const auto g = build(parse_spec(spec));
    const auto st = cent_stats(g);
    CHECK(as_sets(st.cent) == oracle::cent(g));
    std::size_t nonabelian = 0;
    for (const auto& c : oracle::cent(g)) nonabelian += !oracle::abelian(g, c);
    CHECK(st.nacent_count() == nonabelian);
    for (Element x = 0; x < g.order(); ++x) CHECK(st.cent[st.centralizer_of[x]] == centralizer(g, x));
    for (std::size_t i = 0; i < st.cent.size(); ++i) {
      CHECK(st.cent[i] == centralizer(g, st.witness[i]));
      for (Element y = 0; y < st.witness[i]; ++y) CHECK_FALSE(centralizer(g, y) == st.cent[i]);
    }
  }
}

TEST_CASE("small centralizer counts") {
  CHECK(cent_stats(symmetric(3)).cent_count() == 5);
  CHECK(cent_stats(dicyclic(2)).cent_count() == 4);
  CHECK(cent_stats(heisenberg(7)).cent_count() == 9);
  CHECK(cent_stats(cyclic(5)).cent_count() == 1);
}

TEST_CASE("categories") {
  CHECK(classify(cyclic(10)).category == Category::kAbelian);
  CHECK(classify(symmetric(3)).category == Category::kCA);
  CHECK(classify(dicyclic(2)).category == Category::kCA);
  CHECK(classify(alternating(5)).category == Category::kCA);
  CHECK(classify(symmetric(4)).category == Category::kManyNacent);
  CHECK(classify(symmetric(4)).nacent_count == 4);
  CHECK_FALSE(classify(symmetric(4)).which.has_value());
  CHECK(std::string(to_string(Category::kTwoNacent)) == "TwoNacent");
  CHECK(std::string(to_string(Case::kC)) == "C");
}

TEST_CASE("flagship classification") {
  const auto g = heisenberg_frobenius(7, 3);
  const auto cls = classify(g);
  CHECK(cls.category == Category::kTwoNacent);
  CHECK(cls.nacent_count == 2);
  REQUIRE(cls.which.has_value());
  CHECK(*cls.which == Case::kC);
  REQUIRE(cls.witness_a.has_value());
  CHECK(centralizer(g, *cls.witness_a).size() == 343);
  CHECK(cls.data.kernel_order == 343u);
  CHECK(cls.data.complement_order == 3u);
}

TEST_CASE("flagship consequences and counts") {
  const auto r = verify_group(heisenberg_frobenius(7, 3), "hf");
  CHECK(r.violations.empty());
  CHECK(r.order == 1029);
  CHECK(r.center_order == 1);
  CHECK(r.cent_count == 353);
  const auto& c = r.consequences;
  for (const auto& v : {c.a, c.b, c.c, c.d, c.e, c.f, c.normal_ca, c.ca_group}) CHECK(v == true);
  CHECK(c.cent_ca == 9u);
  CHECK(c.ca_mod_center == 343u);
  CHECK(c.frobenius_count == 353u);
  CHECK(c.g_mod_ca == 3u);
  CHECK(c.p_part_order == 343u);
  CHECK(c.p_part_prime == 7u);
  CHECK(r.partition.exists == true);
  CHECK(r.partition.components == 344);
  CHECK(r.partition.frobenius == true);
}

TEST_CASE("a two-nacent group with non-trivial center") {
  const auto g = build(parse_spec("direct_product(heisenberg_frobenius(7,3),cyclic(2))"));
  const auto r = verify_group(g);
  CHECK(r.violations.empty());
  CHECK(r.center_order == 2);
  CHECK(r.nacent_count == 2);
  CHECK(r.cent_count == 353);
  CHECK(r.classification.which == Case::kC);
  CHECK(r.consequences.abelian_part_order == 2u);
}

TEST_CASE("non two-nacent groups carry no consequences") {
  const auto r = verify_group(symmetric(4));
  CHECK(r.violations.empty());
  CHECK_FALSE(r.consequences.a.has_value());
  REQUIRE(r.iff.has_value());
  CHECK(r.iff->forward);
  CHECK(r.iff->converse);
  const auto ab = verify_group(cyclic(7));
  CHECK(ab.classification.category == Category::kAbelian);
  CHECK_FALSE(ab.partition.exists.has_value());
}

TEST_CASE("verify_iff and verify_consequences are consistent with verify_group") {
  const auto g = heisenberg_frobenius(7, 3);
  const auto full = verify_group(g);
  const auto iff = verify_iff(g);
  const auto cons = verify_consequences(g);
  CHECK(iff.iff->forward == full.iff->forward);
  CHECK(iff.iff->converse == full.iff->converse);
  CHECK(cons.consequences.a == full.consequences.a);
  CHECK(cons.consequences.cent_ca == full.consequences.cent_ca);
}
