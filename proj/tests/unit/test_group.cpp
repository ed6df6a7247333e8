#include <vector>

#include "doctest.h"
#include "nacent/corpus.hpp"
#include "nacent/errors.hpp"
#include "nacent/group.hpp"
#include "../oracles.hpp"

using namespace nacent;

namespace {

// S3 as permutations of {0,1,2} in lexicographic order, identity first.
const std::vector<std::vector<Element>> kS3 = {
    {0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3},
    {3, 5, 1, 4, 0, 2}, {4, 2, 5, 0, 3, 1}, {5, 3, 4, 1, 2, 0},
};

const std::vector<std::vector<Element>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0},
};

std::string law_of(const std::vector<std::vector<Element>>& rows) {
  try {
    (void)FiniteGroup::from_cayley_table(rows);
  } catch (const NotAGroup& e) {
    return e.law();
  }
  return "";
}

}  // namespace

TEST_CASE("S3 table is accepted and orders match") {
  const auto g = FiniteGroup::from_cayley_table(kS3);
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  std::vector<std::uint32_t> orders(g.orders().begin(), g.orders().end());
  CHECK(orders == std::vector<std::uint32_t>{1, 2, 2, 3, 3, 2});
  for (Element x = 0; x < 6; ++x) {
    CHECK(g.mul(x, g.inv(x)) == kIdentity);
    CHECK(g.element_order(x) == oracle::order_of(g, x));
  }
}

TEST_CASE("Z2 and the trivial group") {
  const auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inv(1) == 1);
  CHECK(z2.exponent() == 2);
  const auto one = FiniteGroup::from_cayley_table({{0}});
  CHECK(one.order() == 1);
  CHECK(one.exponent() == 1);
  CHECK(one.generators().empty());
}

TEST_CASE("identity is relabelled to index 0") {
  // Z3 with identity stored at index 2.
  const auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(g.order() == 3);
  for (Element x = 0; x < 3; ++x) CHECK(g.mul(0, x) == x);
}

TEST_CASE("each group law is named when violated") {
  CHECK(law_of({}) == "non-empty");
  CHECK(law_of({{0, 1}, {1}}) == "square table");
  CHECK(law_of({{0, 1}, {1, 2}}) == "closure");
  CHECK(law_of({{0, 1}, {0, 1}}) == "identity");  // left identities only
  CHECK(law_of({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}) == "latin square");
  // Latin square with identity 0 but not associative (a loop of order 5).
  CHECK(law_of(kLoop5) == "associativity");
}

TEST_CASE("the mutated S3 entry is caught") {
  auto rows = kS3;
  rows[2][3] = rows[2][4];
  const std::string law = law_of(rows);
  CHECK_FALSE(law.empty());
}

TEST_CASE("from_permutations builds Q8 from its regular representation") {
  const auto q8 = FiniteGroup::from_permutations({{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
  CHECK(q8.order() == 8);
  CHECK(q8.exponent() == 4);
  int involutions = 0;
  for (Element x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("from_permutations rejects bad input") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}), InvalidPermutation);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 0}, {1, 2, 0}}), InvalidPermutation);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), OrderLimitExceeded);
  CHECK(FiniteGroup::from_permutations({}).order() == 1);
}

TEST_CASE("associativity is checked exactly above the full-check threshold") {
  // Loop x Z_120: Latin, identity and inverses hold, associativity does not.
  const std::size_t m = 120, n = 5 * m;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>(kLoop5[a / m][b / m] * m + (a % m + b % m) % m);
  std::string law;
  try {
    (void)FiniteGroup::from_cayley_table(table, n);
  } catch (const NotAGroup& e) {
    law = e.law();
  }
  CHECK(law == "associativity");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  CHECK(FiniteGroup::from_cayley_table(table, n).order() == n);
}

TEST_CASE("pow and commutator agree with the definitions") {
  const auto g = symmetric(4);
  for (Element x = 0; x < g.order(); ++x) {
    CHECK(g.pow(x, g.element_order(x)) == kIdentity);
    CHECK(g.pow(x, 0) == kIdentity);
    CHECK(g.pow(x, 1) == x);
    for (Element y = 0; y < g.order(); y += 5)
      CHECK(g.commutator(x, y) == g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  }
}
