#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "nacent/classifier.hpp"
#include "nacent/corpus.hpp"
#include "nacent/predicates.hpp"
#include "../oracles.hpp"

using namespace nacent;

namespace {

using Perm = std::vector<std::uint32_t>;

Perm random_perm(std::mt19937& rng, std::size_t m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<std::vector<Perm>> random_generator_sets(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<std::vector<Perm>> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t m = 3 + rng() % 3;
    const std::size_t k = 1 + rng() % 2;
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(random_perm(rng, m));
    out.push_back(std::move(gens));
  }
  return out;
}

std::vector<std::uint32_t> order_profile(const FiniteGroup& g) {
  std::vector<std::uint32_t> v(g.orders().begin(), g.orders().end());
  std::sort(v.begin(), v.end());
  return v;
}

oracle::Set as_set(const Subgroup& h) {
  oracle::Set s(h.parent().order());
  for (Element x : h.elements()) s[x] = true;
  return s;
}

}  // namespace

TEST_CASE("redundant permutation generators do not change the group") {
  for (const auto& gens : random_generator_sets(7, 25)) {
    const auto g = FiniteGroup::from_permutations(gens);
    auto more = gens;
    more.push_back(compose(gens.front(), gens.back()));
    more.push_back(gens.front());
    const auto h = FiniteGroup::from_permutations(more);
    CHECK(h.order() == g.order());
    CHECK(order_profile(h) == order_profile(g));
    CHECK(center(h).size() == center(g).size());
    CHECK(cent_stats(h).cent_count() == cent_stats(g).cent_count());

    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(FiniteGroup::from_permutations(reversed).order() == g.order());
  }
}

TEST_CASE("element order laws") {
  for (const auto& gens : random_generator_sets(11, 20)) {
    const auto g = FiniteGroup::from_permutations(gens);
    std::uint64_t lcm = 1;
    bool has_full = false;
    for (Element x = 0; x < g.order(); ++x) {
      const auto o = g.element_order(x);
      CHECK(g.element_order(g.inv(x)) == o);
      CHECK(g.order() % o == 0);
      for (std::uint64_t k = 1; k <= 4; ++k) CHECK(g.element_order(g.pow(x, k)) == o / std::gcd<std::uint64_t>(o, k));
      lcm = std::lcm<std::uint64_t>(lcm, o);
      has_full = has_full || o == g.order();
    }
    CHECK(g.exponent() == lcm);
    CHECK(is_cyclic(g) == has_full);
  }
}

TEST_CASE("class equation and centralizer sizes") {
  for (const auto& gens : random_generator_sets(13, 15)) {
    const auto g = FiniteGroup::from_permutations(gens);
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(g)) {
      total += cls.size();
      CHECK(centralizer(g, cls.front()).size() * cls.size() == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("nilpotent exactly when every Sylow subgroup is normal") {
  std::vector<FiniteGroup> groups;
  for (const auto& gens : random_generator_sets(17, 15)) groups.push_back(FiniteGroup::from_permutations(gens));
  for (const auto& spec : builtin_catalog(48)) groups.push_back(build(spec));
  for (const auto& g : groups) {
    bool all_normal = true;
    for (auto p : factorize(g.order()).primes()) all_normal = all_normal && sylow_subgroup(g, p) == p_core(g, p);
    CHECK(is_nilpotent(g) == all_normal);
    CHECK(is_nilpotent(g) == oracle::nilpotent(g, oracle::Set(g.order(), true)));
  }
}

TEST_CASE("generated subgroups equal brute-force closure") {
  std::mt19937 rng(23);
  for (const auto& gens : random_generator_sets(19, 15)) {
    const auto g = FiniteGroup::from_permutations(gens);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Element> seed;
      oracle::Set s(g.order());
      for (int k = 0; k < 2; ++k) {
        const Element x = static_cast<Element>(rng() % g.order());
        seed.push_back(x);
        s[x] = true;
      }
      const auto h = generated_subgroup(g, seed);
      CHECK(as_set(h) == oracle::closure(g, s));
      CHECK(g.order() % h.size() == 0);
      CHECK(as_set(normal_closure(g, seed)) == oracle::normal_closure(g, s));
    }
  }
}

TEST_CASE("quotients by normal subgroups have the expected order") {
  for (const auto& spec : builtin_catalog(40)) {
    const auto g = build(spec);
    for (const auto& n : normal_subgroups(g)) {
      const auto qm = quotient(g, n);
      CHECK(qm.quotient->order() * n.size() == g.order());
      CHECK(preimage(qm, Subgroup::trivial(*qm.quotient)) == n);
    }
  }
}
