#include "nacent/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "nacent/errors.hpp"
#include "nacent/predicates.hpp"

namespace nacent {

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return Bitset::lex_less(a.members(), b.members());
}

std::unordered_set<Bitset, BitsetHash> member_set(const std::vector<Subgroup>& v) {
  std::unordered_set<Bitset, BitsetHash> s;
  for (const auto& h : v) s.insert(h.members());
  return s;
}

}  // namespace

Partition make_partition(GroupPtr group, std::vector<Subgroup> components) {
  std::sort(components.begin(), components.end(), subgroup_less);
  components.erase(std::unique(components.begin(), components.end()), components.end());
  return Partition{std::move(group), std::move(components)};
}

std::optional<Partition> centralizer_partition(const FiniteGroup& g) {
  if (is_abelian(g)) throw AbelianGroup("centralizer partition needs a non-abelian group");
  const Subgroup z = center(g);
  QuotientMap qm = quotient(g, z);

  std::unordered_set<Bitset, BitsetHash> seen_centralizers;
  std::vector<Subgroup> images;
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    Subgroup c = centralizer(g, x);
    if (!seen_centralizers.insert(c.members()).second) continue;
    images.push_back(qm.image(c));
  }
  // Images nested inside a larger image (C(s) <= C(a) in a two-nacent
  // group) are not components; only the maximal ones are kept.
  std::vector<Subgroup> maximal;
  for (const auto& h : images) {
    const bool nested = std::any_of(images.begin(), images.end(), [&](const Subgroup& o) {
      return o.size() > h.size() && h.members().is_subset_of(o.members());
    });
    if (!nested) maximal.push_back(h);
  }
  Partition pi = make_partition(qm.quotient, std::move(maximal));
  if (!is_partition(*pi.group, pi.components)) return std::nullopt;
  return pi;
}

bool is_partition(const FiniteGroup& q, const std::vector<Subgroup>& components) {
  std::vector<std::uint32_t> hits(q.order(), 0);
  for (const auto& c : components) {
    if (&c.parent() != &q || c.size() < 2) return false;
    c.members().for_each([&](std::size_t x) { ++hits[x]; });
  }
  for (std::size_t x = 1; x < q.order(); ++x)
    if (hits[x] != 1) return false;
  return !components.empty() || q.order() == 1;
}

bool is_normal_partition(const FiniteGroup& q, const Partition& pi) {
  const auto comps = member_set(pi.components);
  for (const auto& c : pi.components)
    for (Element t : q.generators())
      if (!comps.contains(conjugate_subgroup(q, c, t).members())) return false;
  return true;
}

std::vector<Subgroup> candidate_normal_subgroups(const FiniteGroup& q, const std::vector<Subgroup>& components) {
  if (q.order() <= kNormalEnumerationCap) return normal_subgroups(q);

  std::vector<Subgroup> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members()).second) found.push_back(std::move(h));
  };
  add(Subgroup::trivial(q));
  add(Subgroup::whole(q));
  add(center(q));
  add(commutator_subgroup(q));
  add(fitting_subgroup(q));
  for (std::uint64_t p : factorize(q.order()).primes()) add(hughes_subgroup(q, p));
  const std::size_t base = found.size();
  for (const auto& c : components) {
    const auto gens = c.generators();
    add(normal_closure(q, gens));
  }
  const std::size_t closures_end = found.size();
  for (std::size_t i = base; i < closures_end; ++i)
    for (std::size_t j = i + 1; j < closures_end; ++j) add(join(found[i], found[j]));
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::optional<Subgroup> is_nonsimple_partition(const FiniteGroup& q, const Partition& pi) {
  for (const Subgroup& n : candidate_normal_subgroups(q, pi.components)) {
    if (n.is_trivial() || n.is_whole()) continue;
    const bool splits = std::all_of(pi.components.begin(), pi.components.end(), [&](const Subgroup& x) {
      return x.members().is_subset_of(n.members()) || subgroup_intersection(x, n).is_trivial();
    });
    if (splits) return n;
  }
  return std::nullopt;
}

std::optional<ElementaryWitness> is_elementary_partition(const FiniteGroup& q, const Partition& pi) {
  if (pi.components.size() < 2) return std::nullopt;
  const auto comps = member_set(pi.components);
  const auto candidates = candidate_normal_subgroups(q, pi.components);
  for (std::uint64_t p : factorize(q.order()).primes()) {
    for (const Subgroup& k : candidates) {
      if (k.size() * p != q.order()) continue;
      bool ok = true;
      for (Element x = 0; x < q.order() && ok; ++x) {
        if (k.contains(x)) continue;
        ok = q.element_order(x) == p && comps.contains(generated_subgroup(q, {x}).members());
      }
      if (ok) return ElementaryWitness{k, p};
    }
  }
  return std::nullopt;
}

bool miller_check(const FiniteGroup& q, const Partition& pi) {
  const auto p = is_p_group(q);
  if (!p || is_abelian(q)) throw NotApplicable("miller check needs a non-abelian p-group");
  if (pi.components.size() < 2) throw NotApplicable("miller check needs a non-trivial partition");
  std::optional<std::size_t> home;
  for (Element x = 0; x < q.order(); ++x) {
    if (q.element_order(x) <= *p) continue;
    std::size_t idx = 0;
    while (idx < pi.components.size() && !pi.components[idx].contains(x)) ++idx;
    if (!home) home = idx;
    else if (*home != idx) return false;
  }
  return true;
}

bool is_frobenius_pair(const FiniteGroup& q, const Subgroup& kernel, const Subgroup& complement) {
  if (kernel.is_trivial() || complement.is_trivial() || complement.is_whole()) return false;
  if (kernel.size() * complement.size() != q.order()) return false;
  if (!subgroup_intersection(kernel, complement).is_trivial()) return false;
  if (!is_normal(q, kernel)) return false;

  Bitset covered(q.order());
  std::unordered_set<Bitset, BitsetHash> conjugates;
  for (Element t = 0; t < q.order(); ++t) {
    Subgroup c = conjugate_subgroup(q, complement, t);
    if (!complement.contains(t) && !subgroup_intersection(complement, c).is_trivial()) return false;
    if (conjugates.insert(c.members()).second) covered |= c.members();
  }
  for (Element x = 1; x < q.order(); ++x)
    if (covered.test(x) == kernel.contains(x)) return false;
  return true;
}

std::optional<FrobeniusStructure> find_frobenius_structure(const FiniteGroup& q) {
  if (q.order() <= 1) return std::nullopt;
  std::vector<Subgroup> candidates =
      q.order() <= kNormalEnumerationCap ? normal_subgroups(q) : std::vector<Subgroup>{fitting_subgroup(q)};

  for (const Subgroup& k : candidates) {
    if (k.is_trivial() || k.is_whole()) continue;
    const std::size_t m = q.order() / k.size();
    if (std::gcd(k.size(), m) != 1) continue;

    bool self_centralizing = true;
    k.members().for_each([&](std::size_t x) {
      if (self_centralizing && x != kIdentity)
        self_centralizing = centralizer(q, static_cast<Element>(x)).members().is_subset_of(k.members());
    });
    if (!self_centralizing) continue;

    std::vector<Element> pool;
    for (Element x = 1; x < q.order(); ++x)
      if (!k.contains(x) && m % q.element_order(x) == 0) pool.push_back(x);

    std::unordered_set<Bitset, BitsetHash> tried;
    auto attempt = [&](const Subgroup& h) -> bool {
      if (h.size() != m || !tried.insert(h.members()).second) return false;
      return is_frobenius_pair(q, k, h);
    };
    for (Element x : pool) {
      Subgroup h = generated_subgroup(q, {x});
      if (attempt(h)) return FrobeniusStructure{k, std::move(h)};
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        Subgroup h = generated_subgroup(q, {pool[i], pool[j]});
        if (attempt(h)) return FrobeniusStructure{k, std::move(h)};
      }
  }
  return std::nullopt;
}

bool is_frobenius_partition(const FiniteGroup& q, const Partition& pi) {
  if (pi.components.size() < 2) return false;
  const auto fs = find_frobenius_structure(q);
  if (!fs) return false;
  const auto comps = member_set(pi.components);
  if (!comps.contains(fs->kernel.members())) return false;

  std::unordered_set<Bitset, BitsetHash> conjugates;
  for (Element t = 0; t < q.order(); ++t) conjugates.insert(conjugate_subgroup(q, fs->complement, t).members());
  if (conjugates.size() + 1 != comps.size()) return false;
  return std::all_of(conjugates.begin(), conjugates.end(), [&](const Bitset& b) { return comps.contains(b); });
}

}  // namespace nacent
