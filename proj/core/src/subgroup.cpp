#include "nacent/subgroup.hpp"

#include <algorithm>
#include <string>

#include "nacent/errors.hpp"

namespace nacent {

namespace {

Bitset close_under(const FiniteGroup& g, const std::vector<Element>& gens) {
  Bitset in(g.order());
  in.set(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto row = g.row(queue[head]);
    for (Element s : gens) {
      const Element p = row[s];
      if (!in.test(p)) {
        in.set(p);
        queue.push_back(p);
      }
    }
  }
  return in;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw ParentMismatch();
}

}  // namespace

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  Bitset b(parent.order());
  b.set(kIdentity);
  return {parent, std::move(b)};
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  Bitset b(parent.order());
  b.set_all();
  return {parent, std::move(b)};
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> gens;
  Bitset reached(parent_->order());
  reached.set(kIdentity);
  members_.for_each([&](std::size_t i) {
    if (reached.test(i)) return;
    gens.push_back(static_cast<Element>(i));
    reached = close_under(*parent_, gens);
  });
  return gens;
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  require_same_parent(*this, o);
  return members_.is_subset_of(o.members_);
}

Subgroup QuotientMap::image(const Subgroup& h) const {
  Bitset b(quotient->order());
  h.members().for_each([&](std::size_t i) { b.set(projection[i]); });
  return {*quotient, std::move(b)};
}

Subgroup RestrictedGroup::lift(const Subgroup& inner, const FiniteGroup& parent) const {
  Bitset b(parent.order());
  inner.members().for_each([&](std::size_t i) { b.set(to_parent[i]); });
  return {parent, std::move(b)};
}

Subgroup RestrictedGroup::lower(const Subgroup& outer) const {
  Bitset b(group->order());
  outer.members().for_each([&](std::size_t i) {
    if (from_parent[i] < group->order()) b.set(from_parent[i]);
  });
  return {*group, std::move(b)};
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  Bitset b(g.order());
  const auto row_x = g.row(x);
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(y, x) == row_x[y]) b.set(y);
  return {g, std::move(b)};
}

Subgroup center(const FiniteGroup& g) {
  Bitset b(g.order());
  const auto gens = g.generators();
  for (Element y = 0; y < g.order(); ++y) {
    const bool central =
        std::all_of(gens.begin(), gens.end(), [&](Element s) { return g.mul(y, s) == g.mul(s, y); });
    if (central) b.set(y);
  }
  return {g, std::move(b)};
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seed) {
  std::vector<Element> gens;
  for (Element s : seed)
    if (s != kIdentity && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  return {g, close_under(g, gens)};
}

Subgroup generated_subgroup(const FiniteGroup& g, std::initializer_list<Element> seed) {
  return generated_subgroup(g, std::span<const Element>(seed.begin(), seed.size()));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seed) {
  std::vector<Element> gens;
  for (Element s : seed)
    if (s != kIdentity && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  Bitset h = close_under(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element t : g.generators()) {
      const Element c = g.conj(gens[i], t);
      if (!h.test(c)) {
        gens.push_back(c);
        h = close_under(g, gens);
      }
    }
  }
  return {g, std::move(h)};
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  auto gens = a.generators();
  const auto more = b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return generated_subgroup(a.parent(), gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, NormalityCheck how) {
  if (how == NormalityCheck::kDefinitional) {
    for (Element t = 0; t < g.order(); ++t) {
      bool ok = true;
      h.members().for_each([&](std::size_t x) {
        if (ok && !h.contains(g.conj(static_cast<Element>(x), t))) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }
  const auto hgens = h.generators();
  for (Element t : g.generators())
    for (Element x : hgens)
      if (!h.contains(g.conj(x, t))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  const auto hgens = h.generators();
  Bitset b(g.order());
  for (Element t = 0; t < g.order(); ++t) {
    const bool fixes = std::all_of(hgens.begin(), hgens.end(), [&](Element x) { return h.contains(g.conj(x, t)); });
    if (fixes) b.set(t);
  }
  return {g, std::move(b)};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> seed;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seed.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, seed);
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element by) {
  Bitset b(g.order());
  h.members().for_each([&](std::size_t x) { b.set(g.conj(static_cast<Element>(x), by)); });
  return {g, std::move(b)};
}

QuotientMap quotient(const FiniteGroup& g, const Subgroup& n) {
  if (&n.parent() != &g) throw ParentMismatch();
  if (!is_normal(g, n)) throw NotNormal("subgroup of order " + std::to_string(n.size()) + " is not normal");

  const std::size_t order = g.order();
  const std::size_t q = order / n.size();
  const auto kernel = n.elements();
  std::vector<Element> projection(order, static_cast<Element>(order));
  std::vector<Element> reps;
  reps.reserve(q);
  for (Element x = 0; x < order; ++x) {
    if (projection[x] != order) continue;
    const auto label = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : kernel) projection[g.mul(x, k)] = label;
  }

  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = projection[g.mul(reps[a], reps[b])];
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::from_cayley_table(std::move(table), q, Validation::kDerived));
  return QuotientMap{&g, n, std::move(group), std::move(projection), std::move(reps)};
}

Subgroup preimage(const QuotientMap& qm, const Subgroup& s) {
  Bitset b(qm.parent->order());
  for (Element x = 0; x < qm.parent->order(); ++x)
    if (s.contains(qm.projection[x])) b.set(x);
  return {*qm.parent, std::move(b)};
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return {a.parent(), a.members() & b.members()};
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return a.members() == b.members();
}

RestrictedGroup restrict_to(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  RestrictedGroup r;
  r.to_parent = h.elements();
  r.from_parent.assign(g.order(), static_cast<Element>(g.order()));
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.from_parent[r.to_parent[i]] = static_cast<Element>(i);
  const std::size_t m = r.to_parent.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = r.from_parent[g.mul(r.to_parent[i], r.to_parent[j])];
  r.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_cayley_table(std::move(table), m, Validation::kDerived));
  return r;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> classes;
  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (Element t : g.generators()) {
        const Element c = g.conj(cls[head], t);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace nacent
