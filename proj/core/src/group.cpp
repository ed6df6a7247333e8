#include "nacent/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "nacent/errors.hpp"

namespace nacent {

namespace {

constexpr std::size_t kFullAssociativityLimit = 512;

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Breadth-first closure of `gens` inside a table; returns membership flags.
std::vector<char> closure(const std::vector<Element>& table, std::size_t n, const std::vector<Element>& gens) {
  std::vector<char> in(n, 0);
  std::vector<Element> queue{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element e = queue[head];
    for (Element g : gens) {
      const Element p = table[static_cast<std::size_t>(e) * n + g];
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

std::size_t default_max_order() {
  static const std::size_t value = [] {
    if (const char* env = std::getenv("NACENT_MAX_ORDER")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{5000};
  }();
  return value;
}

FiniteGroup FiniteGroup::from_cayley_table(std::vector<Element> table, std::size_t n, Validation policy) {
  return FiniteGroup(std::move(table), n, policy);
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& rows, Validation policy) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw NotAGroup("square table", "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                          " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteGroup(std::move(flat), n, policy);
}

FiniteGroup::FiniteGroup(std::vector<Element> table, std::size_t n, Validation policy) : n_(n) {
  if (n == 0) throw NotAGroup("non-empty", "table has no elements");
  if (table.size() != n * n)
    throw NotAGroup("square table", std::to_string(table.size()) + " entries for order " + std::to_string(n));
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] >= n)
      throw NotAGroup("closure", "entry (" + std::to_string(k / n) + ", " + std::to_string(k % n) +
                                     ") = " + std::to_string(table[k]) + " out of range");

  auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = at(c, j) == j && at(j, c) == j;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("identity", "no element acts as a two-sided identity");

  if (e != kIdentity) {
    auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Element> swapped(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        swapped[relabel(i) * n + relabel(j)] = static_cast<Element>(relabel(at(i, j)));
    table = std::move(swapped);
  }

  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = at(i, j);
      if (seen[v] == i)
        throw NotAGroup("latin square", "row " + std::to_string(i) + " repeats element " + std::to_string(v));
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = at(i, j);
      if (seen[v] == j)
        throw NotAGroup("latin square", "column " + std::to_string(j) + " repeats element " + std::to_string(v));
      seen[v] = j;
    }
  }

  inverses_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (at(i, j) != kIdentity) ++j;
    if (at(j, i) != kIdentity)
      throw NotAGroup("inverse", "element " + std::to_string(i) + " has right inverse " + std::to_string(j) +
                                     " that is not a left inverse");
    inverses_[i] = static_cast<Element>(j);
  }

  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (at(at(i, j), k) != at(i, at(j, k)))
      throw NotAGroup("associativity", "triple " + triple(i, j, k));
  };
  const bool full = policy == Validation::kFull || (policy == Validation::kAuto && n <= kFullAssociativityLimit);
  if (full) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = at(i, j);
        const std::size_t row_j = j * n;
        for (std::size_t k = 0; k < n; ++k)
          if (table[ij * n + k] != table[i * n + table[row_j + k]]) check_triple(i, j, k);
      }
  }

  // Greedy generating set; closure only needs the Latin-square property.
  {
    std::vector<char> in(n, 0);
    in[kIdentity] = 1;
    for (std::size_t x = 1; x < n; ++x) {
      if (in[x]) continue;
      generators_.push_back(static_cast<Element>(x));
      in = closure(table, n, generators_);
    }
  }

  if (!full && policy == Validation::kAuto) {
    // Light's test: the elements a with (xa)y = x(ay) for all x, y are closed
    // under products, so checking a generating set decides associativity.
    for (Element a : generators_)
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xa = at(x, a);
        for (std::size_t y = 0; y < n; ++y)
          if (table[xa * n + y] != table[x * n + at(a, y)]) check_triple(x, a, y);
      }
  }

  table_ = std::move(table);

  orders_.assign(n, 0);
  orders_[kIdentity] = 1;
  for (std::size_t x = 1; x < n; ++x) {
    if (orders_[x]) continue;
    // Walk the cyclic subgroup once and fill orders of all its members.
    std::vector<Element> powers{static_cast<Element>(x)};
    Element p = static_cast<Element>(x);
    while (p != kIdentity) {
      p = mul(p, static_cast<Element>(x));
      powers.push_back(p);
    }
    const auto m = static_cast<std::uint32_t>(powers.size());
    for (std::uint32_t k = 1; k <= m; ++k) {
      const Element y = powers[k - 1];
      if (!orders_[y]) orders_[y] = m / std::gcd(m, k);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (n % orders_[x] != 0)
      throw NotAGroup("lagrange", "element " + std::to_string(x) + " has order " + std::to_string(orders_[x]));
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(orders_[x]));
  }

}
Element FiniteGroup::pow(Element x, std::uint64_t k) const noexcept {
  k %= orders_[x];
  Element result = kIdentity;
  Element base = x;
  while (k) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                           std::size_t max_order) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& perm = generators[g];
    if (perm.size() != degree)
      throw InvalidPermutation("generator " + std::to_string(g) + " has degree " + std::to_string(perm.size()) +
                               ", expected " + std::to_string(degree));
    std::vector<char> hit(degree, 0);
    for (std::uint32_t v : perm) {
      if (v >= degree || hit[v])
        throw InvalidPermutation("generator " + std::to_string(g) + " is not a bijection on 0.." +
                                 std::to_string(degree == 0 ? 0 : degree - 1));
      hit[v] = 1;
    }
  }

  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Perm> elements{id};
  std::map<Perm, Element> index{{id, kIdentity}};
  std::vector<Element> parent{kIdentity};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Element>> right;  // right[e][s] = e * gen_s
  const std::size_t k = generators.size();

  for (std::size_t head = 0; head < elements.size(); ++head) {
    right.emplace_back(k);
    for (std::size_t s = 0; s < k; ++s) {
      Perm prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = generators[s][elements[head][i]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= max_order)
          throw OrderLimitExceeded("permutation closure exceeds max order " + std::to_string(max_order));
        elements.push_back(std::move(prod));
        parent.push_back(static_cast<Element>(head));
        via.push_back(s);
      }
      right[head][s] = it->second;
    }
  }

  // Every non-identity j is parent[j] * gen[via[j]], so i*j = (i*parent[j]) * gen.
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) table[i * n + j] = right[table[i * n + parent[j]]][via[j]];
  }
  return FiniteGroup(std::move(table), n, Validation::kAuto);
}

}  // namespace nacent
