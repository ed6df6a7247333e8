#include "nacent/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "nacent/errors.hpp"

namespace nacent {

namespace {

bool generators_commute(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_power_of(std::uint64_t k, std::uint64_t p) {
  if (k == 0) return false;
  while (k % p == 0) k /= p;
  return k == 1;
}

void sort_subgroups(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return Bitset::lex_less(a.members(), b.members());
  });
}

}  // namespace

std::uint64_t PrimeFactorization::value() const {
  std::uint64_t v = 1;
  for (auto [p, k] : factors)
    for (unsigned i = 0; i < k; ++i) v *= p;
  return v;
}

std::vector<std::uint64_t> PrimeFactorization::primes() const {
  std::vector<std::uint64_t> out;
  for (auto [p, k] : factors) out.push_back(p);
  return out;
}

std::uint64_t PrimeFactorization::part(std::uint64_t p) const {
  for (auto [q, k] : factors) {
    if (q != p) continue;
    std::uint64_t v = 1;
    for (unsigned i = 0; i < k; ++i) v *= p;
    return v;
  }
  return 1;
}

PrimeFactorization factorize(std::uint64_t n) {
  PrimeFactorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) f.factors.emplace_back(p, k);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generators();
  return generators_commute(g, {gens.begin(), gens.end()});
}

bool is_abelian(const Subgroup& h) { return generators_commute(h.parent(), h.generators()); }

bool is_cyclic(const FiniteGroup& g) {
  const auto orders = g.orders();
  return std::any_of(orders.begin(), orders.end(), [&](std::uint32_t o) { return o == g.order(); });
}

bool is_cyclic(const Subgroup& h) {
  bool found = false;
  h.members().for_each([&](std::size_t x) {
    if (!found && h.parent().element_order(static_cast<Element>(x)) == h.size()) found = true;
  });
  return found;
}

std::optional<std::uint64_t> is_p_group(const FiniteGroup& g) {
  const auto f = factorize(g.order());
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front().first;
}

std::optional<std::uint64_t> is_p_group(const Subgroup& h) {
  const auto f = factorize(h.size());
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front().first;
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw PrimeDoesNotDivide(std::to_string(p) + " is not a prime divisor of " + std::to_string(g.order()));
  const std::uint64_t target = factorize(g.order()).part(p);

  Element start = kIdentity;
  for (Element x = 1; x < g.order(); ++x)
    if (is_power_of(g.element_order(x), p)) {
      start = x;
      break;
    }
  Subgroup sylow = generated_subgroup(g, {start});

  while (sylow.size() < target) {
    const Subgroup norm = normalizer(g, sylow);
    std::optional<Element> extension;
    norm.members().for_each([&](std::size_t yi) {
      if (extension || sylow.contains(static_cast<Element>(yi))) return;
      const auto y = static_cast<Element>(yi);
      // Order of y modulo the current p-subgroup.
      std::uint64_t k = 1;
      for (Element acc = y; !sylow.contains(acc); acc = g.mul(acc, y)) ++k;
      if (!is_power_of(k, p)) return;
      std::uint64_t p_prime_part = g.element_order(y);
      while (p_prime_part % p == 0) p_prime_part /= p;
      extension = g.pow(y, p_prime_part);
    });
    if (!extension) throw std::logic_error("sylow growth stalled below the full p-part");
    auto gens = sylow.generators();
    gens.push_back(*extension);
    sylow = generated_subgroup(g, gens);
  }
  return sylow;
}

Subgroup p_core(const FiniteGroup& g, std::uint64_t p) {
  if (g.order() % p != 0) return Subgroup::trivial(g);
  const Subgroup sylow = sylow_subgroup(g, p);
  Bitset core = sylow.members();
  for (Element t = 1; t < g.order() && core.count() > 1; ++t) core &= conjugate_subgroup(g, sylow, t).members();
  return {g, std::move(core)};
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    const Subgroup& current = series.back();
    std::vector<Element> seed;
    for (Element s : g.generators())
      for (Element h : current.generators()) seed.push_back(g.commutator(s, h));
    Subgroup next = normal_closure(g, seed);
    if (next == current) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

bool is_nilpotent(const Subgroup& h) { return is_nilpotent(*restrict_to(h).group); }

Subgroup fitting_subgroup(const FiniteGroup& g) {
  Subgroup f = Subgroup::trivial(g);
  for (std::uint64_t p : factorize(g.order()).primes()) f = join(f, p_core(g, p));
  return f;
}

Subgroup hughes_subgroup(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Element> seed;
  for (Element x = 1; x < g.order(); ++x)
    if (g.element_order(x) != p) seed.push_back(x);
  return generated_subgroup(g, seed);
}

std::optional<std::uint64_t> is_hughes_thompson_type(const FiniteGroup& g) {
  if (g.order() == 1 || is_p_group(g)) return std::nullopt;
  for (std::uint64_t p : factorize(g.order()).primes())
    if (!hughes_subgroup(g, p).is_whole()) return p;
  return std::nullopt;
}

bool is_ca_group(const FiniteGroup& g) {
  const Subgroup z = center(g);
  std::unordered_set<Bitset, BitsetHash> checked;
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    Subgroup c = centralizer(g, x);
    if (!checked.insert(c.members()).second) continue;
    if (!is_abelian(c)) return false;
  }
  return true;
}

bool is_ca_group(const Subgroup& h) { return is_ca_group(*restrict_to(h).group); }

std::optional<PTimesAbelian> decompose_p_times_abelian(const Subgroup& h) {
  const RestrictedGroup r = restrict_to(h);
  const FiniteGroup& inner = *r.group;
  if (!is_nilpotent(inner)) throw NotNilpotent("subgroup of order " + std::to_string(h.size()) + " is not nilpotent");

  const auto primes = factorize(inner.order()).primes();
  std::vector<Subgroup> sylows;
  for (std::uint64_t p : primes) sylows.push_back(sylow_subgroup(inner, p));

  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < sylows.size(); ++i) {
    if (is_abelian(sylows[i])) continue;
    if (chosen) return std::nullopt;
    chosen = i;
  }
  if (!chosen && !sylows.empty()) chosen = sylows.size() - 1;

  Subgroup p_part = Subgroup::trivial(inner);
  Subgroup rest = Subgroup::trivial(inner);
  std::optional<std::uint64_t> prime;
  for (std::size_t i = 0; i < sylows.size(); ++i) {
    if (chosen && i == *chosen) {
      p_part = sylows[i];
      prime = primes[i];
    } else {
      rest = join(rest, sylows[i]);
    }
  }

  if (!subgroup_intersection(p_part, rest).is_trivial()) return std::nullopt;
  if (p_part.size() * rest.size() != inner.order()) return std::nullopt;
  for (Element a : p_part.generators())
    for (Element b : rest.generators())
      if (inner.mul(a, b) != inner.mul(b, a)) return std::nullopt;
  if (!is_abelian(rest) || !is_ca_group(p_part)) return std::nullopt;

  return PTimesAbelian{r.lift(p_part, h.parent()), r.lift(rest, h.parent()), prime};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> class_closures;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    Subgroup c = generated_subgroup(g, cls);
    if (seen.insert(c.members()).second) class_closures.push_back(std::move(c));
  }

  std::vector<Subgroup> found(class_closures.begin(), class_closures.end());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const Subgroup& c : class_closures) {
      if (c.is_subset_of(found[head])) continue;
      Subgroup j = join(found[head], c);
      if (seen.insert(j.members()).second) found.push_back(std::move(j));
    }
  }
  sort_subgroups(found);
  return found;
}

}  // namespace nacent
