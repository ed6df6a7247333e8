#include "nacent/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nacent/errors.hpp"
#include "nacent/partition.hpp"
#include "nacent/predicates.hpp"

namespace nacent {

const char* to_string(Category c) {
  switch (c) {
    case Category::kAbelian: return "Abelian";
    case Category::kCA: return "CA";
    case Category::kTwoNacent: return "TwoNacent";
    case Category::kManyNacent: return "ManyNacent";
  }
  return "?";
}

const char* to_string(Case c) {
  switch (c) {
    case Case::kA: return "A";
    case Case::kB: return "B";
    case Case::kC: return "C";
  }
  return "?";
}

CentStats cent_stats(const FiniteGroup& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const Subgroup z = center(g);
  CentStats s;
  s.centralizer_of.assign(g.order(), kUnset);
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index;

  for (Element x = 0; x < g.order(); ++x) {
    if (s.centralizer_of[x] != kUnset) continue;
    if (x != kIdentity && z.contains(x)) {
      s.centralizer_of[x] = 0;
      continue;
    }
    Subgroup c = centralizer(g, x);
    auto [it, inserted] = index.try_emplace(c.members(), static_cast<std::uint32_t>(s.cent.size()));
    if (inserted) {
      s.cent.push_back(std::move(c));
      s.witness.push_back(x);
    }
    // <x> = <x^k> for k coprime to the order, and equal cyclic subgroups
    // have equal centralizers.
    const std::uint32_t ord = g.element_order(x);
    Element y = x;
    for (std::uint32_t k = 1; k < std::max<std::uint32_t>(ord, 2); ++k, y = g.mul(y, x))
      if (std::gcd(k, ord) == 1 && s.centralizer_of[y] == kUnset) s.centralizer_of[y] = it->second;
  }

  s.abelian.reserve(s.cent.size());
  for (std::size_t i = 0; i < s.cent.size(); ++i) {
    s.abelian.push_back(is_abelian(s.cent[i]));
    if (!s.abelian.back()) s.nacent.push_back(i);
  }
  return s;
}

namespace {

struct Context {
  explicit Context(const FiniteGroup& group)
      : g(group), stats(cent_stats(group)), z(center(group)), abelian(is_abelian(group)) {
    if (!abelian) qm.emplace(quotient(g, z));
  }

  const FiniteGroup& q() const { return *qm->quotient; }

  const Subgroup& hughes(std::uint64_t p) {
    auto it = hughes_cache.find(p);
    if (it == hughes_cache.end()) it = hughes_cache.emplace(p, hughes_subgroup(q(), p)).first;
    return it->second;
  }

  bool ca_group(std::size_t cent_index) {
    auto it = ca_cache.find(cent_index);
    if (it == ca_cache.end()) it = ca_cache.emplace(cent_index, is_ca_group(stats.cent[cent_index])).first;
    return it->second;
  }

  // |C(x)/Z| == p for every x outside C(a).
  bool outside_quotients_have_order(const Subgroup& ca, std::uint64_t p) const {
    for (Element x = 0; x < g.order(); ++x) {
      if (ca.contains(x)) continue;
      if (stats.cent[stats.centralizer_of[x]].size() != p * z.size()) return false;
    }
    return true;
  }

  std::size_t g_index() const { return stats.centralizer_of[kIdentity]; }

  std::vector<std::size_t> candidates() const {
    std::vector<std::size_t> out;
    for (std::size_t i : stats.nacent)
      if (i != g_index()) out.push_back(i);
    return out;
  }

  const FiniteGroup& g;
  CentStats stats;
  Subgroup z;
  bool abelian;
  std::optional<QuotientMap> qm;
  std::map<std::uint64_t, Subgroup> hughes_cache;
  std::map<std::size_t, bool> ca_cache;
};

// Cases are tried in the order A, C, B: a Frobenius quotient whose
// complements have prime order is also of Hughes-Thompson type, and such
// groups are reported as Frobenius.
std::vector<CaseMatch> evaluate_cases(Context& ctx, std::size_t cent_index) {
  std::vector<CaseMatch> out;
  const Subgroup& ca = ctx.stats.cent[cent_index];
  if (ca.is_whole() || ctx.abelian) return out;
  const FiniteGroup& q = ctx.q();
  const Subgroup ca_q = ctx.qm->image(ca);
  const auto q_prime = is_p_group(q);

  if (q_prime && !is_abelian(q) && q.exponent() > *q_prime) {
    const std::uint64_t p = *q_prime;
    const Subgroup& hp = ctx.hughes(p);
    if (hp == ca_q && hp.size() * p == q.order() && ctx.outside_quotients_have_order(ca, p) &&
        ctx.ca_group(cent_index)) {
      CaseData d;
      d.prime = p;
      d.hughes_order = hp.size();
      out.push_back({Case::kA, d});
    }
  }

  {
    std::unordered_set<std::uint32_t> tried;
    for (Element x = 0; x < ctx.g.order(); ++x) {
      if (ca.contains(x)) continue;
      const std::uint32_t ci = ctx.stats.centralizer_of[x];
      if (!tried.insert(ci).second) continue;
      const Subgroup h = ctx.qm->image(ctx.stats.cent[ci]);
      if (h.size() * ca_q.size() != q.order()) continue;
      if (is_cyclic(h) && is_frobenius_pair(q, ca_q, h)) {
        if (ctx.ca_group(cent_index)) {
          CaseData d;
          d.kernel_order = ca_q.size();
          d.complement_order = h.size();
          d.complement_witness = x;
          out.push_back({Case::kC, d});
        }
        break;
      }
    }
  }

  if (!q_prime && q.order() > 1) {
    for (std::uint64_t p : factorize(q.order()).primes()) {
      const Subgroup& hp = ctx.hughes(p);
      if (hp.is_whole() || hp != ca_q) continue;
      if (!ctx.outside_quotients_have_order(ca, p) || !ctx.ca_group(cent_index)) continue;
      CaseData d;
      d.prime = p;
      d.hughes_order = hp.size();
      out.push_back({Case::kB, d});
      break;
    }
  }
  return out;
}

void fill_classification(Context& ctx, Classification& cls, IffVerdict& iff) {
  cls.nacent_count = ctx.stats.nacent_count();
  if (ctx.abelian) {
    cls.category = Category::kAbelian;
    return;
  }

  if (cls.nacent_count == 2) {
    cls.category = Category::kTwoNacent;
    const std::size_t ci = ctx.candidates().front();
    cls.witness_a = ctx.stats.witness[ci];
    const auto matches = evaluate_cases(ctx, ci);
    for (const auto& m : matches) cls.matched.push_back(m.which);
    if (matches.empty()) {
      iff.forward = false;
    } else {
      cls.which = matches.front().which;
      cls.data = matches.front().data;
    }
    return;
  }

  cls.category = cls.nacent_count <= 1 ? Category::kCA : Category::kManyNacent;
  for (std::size_t ci : ctx.candidates()) {
    const auto matches = evaluate_cases(ctx, ci);
    if (matches.empty()) continue;
    iff.converse = false;
    iff.converse_witness = ctx.stats.witness[ci];
    for (const auto& m : matches) iff.converse_cases.push_back(m.which);
    break;
  }
}

void fill_header(const Context& ctx, VerificationReport& r) {
  r.order = ctx.g.order();
  r.center_order = ctx.z.size();
  r.cent_count = ctx.stats.cent_count();
  r.nacent_count = ctx.stats.nacent_count();
}

void record_iff(VerificationReport& r, const IffVerdict& iff) {
  if (!iff.forward) r.violations.push_back("forward direction: |nacent(G)| = 2 but no case A/B/C hypothesis set holds");
  if (!iff.converse) {
    std::string cases;
    for (Case c : iff.converse_cases) cases += to_string(c);
    r.violations.push_back("converse direction: case " + cases + " hypotheses hold for a = " +
                           std::to_string(*iff.converse_witness) + " but |nacent(G)| = " +
                           std::to_string(r.nacent_count));
  }
}

void fill_consequences(Context& ctx, VerificationReport& r) {
  const auto& cls = r.classification;
  if (cls.category != Category::kTwoNacent || !cls.which) return;
  ConsequenceChecks& c = r.consequences;
  const FiniteGroup& g = ctx.g;
  const FiniteGroup& q = ctx.q();
  const std::size_t ci = ctx.stats.centralizer_of[*cls.witness_a];
  const Subgroup& ca = ctx.stats.cent[ci];
  const Subgroup ca_q = ctx.qm->image(ca);

  c.normal_ca = is_normal(g, ca);
  c.ca_group = ctx.ca_group(ci);

  const RestrictedGroup inner = restrict_to(ca);
  const std::size_t cc = cent_stats(*inner.group).cent_count();
  c.cent_ca = cc;
  c.ca_mod_center = ca_q.size();
  std::optional<std::uint64_t> p = cls.data.prime;
  if (!p && is_prime(g.order() / ca.size())) p = g.order() / ca.size();
  c.formula_prime = p;
  c.frobenius_count = cc + ca_q.size() + 1;
  if (r.cent_count == *c.frobenius_count) c.formulas_matched.emplace_back("frobenius");
  if (p) {
    c.partition_count = cc + q.order() / *p + 1;
    c.literal_count = cc + g.order() / *p + 1;
    if (r.cent_count == *c.partition_count) c.formulas_matched.emplace_back("partition");
    if (r.cent_count == *c.literal_count) c.formulas_matched.emplace_back("literal");
  }
  if (*cls.which == Case::kC)
    c.a = r.cent_count == *c.frobenius_count;
  else
    c.a = c.partition_count && r.cent_count == *c.partition_count;

  c.b = commutator_subgroup(g).is_subset_of(ca);
  c.c = fitting_subgroup(q) == ca_q;
  c.d = fitting_subgroup(g) == ca;

  try {
    const auto split = decompose_p_times_abelian(ca);
    c.e = split.has_value();
    if (split) {
      c.p_part_order = split->p_part.size();
      c.abelian_part_order = split->abelian_part.size();
      c.p_part_prime = split->prime;
    }
  } catch (const NotNilpotent&) {
    c.e = false;
  }

  if (*c.normal_ca) {
    const QuotientMap top = quotient(g, ca);
    c.g_mod_ca = top.quotient->order();
    c.f = is_cyclic(*top.quotient);
  } else {
    c.f = false;
  }

  const std::pair<const char*, std::optional<bool>> checks[] = {
      {"(a) centralizer count", c.a}, {"(b) G' <= C(a)", c.b},        {"(c) F(G/Z) = C(a)/Z", c.c},
      {"(d) F(G) = C(a)", c.d},       {"(e) C(a) = P x A", c.e},        {"(f) G/C(a) cyclic", c.f},
      {"C(a) normal", c.normal_ca},   {"C(a) is a CA-group", c.ca_group}};
  for (const auto& [name, value] : checks)
    if (value && !*value) r.violations.push_back(std::string("consequence ") + name + " failed");
}

void fill_partition(Context& ctx, VerificationReport& r) {
  if (ctx.abelian) return;
  PartitionDiagnostics& d = r.partition;
  const FiniteGroup& g = ctx.g;
  const bool two = r.classification.category == Category::kTwoNacent;

  if (two) {
    const std::size_t ci = ctx.stats.centralizer_of[*r.classification.witness_a];
    const Subgroup& ca = ctx.stats.cent[ci];
    bool contained = true;
    for (Element s = 0; s < g.order() && contained; ++s)
      if (ca.contains(s) && !ctx.z.contains(s)) contained = ctx.stats.cent[ctx.stats.centralizer_of[s]].is_subset_of(ca);
    d.inner_centralizers_contained = contained;

    std::vector<std::uint32_t> outside;
    for (Element x = 0; x < g.order(); ++x)
      if (!ca.contains(x)) outside.push_back(ctx.stats.centralizer_of[x]);
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    bool meet = true;
    for (std::size_t i = 0; i < outside.size() && meet; ++i) {
      const Bitset& ci_bits = ctx.stats.cent[outside[i]].members();
      meet = (ci_bits & ca.members()) == ctx.z.members();
      for (std::size_t j = i + 1; j < outside.size() && meet; ++j)
        meet = (ci_bits & ctx.stats.cent[outside[j]].members()) == ctx.z.members();
    }
    d.outside_meet_center = meet;
    if (!contained) r.violations.push_back("C(s) not contained in C(a) for some s in C(a) \\ Z(G)");
    if (!meet) r.violations.push_back("outside centralizers do not meet C(a) and each other in Z(G)");
  }

  const auto pi = centralizer_partition(g);
  d.exists = pi.has_value();
  if (!pi) {
    if (two) r.violations.push_back("centralizer images do not partition G/Z(G)");
    return;
  }
  const FiniteGroup& q = *pi->group;
  d.components = pi->components.size();
  d.normal = is_normal_partition(q, *pi);
  const auto n = is_nonsimple_partition(q, *pi);
  d.nonsimple = n.has_value();
  if (n) d.nonsimple_witness_order = n->size();
  const auto el = is_elementary_partition(q, *pi);
  d.elementary = el.has_value();
  if (el) d.elementary_prime = el->prime;
  d.frobenius = is_frobenius_partition(q, *pi);

  if (two && !(*d.normal && *d.nonsimple))
    r.violations.push_back("centralizer partition of a two-nacent group is not normal and non-simple");
  if (!pi->is_trivial() && *d.normal && *d.nonsimple && !*d.frobenius && !el)
    r.violations.push_back("normal non-simple non-Frobenius partition is not elementary");
  if (const auto p = is_p_group(q); p && !is_abelian(q) && !pi->is_trivial()) {
    if (q.exponent() > *p && *d.normal && !el)
      r.violations.push_back("normal partition of a p-group of exponent > p is not elementary");
    if (!miller_check(q, *pi)) r.violations.push_back("elements of order > p lie in several components");
  }
}

}  // namespace

Classification classify(const FiniteGroup& g) {
  Context ctx(g);
  Classification cls;
  IffVerdict iff;
  fill_classification(ctx, cls, iff);
  if (!iff.forward)
    throw TheoremViolation("|nacent(G)| = 2 but none of the three cases holds for a = " +
                           std::to_string(*cls.witness_a));
  if (!iff.converse)
    throw TheoremViolation("case hypotheses hold for a = " + std::to_string(*iff.converse_witness) +
                           " but |nacent(G)| = " + std::to_string(cls.nacent_count));
  return cls;
}

VerificationReport verify_iff(const FiniteGroup& g, std::string group_id) {
  Context ctx(g);
  VerificationReport r;
  r.group_id = std::move(group_id);
  fill_header(ctx, r);
  IffVerdict iff;
  fill_classification(ctx, r.classification, iff);
  r.iff = iff;
  record_iff(r, iff);
  return r;
}

VerificationReport verify_consequences(const FiniteGroup& g, std::string group_id) {
  Context ctx(g);
  VerificationReport r;
  r.group_id = std::move(group_id);
  fill_header(ctx, r);
  IffVerdict iff;
  fill_classification(ctx, r.classification, iff);
  fill_consequences(ctx, r);
  return r;
}

VerificationReport verify_group(const FiniteGroup& g, std::string group_id) {
  Context ctx(g);
  VerificationReport r;
  r.group_id = std::move(group_id);
  fill_header(ctx, r);
  IffVerdict iff;
  fill_classification(ctx, r.classification, iff);
  r.iff = iff;
  record_iff(r, iff);
  fill_consequences(ctx, r);
  fill_partition(ctx, r);
  return r;
}

}  // namespace nacent
