#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nacent/group.hpp"
#include "nacent/subgroup.hpp"

namespace nacent {

/// Subgroups of `group` claimed to partition its non-trivial elements.
/// Components are kept sorted by (size, members).
struct Partition {
  GroupPtr group;
  std::vector<Subgroup> components;

  bool is_trivial() const { return components.size() == 1; }
};

struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
};

struct ElementaryWitness {
  Subgroup kernel;  // the normal subgroup K
  std::uint64_t prime;
};

/// Largest quotient order for which normal subgroups are enumerated.
inline constexpr std::size_t kNormalEnumerationCap = 2000;

/// The maximal images C(x)/Z(G), x outside Z(G), as a partition of G/Z(G).
/// Empty if those images do not partition the quotient. Throws AbelianGroup.
std::optional<Partition> centralizer_partition(const FiniteGroup& g);

/// Sorts and deduplicates components into a Partition (no validation).
Partition make_partition(GroupPtr group, std::vector<Subgroup> components);

bool is_partition(const FiniteGroup& q, const std::vector<Subgroup>& components);
bool is_normal_partition(const FiniteGroup& q, const Partition& pi);

/// A proper non-trivial normal N with each component inside N or meeting it
/// trivially.
std::optional<Subgroup> is_nonsimple_partition(const FiniteGroup& q, const Partition& pi);

std::optional<ElementaryWitness> is_elementary_partition(const FiniteGroup& q, const Partition& pi);

/// All elements of order > p lie in one component. Throws NotApplicable
/// unless q is a non-abelian p-group and pi is non-trivial.
bool miller_check(const FiniteGroup& q, const Partition& pi);

/// Definitional Frobenius test for a given kernel and complement: K normal,
/// H meets each distinct conjugate trivially, |K||H| = |Q|, and K is exactly
/// the identity plus the elements lying in no conjugate of H.
bool is_frobenius_pair(const FiniteGroup& q, const Subgroup& kernel, const Subgroup& complement);

std::optional<FrobeniusStructure> find_frobenius_structure(const FiniteGroup& q);

bool is_frobenius_partition(const FiniteGroup& q, const Partition& pi);

/// Normal subgroups used as candidates by the partition predicates: the full
/// enumeration up to kNormalEnumerationCap, above it normal closures of the
/// given components and their pairwise joins.
std::vector<Subgroup> candidate_normal_subgroups(const FiniteGroup& q, const std::vector<Subgroup>& components);

}  // namespace nacent
