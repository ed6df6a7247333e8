#pragma once

#include <memory>
#include <span>
#include <vector>

#include "nacent/bitset.hpp"
#include "nacent/group.hpp"

namespace nacent {

/// A subgroup of a fixed parent group, stored as a membership bitset.
///
/// Holds a non-owning pointer to the parent; the parent must outlive it.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, Bitset members)
      : parent_(&parent), members_(std::move(members)), size_(members_.count()) {}

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const Bitset& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return size_; }
  bool contains(Element x) const noexcept { return members_.test(x); }
  bool is_trivial() const noexcept { return size_ == 1; }
  bool is_whole() const noexcept { return size_ == parent_->order(); }
  std::vector<Element> elements() const;

  /// Greedy generating set (lowest index first).
  std::vector<Element> generators() const;

  bool is_subset_of(const Subgroup& o) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.parent_ == b.parent_ && a.members_ == b.members_; }

 private:
  const FiniteGroup* parent_;
  Bitset members_;
  std::size_t size_;
};

/// Projection G -> G/N with the quotient group tabled on cosets. Cosets are
/// numbered by their least member index.
struct QuotientMap {
  const FiniteGroup* parent;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<Element> projection;
  std::vector<Element> representatives;  // least member of each coset

  /// Image of a subgroup of the parent.
  Subgroup image(const Subgroup& h) const;
};

/// A subgroup extracted as a standalone group, with index maps both ways.
struct RestrictedGroup {
  GroupPtr group;
  std::vector<Element> to_parent;  // standalone index -> parent index
  std::vector<Element> from_parent;  // parent index -> standalone index, or parent order if outside

  Subgroup lift(const Subgroup& inner, const FiniteGroup& parent) const;
  Subgroup lower(const Subgroup& outer) const;
};

Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup center(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> seed);
Subgroup generated_subgroup(const FiniteGroup& g, std::initializer_list<Element> seed);

/// Smallest normal subgroup containing `seed`.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seed);

/// Join of two subgroups (the subgroup they generate).
Subgroup join(const Subgroup& a, const Subgroup& b);

enum class NormalityCheck { kGenerators, kDefinitional };

bool is_normal(const FiniteGroup& g, const Subgroup& h, NormalityCheck how = NormalityCheck::kGenerators);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup commutator_subgroup(const FiniteGroup& g);

/// g^-1 H g.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element by);

/// Throws NotNormal if `n` is not normal in `g`.
QuotientMap quotient(const FiniteGroup& g, const Subgroup& n);

/// Elements of the parent projecting into `s` (a subgroup of qm.quotient).
Subgroup preimage(const QuotientMap& qm, const Subgroup& s);

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);

/// Re-tables `h` as its own group, elements in increasing parent index.
RestrictedGroup restrict_to(const Subgroup& h);

/// Orbits of conjugation, each sorted, ordered by least member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

}  // namespace nacent
