#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace nacent {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Global cap on group order. Defaults to 5000; the NACENT_MAX_ORDER
/// environment variable overrides it at first use.
std::size_t default_max_order();

/// How much of the group axioms to re-check when building a table.
enum class Validation {
  /// Full associativity for n <= 512; above that, the exact generator-based
  /// (Light) test, O(n^2 * generators).
  kAuto,
  /// Always check every triple.
  kFull,
  /// Identity, inverse and Latin-square checks only. For tables derived from
  /// an already validated group (quotients, restrictions to a subgroup).
  kDerived,
};

/// A finite group held as an explicit Cayley table with identity at index 0.
///
/// Immutable after construction; element orders, inverses and a small
/// generating set are cached.
class FiniteGroup {
 public:
  /// Validates `table` (row-major n*n) and relabels the identity to index 0
  /// by swapping it with element 0. Throws NotAGroup naming the first failed
  /// law and a witness.
  static FiniteGroup from_cayley_table(std::vector<Element> table, std::size_t n,
                                       Validation policy = Validation::kAuto);
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& rows,
                                       Validation policy = Validation::kAuto);

  /// Group generated by permutations of 0..m-1 under left-to-right composition
  /// ((a*b)(i) = b(a(i))). Elements are numbered breadth-first from the
  /// identity, generators applied in the given order.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                       std::size_t max_order = default_max_order());

  std::size_t order() const noexcept { return n_; }

  Element mul(Element a, Element b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const noexcept { return inverses_[a]; }
  Element conj(Element x, Element g) const noexcept { return mul(mul(inverses_[g], x), g); }  // g^-1 x g
  Element commutator(Element x, Element y) const noexcept { return mul(mul(inverses_[x], inverses_[y]), mul(x, y)); }
  Element pow(Element x, std::uint64_t k) const noexcept;

  std::uint32_t element_order(Element x) const noexcept { return orders_[x]; }
  std::span<const std::uint32_t> orders() const noexcept { return orders_; }
  std::span<const Element> inverses() const noexcept { return inverses_; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  const std::vector<Element>& table() const noexcept { return table_; }

  /// Greedy generating set: scanning elements by index, each element not yet
  /// in the generated subgroup is added.
  std::span<const Element> generators() const noexcept { return generators_; }

  /// Least common multiple of the element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

  bool valid(Element x) const noexcept { return x < n_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  FiniteGroup(std::vector<Element> table, std::size_t n, Validation policy);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::uint64_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline std::uint32_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }
inline std::uint64_t exponent(const FiniteGroup& g) { return g.exponent(); }

}  // namespace nacent
