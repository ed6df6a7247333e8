#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nacent/group.hpp"

namespace nacent {

enum class SpecKind { kConstruction, kCayleyFile, kPermutationFile };

/// Describes how to obtain a group: a registered constructor with its
/// parameters, or a file on disk.
struct GroupSpec {
  std::string name;
  SpecKind kind = SpecKind::kConstruction;
  std::map<std::string, std::int64_t> params;
  std::vector<GroupSpec> operands;                   // direct_product, semidirect_product
  std::vector<std::vector<std::uint32_t>> action;   // semidirect_product
  std::optional<std::filesystem::path> path;

  /// Canonical constructor notation, e.g. "heisenberg_frobenius(7,3)".
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses constructor notation such as "direct_product(dicyclic(2),cyclic(3))".
/// Throws ParseError.
GroupSpec parse_spec(std::string_view text);

/// Order the spec would build, without building it.
std::size_t spec_order(const GroupSpec& spec);

/// Builds the group for a spec. Identical specs give identical tables.
/// Throws InvalidParams, InvalidAction, OrderLimitExceeded.
FiniteGroup build(const GroupSpec& spec, std::size_t max_order = default_max_order());

/// The registered constructor names.
const std::vector<std::string>& constructor_names();

FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);
FiniteGroup dicyclic(std::size_t n);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order = default_max_order());

/// K x| H where action[i] is the automorphism of K (a permutation of its
/// element indices) assigned to H.generators()[i]. Elements are (k, h)
/// indexed k + |K| h with product (k1, h1)(k2, h2) = (k1 phi(h1)(k2), h1 h2).
FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& complement,
                               const std::vector<std::vector<std::uint32_t>>& action,
                               std::size_t max_order = default_max_order());

/// Triples (x, y, z) mod p, (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
FiniteGroup heisenberg(std::uint64_t p);

/// heisenberg(p) x| cyclic(q), the generator acting by
/// (x, y, z) -> (l x, l y, l^2 z) for the least l of multiplicative order q.
FiniteGroup heisenberg_frobenius(std::uint64_t p, std::uint64_t q, std::size_t max_order = default_max_order());

/// cyclic(q) x| cyclic(q - 1) acting through a primitive root.
FiniteGroup agl1(std::uint64_t q);

FiniteGroup sl23();

/// Least l in [2, p) with multiplicative order exactly q modulo p.
std::optional<std::uint64_t> element_of_order_mod(std::uint64_t p, std::uint64_t q);

/// Deterministic list of constructor specs with order <= max_order.
/// Throws InvalidParams when max_order is 0.
std::vector<GroupSpec> builtin_catalog(std::size_t max_order);

/// A group read from a file together with the data used to identify it.
struct LoadedGroup {
  std::string name;
  FiniteGroup group;
  std::string content_hash;  // 16 hex digits, FNV-1a over the file bytes
};

LoadedGroup read_group_file(const std::filesystem::path& path, std::size_t max_order = default_max_order());
FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order = default_max_order());

/// Writes the canonical Cayley-table form.
void save_group(const FiniteGroup& g, const std::filesystem::path& path, std::string_view name = "group");
std::string serialize_group(const FiniteGroup& g, std::string_view name);

/// Parses file contents; `origin` is used in diagnostics.
FiniteGroup parse_group_document(std::string_view text, std::string_view origin, std::string* name_out = nullptr,
                                 std::size_t max_order = default_max_order());

}  // namespace nacent
