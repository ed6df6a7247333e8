#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nacent/group.hpp"
#include "nacent/subgroup.hpp"

namespace nacent {

/// Distinct centralizers of a group, in order of their least witness.
struct CentStats {
  std::vector<Subgroup> cent;
  std::vector<Element> witness;              // least x with C(x) == cent[i]
  std::vector<bool> abelian;                 // per cent entry
  std::vector<std::size_t> nacent;           // indices into cent
  std::vector<std::uint32_t> centralizer_of;  // element -> index into cent

  std::size_t cent_count() const { return cent.size(); }
  std::size_t nacent_count() const { return nacent.size(); }
};

/// Computes C(x) once per cyclic subgroup generator class and for central
/// elements reuses C(1) = G.
CentStats cent_stats(const FiniteGroup& g);

enum class Category { kAbelian, kCA, kTwoNacent, kManyNacent };
enum class Case { kA, kB, kC };

const char* to_string(Category c);
const char* to_string(Case c);

struct CaseData {
  std::optional<std::uint64_t> prime;               // cases A and B
  std::optional<std::size_t> hughes_order;          // |H_p(G/Z)|
  std::optional<std::size_t> kernel_order;          // case C: |C(a)/Z|
  std::optional<std::size_t> complement_order;      // case C: |C(x)/Z|
  std::optional<Element> complement_witness;        // case C: x
};

struct CaseMatch {
  Case which;
  CaseData data;
};

struct Classification {
  Category category = Category::kAbelian;
  std::optional<Case> which;
  std::optional<Element> witness_a;
  CaseData data;
  std::vector<Case> matched;  // every case whose hypotheses hold, in test order
  std::size_t nacent_count = 0;
};

/// Both directions of the two-nacent characterization.
struct IffVerdict {
  bool forward = true;   // |nacent| = 2 implies some case holds
  bool converse = true;  // a case holding for a candidate implies |nacent| = 2
  std::optional<Element> converse_witness;
  std::vector<Case> converse_cases;
};

struct ConsequenceChecks {
  std::optional<bool> a, b, c, d, e, f, normal_ca, ca_group;

  std::optional<std::size_t> cent_ca;            // |Cent(C(a))| inside C(a)
  std::optional<std::size_t> ca_mod_center;      // |C(a)/Z|
  std::optional<std::uint64_t> formula_prime;    // p used by the partition counts
  std::optional<std::size_t> frobenius_count;    // |Cent(C(a))| + |C(a)/Z| + 1
  std::optional<std::size_t> partition_count;    // |Cent(C(a))| + |G/Z|/p + 1
  std::optional<std::size_t> literal_count;      // |Cent(C(a))| + |G|/p + 1
  std::vector<std::string> formulas_matched;
  std::optional<std::size_t> g_mod_ca;           // |G/C(a)|
  std::optional<std::size_t> p_part_order, abelian_part_order;
  std::optional<std::uint64_t> p_part_prime;
};

struct PartitionDiagnostics {
  std::optional<bool> exists, normal, nonsimple, elementary, frobenius;
  std::size_t components = 0;
  std::optional<std::uint64_t> elementary_prime;
  std::optional<std::size_t> nonsimple_witness_order;
  // Structural facts about two-nacent groups: C(s) <= C(a) for s in
  // C(a)\Z, and C(x) meets C(a) and every other outside centralizer in Z.
  std::optional<bool> inner_centralizers_contained, outside_meet_center;
};

struct VerificationReport {
  std::string group_id;
  std::size_t order = 0, center_order = 0, cent_count = 0, nacent_count = 0;
  Classification classification;
  std::optional<IffVerdict> iff;
  ConsequenceChecks consequences;
  PartitionDiagnostics partition;
  std::vector<std::string> violations;

  bool failed() const { return !violations.empty(); }
};

/// Throws TheoremViolation when |nacent| = 2 but no case matches, or when a
/// case's hypotheses hold for some candidate although |nacent| != 2.
Classification classify(const FiniteGroup& g);

VerificationReport verify_iff(const FiniteGroup& g, std::string group_id = {});
VerificationReport verify_consequences(const FiniteGroup& g, std::string group_id = {});

/// Classification, both iff directions, every consequence and the partition
/// diagnostics in one pass.
VerificationReport verify_group(const FiniteGroup& g, std::string group_id = {});

}  // namespace nacent
