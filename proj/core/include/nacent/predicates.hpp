#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nacent/group.hpp"
#include "nacent/subgroup.hpp"

namespace nacent {

/// (prime, multiplicity) pairs, primes increasing.
struct PrimeFactorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t value() const;
  std::vector<std::uint64_t> primes() const;
  std::uint64_t part(std::uint64_t p) const;  // p^k exactly dividing the value
};

PrimeFactorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const Subgroup& h);
bool is_cyclic(const FiniteGroup& g);
bool is_cyclic(const Subgroup& h);

/// The prime p when the order is a positive power of p. Empty for the
/// trivial group.
std::optional<std::uint64_t> is_p_group(const FiniteGroup& g);
std::optional<std::uint64_t> is_p_group(const Subgroup& h);

/// A Sylow p-subgroup grown through normalizers. Throws PrimeDoesNotDivide.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Largest normal p-subgroup: intersection of the conjugates of a Sylow.
Subgroup p_core(const FiniteGroup& g, std::uint64_t p);

/// Lower central series terms, starting at G and ending where it stabilises.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const Subgroup& h);

Subgroup fitting_subgroup(const FiniteGroup& g);

/// Subgroup generated by the elements whose order is not p.
Subgroup hughes_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Least prime p with G not a p-group and H_p(G) != G.
std::optional<std::uint64_t> is_hughes_thompson_type(const FiniteGroup& g);

/// Every centralizer of a non-central element is abelian.
bool is_ca_group(const FiniteGroup& g);
bool is_ca_group(const Subgroup& h);

struct PTimesAbelian {
  Subgroup p_part;
  Subgroup abelian_part;
  std::optional<std::uint64_t> prime;  // empty only when H is trivial
};

/// Splits a nilpotent H as P x A with P a CA-group of prime-power order and
/// A abelian. For abelian H the Sylow subgroup of the largest prime is taken
/// as P. Empty when two or more Sylow subgroups are non-abelian or P is not
/// CA. Throws NotNilpotent.
std::optional<PTimesAbelian> decompose_p_times_abelian(const Subgroup& h);

/// All normal subgroups, sorted by (size, members). Built as joins of the
/// normal closures of conjugacy classes.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

}  // namespace nacent
