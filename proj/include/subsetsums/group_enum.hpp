#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subsetsums/group.hpp"

namespace subsetsums {

// Prime factorization with primes ascending: n = prod p_i^{e_i}.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// Partitions of k with parts descending, listed in reverse-lexicographic
// order: [k], [k-1,1], ..., [1,1,...,1].
std::vector<std::vector<std::uint32_t>> partitions_desc(std::uint32_t k);

// All isomorphism types of abelian groups of order n, one GroupSpec each.
// Enumeration order: for every prime p | n (ascending) pick a partition
// (lambda_1 >= lambda_2 >= ...) of its exponent, contributing factors
// Z_{p^lambda_j}; combinations are emitted with the last prime's partition
// varying fastest. Order 8 yields Z_8, Z_4 x Z_2, Z_2^3.
std::vector<GroupSpec> abelian_groups_of_order(
    std::uint64_t n, std::uint64_t max_order = GroupSpec::kDefaultMaxOrder);

}  // namespace subsetsums
