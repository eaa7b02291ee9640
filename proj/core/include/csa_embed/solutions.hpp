#pragma once

// Positive integer solutions of  l_1 x_1 + ... + l_t x_t = target,  x_i >= 1.

#include "csa_embed/exactq.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace csa_embed {

/// Decides solvability without a table over the target: after removing the
/// all-ones baseline, computes for every residue r mod min(l) the least
/// representable value congruent to r (shortest paths on residues).  Cost
/// O(min(l) * t * log), independent of the target's size.
bool positive_solvable(std::span<const std::uint64_t> ell, std::uint64_t target);

/// Exact number of positive solutions.  O(t * target) big-integer additions;
/// throws Error(invalid_argument) when target exceeds max_count_target.
Integer count_positive_solutions(std::span<const std::uint64_t> ell, std::uint64_t target);

inline constexpr std::uint64_t max_count_target = 10'000'000;

/// Solutions in lexicographic order, at most `limit` of them.
std::vector<std::vector<std::uint64_t>> enumerate_positive_solutions(std::span<const std::uint64_t> ell,
                                                                     std::uint64_t target, std::size_t limit);

}  // namespace csa_embed
