#pragma once

// Local and global Brauer arithmetic for a pair (K, A), A = Mat_n(Delta).
//
// At a place v of F the division part Delta_v = Mat_{s_v}(D_v) with
// deg D_v = d_v.  Over a place w | v of K with k_w = [K_w : F_v]:
//
//   c_w  = gcd(d_v, k_w)      capacity of D_v (x) K_w
//   d'_w = d_v / c_w          index of D_v (x) K_w, also order of k_w * inv_v
//   l_w  = k_w / c_w
//
// Globally delta0 = lcm d_v, delta' = lcm d'_w, c = delta0 / delta' is the
// capacity of Delta (x) K, and s_v c_w = c t_w for an integer t_w.

#include "csa_embed/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csa_embed {

struct PartData {
    std::uint64_t k_w = 1;
    std::uint64_t c_w = 1;
    std::uint64_t d_prime_w = 1;
    std::uint64_t ell_w = 1;
    QZ inv_prime_w;  // k_w * inv_v
    Rat t_w;         // s_v c_w / c
};

struct LocalBrauerData {
    std::string place;
    PlaceKind kind = PlaceKind::finite;
    QZ inv;
    std::uint64_t d_v = 1;
    std::uint64_t s_v = 1;
    std::vector<PartData> parts;
};

struct CapacityChain {
    std::uint64_t delta0 = 1;
    std::uint64_t delta_prime = 1;
    std::uint64_t c = 1;
    /// One entry per relevant place, in place order.
    std::vector<LocalBrauerData> local;
};

/// Throws Error(underspecified_pair) when no partition is declared at v.
LocalBrauerData local_data(const Pair& pair, const std::string& place);

CapacityChain capacity_chain(const Pair& pair);

/// delta' alone, without the per-place tables.
std::uint64_t index_over_k(const Pair& pair);

/// True iff K splits A: d_v | k_w at every part of every relevant place.
bool splits(const Pair& pair);

}  // namespace csa_embed
