#pragma once

// Embedding verdicts for a pair (K, A).
//
// Locally, conjugacy classes of embeddings K_v -> A_v correspond to positive
// integer vectors x with  sum_w l_w x_w = n s_v  (the local class set E_v).
// Globally, K embeds in A iff  k | n c  (capacity criterion), and
// equivalently iff every component of the special vector
//     x_w = n s_v c_w / k
// is an integer (obstruction criterion).  The two are implemented
// independently so that each checks the other.

#include "csa_embed/brauer.hpp"
#include "csa_embed/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace csa_embed {

struct LocalClassSet {
    std::string place;
    std::vector<std::uint64_t> ell;  // l_w per part
    std::uint64_t target = 1;        // n s_v, the capacity of A_v
};

struct LocalClass {
    std::vector<std::uint64_t> x;
    /// Multiplicities n_i = l_i x_i of the simple modules; they sum to the capacity of A_v.
    std::vector<std::uint64_t> multiplicities;
};

struct SpecialVector {
    std::string place;
    std::vector<Rat> components;
};

struct ObstructionEntry {
    std::string place;
    std::size_t part = 0;
    Rat x;     // x_w
    QZ value;  // x_w mod Z
};

struct Obstruction {
    /// Every part of every relevant place, in place then part order.
    std::vector<ObstructionEntry> entries;

    bool vanishes() const;
    std::vector<ObstructionEntry> nonzero() const;
};

// All per-place operations throw Error(underspecified_pair) when v has no
// declared partition.
LocalClassSet local_class_set(const Pair& pair, const std::string& place);
bool local_embeds(const Pair& pair, const std::string& place);
Integer count_local_classes(const Pair& pair, const std::string& place);
std::vector<LocalClass> enumerate_local_classes(const Pair& pair, const std::string& place, std::size_t limit);
SpecialVector special_vector(const Pair& pair, const std::string& place);

/// Classes of x_w at the relevant places.  Every other place w of K lies over
/// a split place with undeclared partition, where c_w = 1, s_v = delta0 and
/// x_w = n delta0 / k = deg A / k, an integer because k | deg A.  Those
/// components are therefore zero and omitted.
Obstruction obstruction(const Pair& pair);

/// k | n c
bool global_embeds_via_capacity(const Pair& pair);
/// Obstruction vanishes.
bool global_embeds_via_obstruction(const Pair& pair);

enum class VerdictKind { holds_embeds, holds_local_failure, fails };

std::string_view to_string(VerdictKind kind);

struct PairVerdict {
    VerdictKind kind = VerdictKind::holds_embeds;
    /// Set for holds_local_failure: first relevant place with empty E_v.
    std::string failing_place;
    /// Nonzero components, set for fails.
    std::vector<ObstructionEntry> obstruction;
};

PairVerdict hasse_for_pair(const Pair& pair);

}  // namespace csa_embed
