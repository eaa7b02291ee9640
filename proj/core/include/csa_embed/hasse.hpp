#pragma once

// Hasse principle for degree pairs (k, delta).
//
// A local datum at one place of a degree-delta division algebra is a
// partition lambda of k (the local degrees of K) together with the local
// capacity s | delta; the local index is then d = delta / s.  With
//     l_i = k_i / gcd(k_i, d),   x_i = s gcd(k_i, d) / k,
// the datum is locally embeddable iff  sum l_i y_i = s  has a positive
// solution.  LD(k, delta) collects the embeddable data.  The principle holds
// for (k, delta) when every x in LD(k, delta) is integral, and a single
// non-integral x yields an explicit counterexample pair on four places.

#include "csa_embed/embed.hpp"
#include "csa_embed/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace csa_embed {

/// Partitions of k in reverse-lexicographic order of their descending form:
/// (k), (k-1,1), (k-2,2), (k-2,1,1), ..., (1,...,1).  Each is yielded in the
/// ascending canonical form of Partition.
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t k);

    /// Advances; false once every partition has been produced.
    bool next();
    Partition current() const;
    /// Current partition in descending order, without allocation.
    const std::vector<std::uint64_t>& descending() const { return parts_; }

private:
    std::uint64_t k_;
    std::vector<std::uint64_t> parts_;
    bool started_ = false;
};

std::vector<Partition> partitions(std::uint64_t k);

/// Positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct LdEntry {
    Partition lambda;
    std::uint64_t s = 1;
    std::uint64_t d = 1;
    std::vector<std::uint64_t> ell;
    std::vector<Rat> x;

    bool integral() const;
    /// "λ=(1,1) s=3 d=2 ℓ=(1,1) x=(3/2,3/2)"
    std::string str() const;
};

/// nullopt when the local class set is empty.  Throws Error(invalid_argument)
/// when s does not divide delta, k does not divide delta or lambda does not sum to k.
std::optional<LdEntry> ld_entry(const Partition& lambda, std::uint64_t s, std::uint64_t k, std::uint64_t delta);

struct ScanOptions {
    /// Scans with k above this refuse to start.
    std::uint64_t max_k = 60;
    /// Keep scanning after the first witness.
    bool all_witnesses = false;
    /// With all_witnesses, stop after this many (0 = no bound).
    std::size_t max_witnesses = 0;
};

inline constexpr std::uint64_t default_max_k = 60;

std::vector<LdEntry> ld_set(std::uint64_t k, std::uint64_t delta, const ScanOptions& options = {});

struct HasseVerdict {
    bool holds = true;
    std::vector<LdEntry> witnesses;
    /// False when the scan stopped early at a witness.
    bool exhaustive = true;
    std::uint64_t entries_examined = 0;
};

/// Scans partitions (outer, reverse-lex) and divisors (inner, ascending).
HasseVerdict hasse_pair_decide(std::uint64_t k, std::uint64_t delta, const ScanOptions& options = {});

/// The witness lambda = (1,...,1), s = delta / p^e for the least prime p | k
/// with p^e || delta and k <= delta / p^e.  nullopt when no prime qualifies.
std::optional<LdEntry> prime_witness(std::uint64_t k, std::uint64_t delta);

/// Four finite places v1, v1', v2, v2' carrying invariants 1/d, -1/d, 1/delta,
/// -1/delta; K has partition lambda at v1, v1' and is a field, partition (k),
/// at v2, v2'.  A is a division algebra of degree delta.  The result is
/// verified (local embeddings everywhere, global obstruction nonzero) before
/// it is returned.  Throws Error(not_a_witness) on an integral entry.
Pair construct_counterexample(std::uint64_t k, std::uint64_t delta, const LdEntry& witness);

enum class KnownFamily { maximal_degree, splits, division_or_matrix_everywhere };

std::string_view to_string(KnownFamily family);

/// First sufficient condition under which the principle holds for the pair.
std::optional<KnownFamily> known_family_check(const Pair& pair);

}  // namespace csa_embed
