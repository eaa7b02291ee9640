#pragma once

// Adelic data model for a pair (K, A) over a global field F.
//
// A central simple algebra is described by its degree and its finitely many
// nonzero local invariants; a degree-k etale algebra by the partition of k
// into local degrees [K_w : F_v] at finitely many places.  Places are opaque
// labels.  Any datum accepted by the validators below is realized by an
// actual (K, A) over a global field: the partitions by weak approximation
// of etale algebras, the invariants by the reciprocity-based existence
// theorem for central simple algebras.  Places absent from the maps carry
// invariant 0; their partition is irrelevant to every verdict.

#include "csa_embed/exactq.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csa_embed {

enum class FieldKind { number, function };
enum class PlaceKind { finite, real, complex };

std::string_view to_string(FieldKind kind);
std::string_view to_string(PlaceKind kind);

/// A partition of a positive integer, parts kept in ascending order.
class Partition {
public:
    /// Sorts the parts.  Throws Error(malformed_partition) on an empty list or a zero part.
    explicit Partition(std::vector<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::uint64_t operator[](std::size_t i) const { return parts_[i]; }
    std::uint64_t sum() const;

    /// "(1,1,2)"
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint64_t> parts_;
};

struct LocalInvariant {
    PlaceKind kind = PlaceKind::finite;
    QZ inv;
};

struct LocalDecomposition {
    PlaceKind kind = PlaceKind::finite;
    Partition partition;
};

struct CsaSpec {
    FieldKind field_kind = FieldKind::number;
    std::uint64_t degree = 1;
    /// place id -> invariant.  Zero entries are allowed and only pin the place kind.
    std::map<std::string, LocalInvariant> invariants;
};

struct EtaleSpec {
    FieldKind field_kind = FieldKind::number;
    std::uint64_t degree = 1;
    std::map<std::string, LocalDecomposition> decompositions;
};

/// A CsaSpec that passed validation, with its global index and capacity.
class Csa {
public:
    const CsaSpec& spec() const { return spec_; }
    std::uint64_t degree() const { return spec_.degree; }
    /// Global index: lcm of all local indices.
    std::uint64_t delta0() const { return delta0_; }
    /// Capacity n, with deg A = n * delta0.
    std::uint64_t capacity() const { return capacity_; }

    /// Invariant at a place, 0 if absent.
    QZ invariant(const std::string& place) const;
    /// Local index d_v: order of the invariant.
    std::uint64_t local_index(const std::string& place) const;

    friend Csa validate_csa(const CsaSpec& raw);

private:
    Csa(CsaSpec spec, std::uint64_t delta0) : spec_(std::move(spec)), delta0_(delta0), capacity_(spec_.degree / delta0) {}

    CsaSpec spec_;
    std::uint64_t delta0_;
    std::uint64_t capacity_;
};

/// Checks reciprocity, archimedean rules and delta0 | degree.
Csa validate_csa(const CsaSpec& raw);

/// Checks every partition sums to k and respects archimedean rules.
void validate_etale(const EtaleSpec& raw);

/// A validated (K, A).  Immutable.
class Pair {
public:
    const Csa& csa() const { return csa_; }
    const EtaleSpec& etale() const { return etale_; }
    FieldKind field_kind() const { return csa_.spec().field_kind; }

    /// k = [K:F]
    std::uint64_t k() const { return etale_.degree; }
    std::uint64_t degree() const { return csa_.degree(); }
    std::uint64_t delta0() const { return csa_.delta0(); }
    std::uint64_t capacity() const { return csa_.capacity(); }

    /// Places with a nonzero invariant or a declared partition, sorted by id.
    const std::vector<std::string>& relevant_places() const { return relevant_; }
    bool is_relevant(const std::string& place) const;

    QZ invariant(const std::string& place) const { return csa_.invariant(place); }
    std::uint64_t local_index(const std::string& place) const { return csa_.local_index(place); }
    PlaceKind place_kind(const std::string& place) const;
    /// Declared partition at a place, if any.
    const Partition* partition(const std::string& place) const;

    friend Pair validate_pair(const EtaleSpec& etale, const CsaSpec& csa);

private:
    Pair(Csa csa, EtaleSpec etale, std::vector<std::string> relevant)
        : csa_(std::move(csa)), etale_(std::move(etale)), relevant_(std::move(relevant))
    {
    }

    Csa csa_;
    EtaleSpec etale_;
    std::vector<std::string> relevant_;
};

/// Validates both components and the pair conditions: k | deg A, a partition
/// at every ramified place, matching place kinds and field kinds.
Pair validate_pair(const EtaleSpec& etale, const CsaSpec& csa);

}  // namespace csa_embed
