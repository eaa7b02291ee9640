#include "csa_embed/model.hpp"

#include "csa_embed/error.hpp"

#include <algorithm>
#include <numeric>

namespace csa_embed {

std::string_view to_string(FieldKind kind)
{
    return kind == FieldKind::number ? "number" : "function";
}

std::string_view to_string(PlaceKind kind)
{
    switch (kind) {
    case PlaceKind::finite: return "finite";
    case PlaceKind::real: return "real";
    case PlaceKind::complex: return "complex";
    }
    return "finite";
}

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw Error(ErrorKind::malformed_partition, "empty partition");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw Error(ErrorKind::malformed_partition, "zero part");
    std::sort(parts_.begin(), parts_.end());
}

std::uint64_t Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Partition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

QZ Csa::invariant(const std::string& place) const
{
    auto it = spec_.invariants.find(place);
    return it == spec_.invariants.end() ? QZ{} : it->second.inv;
}

std::uint64_t Csa::local_index(const std::string& place) const
{
    // d_v divides delta0 which divides the degree, so this never narrows.
    return to_u64(qz_order(invariant(place)));
}

Csa validate_csa(const CsaSpec& raw)
{
    if (raw.degree == 0)
        throw Error(ErrorKind::invalid_argument, "degree must be positive");

    QZ total;
    Integer delta0 = 1;
    for (const auto& [id, local] : raw.invariants) {
        if (id.empty())
            throw Error(ErrorKind::malformed_input, "empty place id");
        const Integer d = qz_order(local.inv);
        if (local.kind != PlaceKind::finite) {
            if (raw.field_kind == FieldKind::function)
                throw Error(ErrorKind::no_archimedean_places, "place " + id);
            if (local.kind == PlaceKind::complex && d != 1)
                throw Error(ErrorKind::archimedean_constraint, "complex place " + id + " has invariant " + local.inv.str());
            if (local.kind == PlaceKind::real && d > 2)
                throw Error(ErrorKind::archimedean_constraint, "real place " + id + " has invariant " + local.inv.str());
        }
        total = total + local.inv;
        delta0 = lcm(delta0, d);
    }
    if (!total.is_zero())
        throw Error(ErrorKind::not_realizable, "invariants sum to " + total.str());
    if (Integer(raw.degree) % delta0 != 0)
        throw Error(ErrorKind::degree_incompatible,
                    "index " + delta0.str() + " does not divide degree " + std::to_string(raw.degree));
    return Csa(raw, to_u64(delta0));
}

void validate_etale(const EtaleSpec& raw)
{
    if (raw.degree == 0)
        throw Error(ErrorKind::invalid_argument, "etale degree must be positive");
    for (const auto& [id, local] : raw.decompositions) {
        if (id.empty())
            throw Error(ErrorKind::malformed_input, "empty place id");
        if (local.partition.sum() != raw.degree)
            throw Error(ErrorKind::malformed_partition,
                        "partition " + local.partition.str() + " at " + id + " does not sum to " + std::to_string(raw.degree));
        if (local.kind == PlaceKind::finite)
            continue;
        if (raw.field_kind == FieldKind::function)
            throw Error(ErrorKind::no_archimedean_places, "place " + id);
        const std::uint64_t max_part = local.kind == PlaceKind::real ? 2 : 1;
        if (local.partition.parts().back() > max_part)
            throw Error(ErrorKind::archimedean_constraint,
                        std::string(to_string(local.kind)) + " place " + id + " has partition " + local.partition.str());
    }
}

bool Pair::is_relevant(const std::string& place) const
{
    return std::binary_search(relevant_.begin(), relevant_.end(), place);
}

PlaceKind Pair::place_kind(const std::string& place) const
{
    if (auto it = csa_.spec().invariants.find(place); it != csa_.spec().invariants.end())
        return it->second.kind;
    if (auto it = etale_.decompositions.find(place); it != etale_.decompositions.end())
        return it->second.kind;
    return PlaceKind::finite;
}

const Partition* Pair::partition(const std::string& place) const
{
    auto it = etale_.decompositions.find(place);
    return it == etale_.decompositions.end() ? nullptr : &it->second.partition;
}

Pair validate_pair(const EtaleSpec& etale, const CsaSpec& csa_spec)
{
    Csa csa = validate_csa(csa_spec);
    if (etale.field_kind != csa_spec.field_kind)
        throw Error(ErrorKind::malformed_input, "field kinds of K and A differ");
    if (etale.degree == 0 || csa.degree() % etale.degree != 0)
        throw Error(ErrorKind::degree_divisibility,
                    std::to_string(etale.degree) + " does not divide " + std::to_string(csa.degree()));
    validate_etale(etale);

    std::vector<std::string> relevant;
    for (const auto& [id, local] : csa_spec.invariants) {
        auto it = etale.decompositions.find(id);
        if (it != etale.decompositions.end() && it->second.kind != local.kind)
            throw Error(ErrorKind::malformed_input, "place " + id + " declared with two kinds");
        if (local.inv.is_zero())
            continue;
        if (it == etale.decompositions.end())
            throw Error(ErrorKind::underspecified_pair, "no partition at ramified place " + id);
        relevant.push_back(id);
    }
    for (const auto& [id, local] : etale.decompositions)
        relevant.push_back(id);
    std::sort(relevant.begin(), relevant.end());
    relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
    return Pair(std::move(csa), etale, std::move(relevant));
}

}  // namespace csa_embed
