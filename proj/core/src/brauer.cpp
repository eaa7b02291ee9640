#include "csa_embed/brauer.hpp"

#include "csa_embed/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csa_embed {

namespace {

// Everything except t_w, which needs the global capacity c.
LocalBrauerData local_tables(const Pair& pair, const std::string& place)
{
    const Partition* partition = pair.partition(place);
    if (partition == nullptr)
        throw Error(ErrorKind::underspecified_pair, "no partition declared at " + place);

    LocalBrauerData data;
    data.place = place;
    data.kind = pair.place_kind(place);
    data.inv = pair.invariant(place);
    data.d_v = pair.local_index(place);
    data.s_v = pair.delta0() / data.d_v;
    data.parts.reserve(partition->size());
    for (std::uint64_t k_w : partition->parts()) {
        PartData part;
        part.k_w = k_w;
        part.c_w = std::gcd(data.d_v, k_w);
        part.d_prime_w = data.d_v / part.c_w;
        part.ell_w = k_w / part.c_w;
        part.inv_prime_w = qz_scale(data.inv, k_w);
        data.parts.push_back(std::move(part));
    }
    return data;
}

void fill_t(LocalBrauerData& data, std::uint64_t c)
{
    for (auto& part : data.parts)
        part.t_w = Rat(Integer(data.s_v) * part.c_w, Integer(c));
}

}  // namespace

std::uint64_t index_over_k(const Pair& pair)
{
    // Places outside the relevant set have d_v = 1, hence d'_w = 1, and do
    // not change the lcm.
    std::uint64_t delta_prime = 1;
    for (const auto& place : pair.relevant_places()) {
        const std::uint64_t d_v = pair.local_index(place);
        if (d_v == 1)
            continue;
        for (std::uint64_t k_w : pair.partition(place)->parts())
            delta_prime = std::lcm(delta_prime, d_v / std::gcd(d_v, k_w));
    }
    return delta_prime;
}

LocalBrauerData local_data(const Pair& pair, const std::string& place)
{
    LocalBrauerData data = local_tables(pair, place);
    fill_t(data, pair.delta0() / index_over_k(pair));
    return data;
}

CapacityChain capacity_chain(const Pair& pair)
{
    CapacityChain chain;
    chain.delta0 = pair.delta0();
    for (const auto& place : pair.relevant_places()) {
        chain.local.push_back(local_tables(pair, place));
        for (const auto& part : chain.local.back().parts)
            chain.delta_prime = std::lcm(chain.delta_prime, part.d_prime_w);
    }
    chain.c = chain.delta0 / chain.delta_prime;
    for (auto& data : chain.local)
        fill_t(data, chain.c);
    return chain;
}

bool splits(const Pair& pair)
{
    return index_over_k(pair) == 1;
}

}  // namespace csa_embed
