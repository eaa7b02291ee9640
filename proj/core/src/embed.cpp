#include "csa_embed/embed.hpp"

#include "csa_embed/solutions.hpp"

#include <algorithm>

namespace csa_embed {

bool Obstruction::vanishes() const
{
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.value.is_zero(); });
}

std::vector<ObstructionEntry> Obstruction::nonzero() const
{
    std::vector<ObstructionEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
                 [](const auto& e) { return !e.value.is_zero(); });
    return out;
}

LocalClassSet local_class_set(const Pair& pair, const std::string& place)
{
    const LocalBrauerData data = local_data(pair, place);
    LocalClassSet set;
    set.place = place;
    set.target = pair.capacity() * data.s_v;
    set.ell.reserve(data.parts.size());
    for (const auto& part : data.parts)
        set.ell.push_back(part.ell_w);
    return set;
}

bool local_embeds(const Pair& pair, const std::string& place)
{
    const LocalClassSet set = local_class_set(pair, place);
    return positive_solvable(set.ell, set.target);
}

Integer count_local_classes(const Pair& pair, const std::string& place)
{
    const LocalClassSet set = local_class_set(pair, place);
    return count_positive_solutions(set.ell, set.target);
}

std::vector<LocalClass> enumerate_local_classes(const Pair& pair, const std::string& place, std::size_t limit)
{
    const LocalClassSet set = local_class_set(pair, place);
    std::vector<LocalClass> out;
    for (auto& x : enumerate_positive_solutions(set.ell, set.target, limit)) {
        LocalClass cls;
        cls.multiplicities.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            cls.multiplicities[i] = set.ell[i] * x[i];
        cls.x = std::move(x);
        out.push_back(std::move(cls));
    }
    return out;
}

SpecialVector special_vector(const Pair& pair, const std::string& place)
{
    const LocalBrauerData data = local_data(pair, place);
    const Integer scale = Integer(pair.capacity()) * data.s_v;
    SpecialVector vec;
    vec.place = place;
    vec.components.reserve(data.parts.size());
    for (const auto& part : data.parts)
        vec.components.emplace_back(scale * part.c_w, Integer(pair.k()));
    return vec;
}

Obstruction obstruction(const Pair& pair)
{
    Obstruction result;
    for (const auto& place : pair.relevant_places()) {
        const SpecialVector vec = special_vector(pair, place);
        for (std::size_t i = 0; i < vec.components.size(); ++i)
            result.entries.push_back({place, i, vec.components[i], qz_class(vec.components[i])});
    }
    return result;
}

bool global_embeds_via_capacity(const Pair& pair)
{
    const CapacityChain chain = capacity_chain(pair);
    return (Integer(pair.capacity()) * chain.c) % pair.k() == 0;
}

bool global_embeds_via_obstruction(const Pair& pair)
{
    return obstruction(pair).vanishes();
}

std::string_view to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::holds_embeds: return "holds_embeds";
    case VerdictKind::holds_local_failure: return "holds_local_failure";
    case VerdictKind::fails: return "fails";
    }
    return "fails";
}

PairVerdict hasse_for_pair(const Pair& pair)
{
    PairVerdict verdict;
    Obstruction obs = obstruction(pair);
    if (obs.vanishes())
        return verdict;
    for (const auto& place : pair.relevant_places()) {
        if (!local_embeds(pair, place)) {
            verdict.kind = VerdictKind::holds_local_failure;
            verdict.failing_place = place;
            return verdict;
        }
    }
    verdict.kind = VerdictKind::fails;
    verdict.obstruction = obs.nonzero();
    return verdict;
}

}  // namespace csa_embed
