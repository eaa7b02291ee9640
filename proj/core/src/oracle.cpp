#include "csa_embed/oracle.hpp"

#include "csa_embed/brauer.hpp"
#include "csa_embed/embed.hpp"
#include "csa_embed/error.hpp"
#include "csa_embed/hasse.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace csa_embed::oracle {

namespace {

// target - sum(ell), negative when unsolvable.
std::int64_t shifted_target(const DiophantineInstance& inst)
{
    std::int64_t rest = static_cast<std::int64_t>(inst.target);
    for (std::uint64_t l : inst.ell)
        rest -= static_cast<std::int64_t>(l);
    return rest;
}

// Counts leaves in a machine word: the count cannot exceed the number of
// calls, which no feasible run takes past 2^64.
void naive_from(const std::vector<std::uint64_t>& ell, std::size_t i, std::uint64_t rest, std::uint64_t& total)
{
    if (i == ell.size()) {
        total += rest == 0 ? 1 : 0;
        return;
    }
    for (std::uint64_t x = 1; x * ell[i] <= rest; ++x)
        naive_from(ell, i + 1, rest - x * ell[i], total);
}

}  // namespace

bool dp_positive_solvable(const DiophantineInstance& inst)
{
    if (inst.ell.empty())
        return inst.target == 0;
    const std::int64_t rest = shifted_target(inst);
    if (rest < 0)
        return false;
    std::vector<char> reachable(static_cast<std::size_t>(rest) + 1, 0);
    reachable[0] = 1;
    for (std::uint64_t l : inst.ell) {
        for (std::size_t r = l; r < reachable.size(); ++r) {
            if (reachable[r - l])
                reachable[r] = 1;
        }
    }
    return reachable.back() != 0;
}

Integer dp_count(const DiophantineInstance& inst)
{
    if (inst.ell.empty())
        return inst.target == 0 ? 1 : 0;
    const std::int64_t rest = shifted_target(inst);
    if (rest < 0)
        return 0;
    // Nonnegative solutions of sum l_i y_i = rest: the denumerant.
    std::vector<Integer> ways(static_cast<std::size_t>(rest) + 1, 0);
    ways[0] = 1;
    for (std::uint64_t l : inst.ell) {
        for (std::size_t r = l; r < ways.size(); ++r)
            ways[r] += ways[r - l];
    }
    return ways.back();
}

Integer naive_count(const DiophantineInstance& inst)
{
    if (inst.ell.empty())
        return inst.target == 0 ? 1 : 0;
    std::uint64_t total = 0;
    naive_from(inst.ell, 0, inst.target, total);
    return total;
}

// ---------------------------------------------------------------------------
// Generator

namespace {

template <typename T>
T pick(std::mt19937_64& rng, const std::vector<T>& items)
{
    std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
    return items[dist(rng)];
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Random partition of k with parts at most max_part.
Partition random_partition(std::mt19937_64& rng, std::uint64_t k, std::uint64_t max_part)
{
    std::vector<std::uint64_t> parts;
    std::uint64_t rest = k;
    while (rest > 0) {
        const std::uint64_t part = uniform(rng, 1, std::min(rest, max_part));
        parts.push_back(part);
        rest -= part;
    }
    return Partition(std::move(parts));
}

bool has_part_not_divisible(const Partition& lambda, std::uint64_t d)
{
    return std::any_of(lambda.parts().begin(), lambda.parts().end(), [d](auto k_w) { return k_w % d != 0; });
}

}  // namespace

Pair random_valid_pair(std::uint64_t seed, const GeneratorBounds& bounds)
{
    std::mt19937_64 rng(seed);
    const std::uint64_t max_delta = std::max<std::uint64_t>(bounds.max_delta, 1);
    const std::uint64_t max_k = std::max<std::uint64_t>(bounds.max_k, 1);

    CsaSpec csa;
    csa.field_kind = uniform(rng, 0, 9) == 0 ? FieldKind::function : FieldKind::number;
    csa.degree = uniform(rng, 1, max_delta);

    std::vector<std::uint64_t> k_choices;
    for (std::uint64_t d : divisors(csa.degree)) {
        if (d <= max_k)
            k_choices.push_back(d);
    }
    const std::uint64_t k = pick(rng, k_choices);
    const bool interesting = uniform(rng, 0, 1) == 1;

    std::vector<std::uint64_t> local_indices = divisors(csa.degree);
    std::vector<std::uint64_t> sharing;
    std::copy_if(local_indices.begin(), local_indices.end(), std::back_inserter(sharing),
                 [k](auto d) { return std::gcd(d, k) > 1; });

    const std::size_t place_count = uniform(rng, 0, bounds.max_places);
    QZ partial;
    for (std::size_t i = 0; i < place_count; ++i) {
        const std::string id = "p" + std::to_string(i);
        const bool balancing = i + 1 == place_count;
        LocalInvariant local;
        if (balancing) {
            local.inv = -partial;
        } else {
            std::uint64_t roll = csa.field_kind == FieldKind::number ? uniform(rng, 0, 19) : 19;
            if (roll < 3) {
                local.kind = PlaceKind::real;
                local.inv = (csa.degree % 2 == 0 && uniform(rng, 0, 1)) ? qz_reduce(1, 2) : QZ{};
            } else if (roll < 4) {
                local.kind = PlaceKind::complex;
            } else {
                const auto& pool = interesting && !sharing.empty() ? sharing : local_indices;
                const std::uint64_t d = pick(rng, pool);
                local.inv = qz_reduce(uniform(rng, 0, d - 1), d);
            }
        }
        partial = partial + local.inv;
        csa.invariants.emplace(id, local);
    }

    EtaleSpec etale;
    etale.field_kind = csa.field_kind;
    etale.degree = k;
    for (const auto& [id, local] : csa.invariants) {
        const std::uint64_t max_part = local.kind == PlaceKind::real ? 2 : local.kind == PlaceKind::complex ? 1 : k;
        etale.decompositions.emplace(id, LocalDecomposition{local.kind, random_partition(rng, k, max_part)});
    }
    // A few declared split places.
    const std::uint64_t extra = uniform(rng, 0, 2);
    for (std::uint64_t i = 0; i < extra; ++i)
        etale.decompositions.emplace("u" + std::to_string(i),
                                     LocalDecomposition{PlaceKind::finite, random_partition(rng, k, k)});

    if (interesting && k > 1) {
        // At least one place with gcd(d_v, k) > 1 and some k_w not divisible by d_v.
        std::vector<std::string> candidates;
        bool satisfied = false;
        for (const auto& [id, local] : csa.invariants) {
            const std::uint64_t d = to_u64(qz_order(local.inv));
            if (local.kind != PlaceKind::finite || std::gcd(d, k) == 1)
                continue;
            candidates.push_back(id);
            satisfied = satisfied || has_part_not_divisible(etale.decompositions.at(id).partition, d);
        }
        if (!satisfied && !candidates.empty()) {
            const std::string id = pick(rng, candidates);
            const std::uint64_t d = to_u64(qz_order(csa.invariants.at(id).inv));
            Partition lambda = random_partition(rng, k, k);
            for (int attempt = 0; attempt < 16 && !has_part_not_divisible(lambda, d); ++attempt)
                lambda = random_partition(rng, k, k);
            if (!has_part_not_divisible(lambda, d))
                lambda = Partition({k - 1, 1});
            etale.decompositions.at(id).partition = lambda;
        }
    }

    // Every d_v divides the degree, so their lcm does too.
    return validate_pair(etale, csa);
}

// ---------------------------------------------------------------------------
// Cross-check

bool CrossCheckReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string CrossCheckReport::first_violation() const
{
    for (const auto& c : checks) {
        if (!c.passed)
            return c.name;
    }
    return {};
}

namespace {

class Recorder {
public:
    // check() hands out references, so the vector must never reallocate.
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) { out_.reserve(capacity); }

    CheckResult& check(const std::string& name)
    {
        if (out_.size() == capacity)
            throw std::logic_error("too many checks");
        out_.push_back({name, true, {}});
        return out_.back();
    }

private:
    static constexpr std::size_t capacity = 32;
    std::vector<CheckResult>& out_;
};

void fail(CheckResult& result, const std::string& detail)
{
    if (result.passed) {
        result.passed = false;
        result.detail = detail;
    }
}

constexpr std::uint64_t max_cross_count_target = 100'000;

}  // namespace

CrossCheckReport cross_check(const Pair& pair)
{
    CrossCheckReport report;
    Recorder rec(report.checks);

    const CapacityChain chain = capacity_chain(pair);
    const Integer n = pair.capacity();
    const Integer k = pair.k();

    {
        auto& c = rec.check("brauer_identities");
        if (chain.delta0 % chain.delta_prime != 0 || chain.delta0 != chain.delta_prime * chain.c)
            fail(c, "delta' does not divide delta0");
        for (const auto& data : chain.local) {
            if (data.d_v * data.s_v != chain.delta0)
                fail(c, "d_v s_v != delta0 at " + data.place);
            for (const auto& part : data.parts) {
                if (part.d_prime_w * part.c_w != data.d_v)
                    fail(c, "d_v != d'_w c_w at " + data.place);
                if (!part.t_w.is_integer() || !part.t_w.is_positive())
                    fail(c, "t_w = " + part.t_w.str() + " not a positive integer at " + data.place);
                // Second route to d'_w: order of the restricted invariant.
                if (qz_order(part.inv_prime_w) != part.d_prime_w)
                    fail(c, "order of k_w inv_v differs from d_v/gcd(d_v,k_w) at " + data.place);
            }
        }
    }

    report.capacity_verdict = global_embeds_via_capacity(pair);
    report.obstruction_verdict = global_embeds_via_obstruction(pair);
    {
        auto& c = rec.check("criteria_agree");
        if (report.capacity_verdict != report.obstruction_verdict)
            fail(c, std::string("capacity ") + (report.capacity_verdict ? "true" : "false") + ", obstruction " +
                        (report.obstruction_verdict ? "true" : "false"));
    }

    bool all_local = true;
    {
        auto& alt = rec.check("alternate_formula");
        auto& sum = rec.check("sum_identity");
        auto& solv = rec.check("local_solvable");
        auto& count = rec.check("class_count");
        auto& integral = rec.check("special_vector_integral");
        for (const auto& data : chain.local) {
            const SpecialVector vec = special_vector(pair, data.place);
            const LocalClassSet set = local_class_set(pair, data.place);
            Rat weighted;
            for (std::size_t i = 0; i < data.parts.size(); ++i) {
                const Rat expected(n * chain.delta0, k * data.parts[i].d_prime_w);
                if (vec.components[i] != expected)
                    fail(alt, data.place + ": " + vec.components[i].str() + " vs " + expected.str());
                weighted = weighted + Rat(Integer(set.ell[i])) * vec.components[i];
                if (report.obstruction_verdict && !(vec.components[i].is_integer() && vec.components[i].is_positive()))
                    fail(integral, data.place + ": " + vec.components[i].str());
            }
            if (weighted != Rat(Integer(set.target)))
                fail(sum, data.place + ": " + weighted.str() + " != " + std::to_string(set.target));

            const DiophantineInstance inst{set.ell, set.target};
            const bool local = local_embeds(pair, data.place);
            all_local = all_local && local;
            if (local != dp_positive_solvable(inst))
                fail(solv, data.place);
            if (set.target <= max_cross_count_target) {
                const Integer classes = count_local_classes(pair, data.place);
                const Integer expected = dp_count(inst);
                if (classes != expected)
                    fail(count, data.place + ": " + classes.str() + " vs " + expected.str());
            }
        }
    }
    {
        auto& c = rec.check("global_implies_local");
        if (report.capacity_verdict && !all_local)
            fail(c, "condition (G) holds but some local class set is empty");
    }
    {
        auto& c = rec.check("maximal_degree_law");
        if (pair.k() == pair.degree() && report.obstruction_verdict != splits(pair))
            fail(c, "k = deg A but embedding and splitting disagree");
    }
    {
        auto& c = rec.check("known_family_never_fails");
        if (auto family = known_family_check(pair)) {
            if (hasse_for_pair(pair).kind == VerdictKind::fails)
                fail(c, std::string(to_string(*family)) + " pair fails");
        }
    }
    return report;
}

SelfcheckSummary run_selfcheck(std::uint64_t seed, std::uint64_t iterations, const GeneratorBounds& bounds,
                               unsigned threads)
{
    threads = std::max(1u, threads);
    std::vector<SelfcheckSummary> partials(threads);

    auto work = [&](unsigned worker) {
        auto& out = partials[worker];
        for (std::uint64_t i = worker; i < iterations; i += threads) {
            const std::uint64_t s = seed + i;
            const Pair pair = random_valid_pair(s, bounds);
            CrossCheckReport report = cross_check(pair);
            ++out.iterations;
            if (report.capacity_verdict)
                ++out.capacity_true;
            if (!report.capacity_verdict && hasse_for_pair(pair).kind == VerdictKind::fails)
                ++out.obstructed;
            if (!report.ok())
                out.failures.push_back({s, std::move(report)});
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
        for (auto& t : pool)
            t.join();
    }

    SelfcheckSummary total;
    for (auto& p : partials) {
        total.iterations += p.iterations;
        total.capacity_true += p.capacity_true;
        total.obstructed += p.obstructed;
        for (auto& f : p.failures)
            total.failures.push_back(std::move(f));
    }
    std::sort(total.failures.begin(), total.failures.end(),
              [](const auto& a, const auto& b) { return a.seed < b.seed; });
    return total;
}

}  // namespace csa_embed::oracle
