// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Each criterion also carries a wall-clock budget; exceeding it is a failure.
#include "csa_embed/brauer.hpp"
#include "csa_embed/embed.hpp"
#include "csa_embed/hasse.hpp"
#include "csa_embed/json_io.hpp"
#include "csa_embed/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace csa_embed;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string fixture(const std::string& name)
{
    return std::string(CSA_EMBED_FIXTURES_DIR) + "/" + name;
}

bool all_equal(const std::vector<Rat>& xs, const Rat& value)
{
    for (const Rat& x : xs)
        if (!(x == value))
            return false;
    return true;
}

Outcome golden_example()
{
    Outcome o;
    const Pair pair = read_pair_file(fixture("worked_example.json"));
    o.expect(pair.k() == 8 && pair.degree() == 24, "fixture shape");
    for (const std::string v : {"v1", "v2"}) {
        o.expect(local_data(pair, v).d_v == 4, v + ": d_v != 4");
        const LocalClassSet set = local_class_set(pair, v);
        o.expect(set.ell == std::vector<std::uint64_t>{1, 1, 1, 1} && set.target == 6, v + ": class set is not sum x = 6");
        o.expect(local_embeds(pair, v), v + ": local class set empty");
        o.expect(count_local_classes(pair, v) == 10, v + ": class count != 10");
        const SpecialVector sv = special_vector(pair, v);
        o.expect(sv.components.size() == 4 && all_equal(sv.components, Rat(3, 2)), v + ": special vector != 3/2");
    }
    o.expect(!global_embeds_via_capacity(pair), "capacity criterion true");
    o.expect(!global_embeds_via_obstruction(pair), "obstruction criterion true");
    o.expect(hasse_for_pair(pair).kind == VerdictKind::fails, "verdict is not fails");
    return o;
}

Outcome capacity_chain_on_fixture()
{
    Outcome o;
    const Pair pair = read_pair_file(fixture("worked_example.json"));
    const CapacityChain chain = capacity_chain(pair);
    o.expect(chain.delta0 == 4, "delta0 != 4");
    o.expect(chain.delta_prime == 2, "delta' != 2");
    o.expect(chain.c == 2, "c != 2");
    o.expect(pair.capacity() == 6, "n != 6");
    o.expect((pair.capacity() * chain.c) % pair.k() != 0, "8 divides n c");
    o.expect(global_embeds_via_capacity(pair) == global_embeds_via_obstruction(pair), "criteria disagree");
    o.expect(!global_embeds_via_capacity(pair), "embeds");
    return o;
}

Outcome second_family()
{
    Outcome o;
    const Pair pair = read_pair_file(fixture("family_p2_q3_m2.json"));
    o.expect(pair.k() == 4 && pair.degree() == 12, "fixture shape");
    for (const auto& v : pair.relevant_places()) {
        const LocalBrauerData data = local_data(pair, v);
        o.expect(data.d_v == 4, v + ": d_v != 4");
        for (const auto& w : data.parts)
            o.expect(w.k_w == 2, v + ": k_w != 2");
        o.expect(local_embeds(pair, v), v + ": local class set empty");
        o.expect(all_equal(special_vector(pair, v).components, Rat(3, 2)), v + ": x_w != 3/2");
    }
    o.expect(hasse_for_pair(pair).kind == VerdictKind::fails, "verdict is not fails");
    return o;
}

Outcome scan_and_realize(std::uint64_t k, std::uint64_t delta)
{
    Outcome o;
    const HasseVerdict verdict = hasse_pair_decide(k, delta);
    o.expect(!verdict.holds && !verdict.witnesses.empty(), "scan holds");
    if (!o.ok)
        return o;
    const LdEntry& w = verdict.witnesses.front();
    o.expect(!w.integral(), "witness is integral");
    const Pair pair = construct_counterexample(k, delta, w);
    const Pair reread = pair_from_json(json::parse(pair_to_json(pair).dump()));
    for (const auto& v : reread.relevant_places())
        o.expect(local_embeds(reread, v), "no local embedding at " + v);
    o.expect(!global_embeds_via_obstruction(reread), "obstruction vanishes");
    o.expect(!global_embeds_via_capacity(reread), "capacity criterion true");
    o.expect(hasse_for_pair(reread).kind == VerdictKind::fails, "pair verdict is not fails");
    std::ostringstream s;
    s << "witness " << w.str();
    if (o.ok)
        o.detail = s.str();
    return o;
}

// (p, p^e) for each prime power exactly dividing n.
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_factors(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        std::uint64_t q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.emplace_back(p, q);
    }
    if (n > 1)
        out.emplace_back(n, n);
    return out;
}

Outcome prime_sweep()
{
    Outcome o;
    ScanOptions options;
    options.max_k = 200;
    std::size_t scanned = 0;
    for (std::uint64_t delta = 2; delta <= 200 && o.ok; ++delta) {
        const auto factors = prime_power_factors(delta);
        if (factors.size() < 2)
            continue;
        for (std::uint64_t k : divisors(delta)) {
            if (k == 1)
                continue;
            bool hypothesis = false;
            for (const auto& [p, q] : factors)
                hypothesis = hypothesis || (k % p == 0 && k <= delta / q);
            if (!hypothesis)
                continue;
            ++scanned;
            if (hasse_pair_decide(k, delta, options).holds)
                o.expect(false, "(" + std::to_string(k) + ", " + std::to_string(delta) + ") holds");
        }
        const std::uint64_t p1 = factors.front().first;
        ++scanned;
        if (hasse_pair_decide(p1, delta, options).holds)
            o.expect(false, "smallest prime: (" + std::to_string(p1) + ", " + std::to_string(delta) + ") holds");
    }
    if (o.ok)
        o.detail = std::to_string(scanned) + " scans";
    return o;
}

Outcome known_families()
{
    Outcome o;
    std::size_t matched = 0;
    for (std::uint64_t seed = 0; seed < 10'000; ++seed) {
        const Pair pair = oracle::random_valid_pair(seed);
        if (!known_family_check(pair))
            continue;
        ++matched;
        if (hasse_for_pair(pair).kind == VerdictKind::fails)
            o.expect(false, "seed " + std::to_string(seed) + " fails");
    }
    o.expect(matched > 0, "no pair matched a known family");
    if (o.ok)
        o.detail = std::to_string(matched) + " of 10000 pairs in a known family";
    return o;
}

Outcome equivalence_gate()
{
    Outcome o;
    const oracle::GeneratorBounds bounds{.max_k = 24, .max_delta = 60, .max_places = 6};
    const auto summary = oracle::run_selfcheck(0, 10'000, bounds, 1);
    if (!summary.failures.empty()) {
        const auto& f = summary.failures.front();
        o.expect(false, std::to_string(summary.failures.size()) + " violations, first: seed " +
                            std::to_string(f.seed) + " " + f.report.first_violation());
    }
    if (o.ok)
        o.detail = std::to_string(summary.obstructed) + " obstructed, " + std::to_string(summary.capacity_true) +
                   " embedding pairs";
    return o;
}

// Every nondecreasing ell with at most 6 entries and entry sum <= 40, against
// every target <= 40.  An ell with larger sum has no positive solution for any
// target in range; both counters are checked to return 0 on the boundary sum 41.
Outcome combinatorics_oracle()
{
    Outcome o;
    std::size_t instances = 0;
    std::vector<std::uint64_t> ell;
    auto check = [&](std::uint64_t sum) {
        for (std::uint64_t target = 1; target <= 40; ++target) {
            const oracle::DiophantineInstance inst{ell, target};
            ++instances;
            if (oracle::dp_count(inst) != oracle::naive_count(inst)) {
                std::ostringstream s;
                s << "mismatch at target " << target << " sum " << sum;
                o.expect(false, s.str());
            }
        }
    };
    auto rec = [&](auto&& self, std::uint64_t lo, std::uint64_t sum) -> void {
        if (!ell.empty())
            check(sum);
        if (ell.size() == 6)
            return;
        for (std::uint64_t l = lo; sum + l <= 41; ++l) {
            ell.push_back(l);
            self(self, l, sum + l);
            ell.pop_back();
        }
    };
    rec(rec, 1, 0);
    if (o.ok)
        o.detail = std::to_string(instances) + " instances";
    return o;
}

struct Criterion {
    std::string name;
    double budget_ms;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {"1 worked example: 10 classes, x = 3/2, both criteria false, fails", 10, golden_example},
        {"2 capacity chain: delta0 = 4, delta' = 2, c = 2, 8 does not divide 12", 10, capacity_chain_on_fixture},
        {"3 second family (p,q,m) = (2,3,2): local sets nonempty, x = 3/2, fails", 10, second_family},
    };
    for (const auto& [k, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 6}, {8, 24}, {2, 12}, {4, 12}}) {
        criteria.push_back({"4 scan (" + std::to_string(k) + "," + std::to_string(delta) +
                                ") fails and its counterexample verifies end to end",
                            1000, [k, delta] { return scan_and_realize(k, delta); }});
    }
    criteria.push_back({"5 prime-factor sweep over delta <= 200 fails as predicted", 60'000, prime_sweep});
    criteria.push_back({"6 known positive families never fail on 10^4 pairs", 60'000, known_families});
    criteria.push_back({"7 capacity and obstruction criteria agree on 10^4 pairs", 120'000, equivalence_gate});
    criteria.push_back({"8 table count equals naive count, target <= 40, t <= 6", 30'000, combinatorics_oracle});

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && ms > c.budget_ms) {
            outcome.ok = false;
            outcome.detail = "over budget";
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("[%s] %s (%.1f ms / %.0f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.name.c_str(), ms, c.budget_ms,
                    outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
