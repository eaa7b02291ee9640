#pragma once

// Brute-force checks that stay independent of the production code paths:
// table-based solvers for positive linear Diophantine equations, a naive
// recursive counter, a seeded generator of valid pairs, and the cross-check
// that pits the capacity criterion against the obstruction criterion.

#include "csa_embed/exactq.hpp"
#include "csa_embed/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csa_embed::oracle {

struct DiophantineInstance {
    std::vector<std::uint64_t> ell;
    std::uint64_t target = 1;
};

/// Reachability table over the target after substituting x_i = y_i + 1.
bool dp_positive_solvable(const DiophantineInstance& inst);
/// Coin-change table over the target after the same substitution.
Integer dp_count(const DiophantineInstance& inst);
/// Plain recursion over x_1, x_2, ...; exponential, for small targets only.
Integer naive_count(const DiophantineInstance& inst);

struct GeneratorBounds {
    std::uint64_t max_k = 24;
    std::uint64_t max_delta = 60;
    std::size_t max_places = 6;
};

/// Deterministic in the seed.  Always passes validate_pair.
Pair random_valid_pair(std::uint64_t seed, const GeneratorBounds& bounds = {});

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CrossCheckReport {
    bool capacity_verdict = false;
    bool obstruction_verdict = false;
    std::vector<CheckResult> checks;

    bool ok() const;
    /// Name of the first failed check, empty when ok.
    std::string first_violation() const;
};

/// Runs every identity on one pair.  Violations are report content.
CrossCheckReport cross_check(const Pair& pair);

struct SelfcheckFailure {
    std::uint64_t seed = 0;
    CrossCheckReport report;
};

struct SelfcheckSummary {
    std::uint64_t iterations = 0;
    std::uint64_t capacity_true = 0;
    std::uint64_t obstructed = 0;  // local embeddings everywhere but no global one
    std::vector<SelfcheckFailure> failures;
};

/// Pair i uses seed `seed + i`.  Work is split over `threads` workers by
/// seed index; failures are reported in seed order.
SelfcheckSummary run_selfcheck(std::uint64_t seed, std::uint64_t iterations, const GeneratorBounds& bounds,
                               unsigned threads = 1);

}  // namespace csa_embed::oracle
