#include "csa_embed/solutions.hpp"

#include "csa_embed/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>

namespace csa_embed {

namespace {

constexpr auto unreachable = std::numeric_limits<std::uint64_t>::max();

// target minus sum(ell), or nullopt when negative.
std::optional<std::uint64_t> residual(std::span<const std::uint64_t> ell, std::uint64_t target)
{
    std::uint64_t rest = target;
    for (std::uint64_t l : ell) {
        if (l == 0)
            throw Error(ErrorKind::invalid_argument, "coefficients must be positive");
        if (l > rest)
            return std::nullopt;
        rest -= l;
    }
    return rest;
}

bool nonnegative_representable(std::span<const std::uint64_t> ell, std::uint64_t value)
{
    const std::uint64_t modulus = *std::min_element(ell.begin(), ell.end());
    if (modulus == 1 || value == 0)
        return true;

    std::vector<std::uint64_t> least(modulus, unreachable);
    using Item = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    least[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [v, r] = queue.top();
        queue.pop();
        if (v != least[r])
            continue;
        if (v > value)
            break;  // nothing smaller left to settle
        for (std::uint64_t l : ell) {
            if (l == modulus)
                continue;
            const std::uint64_t next = v + l;
            const std::uint64_t nr = next % modulus;
            if (next < least[nr]) {
                least[nr] = next;
                queue.emplace(next, nr);
            }
        }
    }
    return least[value % modulus] <= value;
}

}  // namespace

bool positive_solvable(std::span<const std::uint64_t> ell, std::uint64_t target)
{
    if (ell.empty())
        return target == 0;
    auto rest = residual(ell, target);
    return rest && nonnegative_representable(ell, *rest);
}

Integer count_positive_solutions(std::span<const std::uint64_t> ell, std::uint64_t target)
{
    if (ell.empty())
        return target == 0 ? 1 : 0;
    if (target > max_count_target)
        throw Error(ErrorKind::invalid_argument, "target " + std::to_string(target) + " too large to count");
    if (!residual(ell, target))
        return 0;

    // ways[r]: positive solutions using the parts processed so far with sum r.
    std::vector<Integer> ways(target + 1, 0);
    std::vector<Integer> next(target + 1, 0);
    ways[0] = 1;
    for (std::uint64_t l : ell) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t r = l; r <= target; ++r)
            next[r] = next[r - l] + ways[r - l];
        std::swap(ways, next);
    }
    return ways[target];
}

std::vector<std::vector<std::uint64_t>> enumerate_positive_solutions(std::span<const std::uint64_t> ell,
                                                                     std::uint64_t target, std::size_t limit)
{
    std::vector<std::vector<std::uint64_t>> out;
    if (ell.empty() || limit == 0 || !positive_solvable(ell, target))
        return out;

    std::vector<std::uint64_t> x(ell.size(), 0);
    std::function<void(std::size_t, std::uint64_t)> descend = [&](std::size_t i, std::uint64_t rest) {
        if (out.size() >= limit)
            return;
        if (i + 1 == ell.size()) {
            if (rest % ell[i] == 0 && rest >= ell[i]) {
                x[i] = rest / ell[i];
                out.push_back(x);
            }
            return;
        }
        const auto tail = ell.subspan(i + 1);
        for (std::uint64_t xi = 1; xi * ell[i] < rest && out.size() < limit; ++xi) {
            const std::uint64_t left = rest - xi * ell[i];
            if (!positive_solvable(tail, left))
                continue;
            x[i] = xi;
            descend(i + 1, left);
        }
    };
    descend(0, target);
    return out;
}

}  // namespace csa_embed
