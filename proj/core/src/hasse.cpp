#include "csa_embed/hasse.hpp"

#include "csa_embed/brauer.hpp"
#include "csa_embed/error.hpp"
#include "csa_embed/solutions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csa_embed {

PartitionStream::PartitionStream(std::uint64_t k) : k_(k)
{
    if (k == 0)
        throw Error(ErrorKind::invalid_argument, "cannot partition 0");
}

bool PartitionStream::next()
{
    if (!started_) {
        started_ = true;
        parts_.assign(1, k_);
        return true;
    }
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1)
        --i;
    if (i == 0)
        return false;
    --i;
    const std::uint64_t largest = parts_[i] - 1;
    std::uint64_t rest = (parts_.size() - i - 1) + 1;
    parts_.resize(i);
    parts_.push_back(largest);
    while (rest > 0) {
        const std::uint64_t part = std::min(largest, rest);
        parts_.push_back(part);
        rest -= part;
    }
    return true;
}

Partition PartitionStream::current() const
{
    return Partition(parts_);
}

std::vector<Partition> partitions(std::uint64_t k)
{
    std::vector<Partition> out;
    PartitionStream stream(k);
    while (stream.next())
        out.push_back(stream.current());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0)
            continue;
        low.push_back(i);
        if (i != n / i)
            high.push_back(n / i);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool LdEntry::integral() const
{
    return std::all_of(x.begin(), x.end(), [](const Rat& r) { return r.is_integer(); });
}

std::string LdEntry::str() const
{
    std::string out = "λ=" + lambda.str() + " s=" + std::to_string(s) + " d=" + std::to_string(d) + " ℓ=(";
    for (std::size_t i = 0; i < ell.size(); ++i)
        out += (i ? "," : "") + std::to_string(ell[i]);
    out += ") x=(";
    for (std::size_t i = 0; i < x.size(); ++i)
        out += (i ? "," : "") + x[i].str();
    return out + ")";
}

namespace {

void check_degrees(std::uint64_t k, std::uint64_t delta)
{
    if (k == 0 || delta == 0 || delta % k != 0)
        throw Error(ErrorKind::invalid_argument,
                    "need positive k dividing delta, got k=" + std::to_string(k) + " delta=" + std::to_string(delta));
}

LdEntry make_entry(std::vector<std::uint64_t> ascending, std::uint64_t s, std::uint64_t k, std::uint64_t delta)
{
    LdEntry entry{Partition(std::move(ascending)), s, delta / s, {}, {}};
    entry.ell.reserve(entry.lambda.size());
    entry.x.reserve(entry.lambda.size());
    for (std::uint64_t k_i : entry.lambda.parts()) {
        const std::uint64_t g = std::gcd(k_i, entry.d);
        entry.ell.push_back(k_i / g);
        entry.x.emplace_back(Integer(s) * g, Integer(k));
    }
    return entry;
}

// Non-integral x without materializing the entry: x_i = s g_i / k.
bool has_fractional_component(const std::vector<std::uint64_t>& parts, std::uint64_t s, std::uint64_t d, std::uint64_t k)
{
    for (std::uint64_t k_i : parts) {
        if ((Integer(s) * std::gcd(k_i, d)) % k != 0)
            return true;
    }
    return false;
}

// (p, p^e) for each prime p with p^e exactly dividing n, p ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_powers(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
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

void check_guard(std::uint64_t k, const ScanOptions& options)
{
    if (k > options.max_k)
        throw Error(ErrorKind::scan_limit,
                    "k=" + std::to_string(k) + " exceeds " + std::to_string(options.max_k) + "; raise the limit explicitly");
}

}  // namespace

std::optional<LdEntry> ld_entry(const Partition& lambda, std::uint64_t s, std::uint64_t k, std::uint64_t delta)
{
    check_degrees(k, delta);
    if (s == 0 || delta % s != 0)
        throw Error(ErrorKind::invalid_argument, std::to_string(s) + " does not divide " + std::to_string(delta));
    if (lambda.sum() != k)
        throw Error(ErrorKind::invalid_argument, lambda.str() + " is not a partition of " + std::to_string(k));
    LdEntry entry = make_entry(lambda.parts(), s, k, delta);
    if (!positive_solvable(entry.ell, s))
        return std::nullopt;
    return entry;
}

std::vector<LdEntry> ld_set(std::uint64_t k, std::uint64_t delta, const ScanOptions& options)
{
    check_degrees(k, delta);
    check_guard(k, options);
    const auto divs = divisors(delta);
    std::vector<LdEntry> out;
    PartitionStream stream(k);
    while (stream.next()) {
        const Partition lambda = stream.current();
        for (std::uint64_t s : divs) {
            if (auto entry = ld_entry(lambda, s, k, delta))
                out.push_back(std::move(*entry));
        }
    }
    return out;
}

HasseVerdict hasse_pair_decide(std::uint64_t k, std::uint64_t delta, const ScanOptions& options)
{
    check_degrees(k, delta);
    check_guard(k, options);
    const auto divs = divisors(delta);
    HasseVerdict verdict;
    PartitionStream stream(k);
    std::vector<std::uint64_t> ell;
    while (stream.next()) {
        const auto& parts = stream.descending();
        for (std::uint64_t s : divs) {
            ++verdict.entries_examined;
            const std::uint64_t d = delta / s;
            if (!has_fractional_component(parts, s, d, k))
                continue;
            ell.clear();
            for (std::uint64_t k_i : parts)
                ell.push_back(k_i / std::gcd(k_i, d));
            if (!positive_solvable(ell, s))
                continue;
            verdict.holds = false;
            verdict.witnesses.push_back(make_entry({parts.rbegin(), parts.rend()}, s, k, delta));
            const bool more = options.all_witnesses &&
                              (options.max_witnesses == 0 || verdict.witnesses.size() < options.max_witnesses);
            if (!more) {
                verdict.exhaustive = false;
                return verdict;
            }
        }
    }
    return verdict;
}

std::optional<LdEntry> prime_witness(std::uint64_t k, std::uint64_t delta)
{
    if (k <= 1 || delta == 0 || delta % k != 0)
        return std::nullopt;
    for (auto [p, prime_power] : prime_powers(delta)) {
        const std::uint64_t s = delta / prime_power;
        if (k % p == 0 && k <= s)
            return ld_entry(Partition(std::vector<std::uint64_t>(k, 1)), s, k, delta);
    }
    return std::nullopt;
}

Pair construct_counterexample(std::uint64_t k, std::uint64_t delta, const LdEntry& witness)
{
    auto entry = ld_entry(witness.lambda, witness.s, k, delta);
    if (!entry)
        throw Error(ErrorKind::invalid_argument, witness.lambda.str() + ", s=" + std::to_string(witness.s) +
                                                     " is not locally embeddable");
    if (entry->integral())
        throw Error(ErrorKind::not_a_witness, entry->str());

    // A is a division algebra of degree delta: lcm(d, delta) = delta.
    CsaSpec csa;
    csa.field_kind = FieldKind::number;
    csa.degree = delta;
    const Integer d = entry->d;
    csa.invariants["v1"] = {PlaceKind::finite, qz_reduce(1, d)};
    csa.invariants["v1'"] = {PlaceKind::finite, qz_reduce(-1, d)};
    csa.invariants["v2"] = {PlaceKind::finite, qz_reduce(1, delta)};
    csa.invariants["v2'"] = {PlaceKind::finite, qz_reduce(-1, delta)};

    EtaleSpec etale;
    etale.field_kind = FieldKind::number;
    etale.degree = k;
    const Partition field(std::vector<std::uint64_t>{k});
    etale.decompositions.emplace("v1", LocalDecomposition{PlaceKind::finite, entry->lambda});
    etale.decompositions.emplace("v1'", LocalDecomposition{PlaceKind::finite, entry->lambda});
    etale.decompositions.emplace("v2", LocalDecomposition{PlaceKind::finite, field});
    etale.decompositions.emplace("v2'", LocalDecomposition{PlaceKind::finite, field});

    Pair pair = validate_pair(etale, csa);
    for (const auto& place : pair.relevant_places()) {
        if (!local_embeds(pair, place))
            throw std::logic_error("counterexample fails to embed locally at " + place);
    }
    if (global_embeds_via_obstruction(pair))
        throw std::logic_error("counterexample embeds globally");
    return pair;
}

std::string_view to_string(KnownFamily family)
{
    switch (family) {
    case KnownFamily::maximal_degree: return "maximal_degree";
    case KnownFamily::splits: return "splits";
    case KnownFamily::division_or_matrix_everywhere: return "division_or_matrix_everywhere";
    }
    return "";
}

std::optional<KnownFamily> known_family_check(const Pair& pair)
{
    if (pair.k() == pair.degree())
        return KnownFamily::maximal_degree;
    if (splits(pair))
        return KnownFamily::splits;
    // A_v is a matrix algebra iff d_v = 1 and a division algebra iff d_v = deg A.
    const auto& invariants = pair.csa().spec().invariants;
    const bool dichotomy = std::all_of(invariants.begin(), invariants.end(), [&](const auto& item) {
        const Integer d_v = qz_order(item.second.inv);
        return d_v == 1 || d_v == pair.degree();
    });
    if (dichotomy)
        return KnownFamily::division_or_matrix_everywhere;
    return std::nullopt;
}

}  // namespace csa_embed
