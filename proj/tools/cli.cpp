#include "cli.hpp"

#include "csa_embed/brauer.hpp"
#include "csa_embed/embed.hpp"
#include "csa_embed/error.hpp"
#include "csa_embed/hasse.hpp"
#include "csa_embed/json_io.hpp"
#include "csa_embed/oracle.hpp"
#include "csa_embed/solutions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace csa_embed::cli {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
};

std::string join(const std::vector<std::uint64_t>& values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s + ")";
}

std::string place_label(const Pair& pair, const std::string& place)
{
    const PlaceKind kind = pair.place_kind(place);
    if (kind == PlaceKind::finite)
        return place + " (finite)";
    return place + " (" + std::string(to_string(kind)) + ", archimedean)";
}

void print_json(const Context& ctx, const json& j)
{
    ctx.out << j.dump(2) << '\n';
}

std::uint64_t resolve_max_k(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("CSA_EMBED_MAX_K")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::invalid_argument, std::string("CSA_EMBED_MAX_K=") + env + " is not a number");
        }
    }
    return default_max_k;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Context& ctx, const std::string& file)
{
    const Pair pair = read_pair_file(file);
    if (ctx.json) {
        print_json(ctx, json{{"valid", true},
                             {"degree", pair.degree()},
                             {"delta0", pair.delta0()},
                             {"n", pair.capacity()},
                             {"k", pair.k()},
                             {"relevant_places", pair.relevant_places()},
                             {"pair", pair_to_json(pair)}});
        return exit_ok;
    }
    ctx.out << "valid pair over a " << to_string(pair.field_kind()) << " field\n"
            << "  deg A = " << pair.degree() << ", index δ₀ = " << pair.delta0() << ", capacity n = " << pair.capacity()
            << "\n  [K:F] = " << pair.k() << "\n  relevant places:";
    for (const auto& place : pair.relevant_places())
        ctx.out << ' ' << place_label(pair, place);
    ctx.out << '\n';
    return exit_ok;
}

int cmd_local(const Context& ctx, const std::string& file, const std::string& only, std::size_t limit)
{
    const Pair pair = read_pair_file(file);
    std::vector<std::string> places = pair.relevant_places();
    if (!only.empty())
        places = {only};

    json report = json::array();
    for (const auto& place : places) {
        const LocalBrauerData data = local_data(pair, place);
        const LocalClassSet set = local_class_set(pair, place);
        const bool embeds = local_embeds(pair, place);
        std::optional<Integer> count;
        if (set.target <= max_count_target)
            count = count_local_classes(pair, place);
        const auto classes = enumerate_local_classes(pair, place, limit);

        if (ctx.json) {
            json item = to_json(set);
            item["kind"] = to_string(data.kind);
            item["d_v"] = data.d_v;
            item["s_v"] = data.s_v;
            item["embeds"] = embeds;
            item["count"] = count ? integer_to_json(*count) : json(nullptr);
            json listed = json::array();
            for (const auto& cls : classes)
                listed.push_back({{"x", cls.x}, {"multiplicities", cls.multiplicities}});
            item["classes"] = std::move(listed);
            report.push_back(std::move(item));
            continue;
        }
        ctx.out << "place " << place_label(pair, place) << ": inv = " << data.inv << ", d_v = " << data.d_v
                << ", s_v = " << data.s_v << "\n  ℓ = " << join(set.ell) << ", target n·s_v = " << set.target << '\n'
                << "  local embedding: " << (embeds ? "yes" : "no");
        if (count)
            ctx.out << ", " << count->str() << " conjugacy class" << (*count == 1 ? "" : "es");
        ctx.out << '\n';
        for (const auto& cls : classes)
            ctx.out << "    x = " << join(cls.x) << "  n_i = " << join(cls.multiplicities) << '\n';
    }
    if (ctx.json)
        print_json(ctx, json{{"places", std::move(report)}});
    return exit_ok;
}

void print_obstruction_entries(const Context& ctx, const std::vector<ObstructionEntry>& entries)
{
    ctx.out << "  " << std::left << std::setw(10) << "place" << std::setw(6) << "part" << std::setw(12) << "x_w"
            << "class\n";
    for (const auto& e : entries)
        ctx.out << "  " << std::setw(10) << e.place << std::setw(6) << e.part << std::setw(12) << e.x.str()
                << e.value.str() << '\n';
    ctx.out << std::right;
}

int cmd_global(const Context& ctx, const std::string& file)
{
    const Pair pair = read_pair_file(file);
    const CapacityChain chain = capacity_chain(pair);
    const bool via_capacity = global_embeds_via_capacity(pair);
    const bool via_obstruction = global_embeds_via_obstruction(pair);
    const PairVerdict verdict = hasse_for_pair(pair);
    const Integer nc = Integer(pair.capacity()) * chain.c;
    const bool agree = via_capacity == via_obstruction;
    const int code = via_capacity && agree ? exit_ok : exit_failure;

    if (ctx.json) {
        json j{{"capacity_chain", to_json(chain)},
               {"n", pair.capacity()},
               {"k", pair.k()},
               {"n_c", integer_to_json(nc)},
               {"capacity_criterion", via_capacity},
               {"obstruction_criterion", via_obstruction},
               {"agree", agree},
               {"verdict", to_json(verdict)}};
        if (auto family = known_family_check(pair))
            j["known_family"] = to_string(*family);
        print_json(ctx, j);
        return code;
    }

    ctx.out << "capacity chain\n"
            << "  δ₀ = " << chain.delta0 << ", δ′ = " << chain.delta_prime << ", c = δ₀/δ′ = " << chain.c
            << ", n = " << pair.capacity() << ", k = " << pair.k() << '\n';
    ctx.out << "  " << std::left << std::setw(10) << "place" << std::setw(9) << "kind" << std::setw(8) << "inv"
            << std::setw(5) << "d_v" << std::setw(5) << "s_v" << std::setw(5) << "k_w" << std::setw(5) << "c_w"
            << std::setw(6) << "d'_w" << std::setw(5) << "l_w" << "t_w\n";
    for (const auto& data : chain.local) {
        for (const auto& part : data.parts) {
            ctx.out << "  " << std::setw(10) << data.place << std::setw(9) << to_string(data.kind) << std::setw(8)
                    << data.inv.str() << std::setw(5) << data.d_v << std::setw(5) << data.s_v << std::setw(5)
                    << part.k_w << std::setw(5) << part.c_w << std::setw(6) << part.d_prime_w << std::setw(5)
                    << part.ell_w << part.t_w.str() << '\n';
        }
    }
    ctx.out << std::right;
    ctx.out << "capacity criterion (k | n·c): " << pair.k() << (via_capacity ? " | " : " ∤ ") << nc << " -> "
            << (via_capacity ? "embeds" : "no embedding") << '\n';
    ctx.out << "obstruction criterion (x̄ = 0): " << (via_obstruction ? "x̄ = 0 -> embeds" : "x̄ ≠ 0 -> no embedding")
            << '\n';
    ctx.out << "criteria agree: " << (agree ? "yes" : "NO") << '\n';
    if (auto family = known_family_check(pair))
        ctx.out << "known positive family: " << to_string(*family) << '\n';
    ctx.out << "verdict: " << to_string(verdict.kind);
    if (verdict.kind == VerdictKind::holds_local_failure)
        ctx.out << " (no local embedding at " << verdict.failing_place << ')';
    if (verdict.kind == VerdictKind::fails)
        ctx.out << " (local embeddings everywhere, none globally)";
    ctx.out << '\n';
    if (verdict.kind == VerdictKind::fails) {
        ctx.out << "obstruction:\n";
        print_obstruction_entries(ctx, verdict.obstruction);
    }
    if (!agree)
        ctx.err << "internal error: capacity and obstruction criteria disagree\n";
    return code;
}

int cmd_obstruction(const Context& ctx, const std::string& file)
{
    const Pair pair = read_pair_file(file);
    const Obstruction obs = obstruction(pair);
    const int code = obs.vanishes() ? exit_ok : exit_failure;
    if (ctx.json) {
        print_json(ctx, to_json(obs));
        return code;
    }
    ctx.out << "special vector classes x̄_w at relevant places (all other components vanish)\n";
    print_obstruction_entries(ctx, obs.entries);
    ctx.out << (obs.vanishes() ? "x̄ = 0: K embeds in A\n" : "x̄ ≠ 0: K does not embed in A\n");
    return code;
}

int cmd_hasse_pair(const Context& ctx, std::uint64_t k, std::uint64_t delta, bool all, std::size_t max_witnesses,
                   const std::optional<std::uint64_t>& max_k)
{
    ScanOptions options;
    options.max_k = resolve_max_k(max_k);
    options.all_witnesses = all;
    options.max_witnesses = max_witnesses;
    const HasseVerdict verdict = hasse_pair_decide(k, delta, options);
    const int code = verdict.holds ? exit_ok : exit_failure;
    if (ctx.json) {
        json j = to_json(verdict);
        j["k"] = k;
        j["delta"] = delta;
        print_json(ctx, j);
        return code;
    }
    ctx.out << "(k, δ) = (" << k << ", " << delta << "): Hasse principle " << (verdict.holds ? "holds" : "fails")
            << '\n';
    if (verdict.holds)
        ctx.out << "  every x(λ, s) over " << verdict.entries_examined << " local data is integral\n";
    for (const auto& w : verdict.witnesses)
        ctx.out << "  witness: " << w.str() << '\n';
    return code;
}

int cmd_counterexample(const Context& ctx, std::uint64_t k, std::uint64_t delta, const std::string& output,
                       const std::optional<std::uint64_t>& max_k)
{
    ScanOptions options;
    options.max_k = resolve_max_k(max_k);
    const HasseVerdict verdict = hasse_pair_decide(k, delta, options);
    if (verdict.holds) {
        if (ctx.json)
            print_json(ctx, json{{"holds", true}, {"k", k}, {"delta", delta}});
        else
            ctx.out << "(k, δ) = (" << k << ", " << delta << "): Hasse principle holds; no counterexample exists\n";
        return exit_ok;
    }
    const LdEntry& witness = verdict.witnesses.front();
    const Pair pair = construct_counterexample(k, delta, witness);

    // Re-verify from the serialized form before anything is written.
    const json document = pair_to_json(pair);
    const Pair reread = pair_from_json(json::parse(document.dump()));
    const PairVerdict check = hasse_for_pair(reread);
    if (check.kind != VerdictKind::fails || global_embeds_via_capacity(reread))
        throw std::logic_error("constructed counterexample failed re-verification");

    if (!output.empty()) {
        std::ofstream file(output);
        if (!file)
            throw Error(ErrorKind::malformed_input, "cannot write " + output);
        file << document.dump(2) << '\n';
    }
    if (ctx.json) {
        print_json(ctx, json{{"holds", false},
                             {"k", k},
                             {"delta", delta},
                             {"witness", to_json(witness)},
                             {"pair", document},
                             {"verdict", to_json(check)}});
    } else {
        ctx.out << "(k, δ) = (" << k << ", " << delta << "): Hasse principle fails\n"
                << "  witness: " << witness.str() << '\n'
                << "  verified: local embeddings at every place, obstruction nonzero\n";
        if (output.empty())
            ctx.out << document.dump(2) << '\n';
        else
            ctx.out << "  written to " << output << '\n';
    }
    return exit_failure;
}

int cmd_ld(const Context& ctx, std::uint64_t k, std::uint64_t delta, const std::optional<std::uint64_t>& max_k)
{
    ScanOptions options;
    options.max_k = resolve_max_k(max_k);
    const auto entries = ld_set(k, delta, options);
    if (ctx.json) {
        json list = json::array();
        for (const auto& e : entries)
            list.push_back(to_json(e));
        print_json(ctx, json{{"k", k}, {"delta", delta}, {"entries", std::move(list)}});
        return exit_ok;
    }
    ctx.out << "LD(" << k << ", " << delta << "): " << entries.size() << " locally embeddable data\n";
    for (const auto& e : entries)
        ctx.out << "  " << e.str() << (e.integral() ? "" : "  <- non-integral") << '\n';
    return exit_ok;
}

int cmd_selfcheck(const Context& ctx, std::uint64_t seed, std::uint64_t iters, const oracle::GeneratorBounds& bounds,
                  unsigned threads)
{
    const auto summary = oracle::run_selfcheck(seed, iters, bounds, threads);
    const int code = summary.failures.empty() ? exit_ok : exit_failure;
    if (ctx.json) {
        for (const auto& f : summary.failures)
            ctx.out << json{{"seed", f.seed}, {"report", to_json(f.report)}}.dump() << '\n';
        ctx.out << json{{"summary",
                         {{"iterations", summary.iterations},
                          {"violations", summary.failures.size()},
                          {"embeds", summary.capacity_true},
                          {"hasse_failures", summary.obstructed}}}}
                       .dump()
                << '\n';
        return code;
    }
    for (const auto& f : summary.failures)
        ctx.out << "seed " << f.seed << ": violated " << f.report.first_violation() << '\n';
    ctx.out << "selfcheck: " << summary.iterations << " pairs, " << summary.failures.size() << " violations ("
            << summary.capacity_true << " embed globally, " << summary.obstructed << " fail the local-global principle)\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Embedding field extensions into central simple algebras: local, global and Hasse-principle verdicts",
                 "csa-embed"};
    app.require_subcommand(1, 1);
    bool json_output = false;
    app.add_flag("--json", json_output, "Canonical JSON on stdout");

    std::string file;
    std::string place;
    std::size_t limit = 5;
    std::uint64_t k = 0;
    std::uint64_t delta = 0;
    bool all_witnesses = false;
    std::size_t max_witnesses = 0;
    std::optional<std::uint64_t> max_k;
    std::string output;
    std::uint64_t seed = 1;
    std::uint64_t iters = 1000;
    oracle::GeneratorBounds bounds;
    unsigned threads = 1;

    auto* validate = app.add_subcommand("validate", "Check a pair file");
    validate->add_option("file", file, "Pair JSON")->required();

    auto* local = app.add_subcommand("local", "Local class sets E_v, their sizes and first members");
    local->add_option("file", file, "Pair JSON")->required();
    local->add_option("--place", place, "Only this place");
    local->add_option("--limit", limit, "Classes listed per place")->capture_default_str();

    auto* global = app.add_subcommand("global", "Both global criteria and the capacity chain");
    global->add_option("file", file, "Pair JSON")->required();

    auto* obstruction_cmd = app.add_subcommand("obstruction", "Classes of the special vectors mod Z");
    obstruction_cmd->add_option("file", file, "Pair JSON")->required();

    auto add_scan_options = [&](CLI::App* sub) {
        sub->add_option("k", k, "Degree of K")->required();
        sub->add_option("delta", delta, "Degree of A")->required();
        sub->add_option("--max-k", max_k, "Scan guard (default 60, or CSA_EMBED_MAX_K)");
    };
    auto* hasse_pair = app.add_subcommand("hasse-pair", "Decide the Hasse principle for degrees (k, delta)");
    add_scan_options(hasse_pair);
    hasse_pair->add_flag("--all-witnesses", all_witnesses, "Report every witness");
    hasse_pair->add_option("--max-witnesses", max_witnesses, "Bound on reported witnesses (0 = all)");

    auto* counterexample = app.add_subcommand("counterexample", "Emit a certified counterexample pair");
    add_scan_options(counterexample);
    counterexample->add_option("-o,--output", output, "Write the pair here");

    auto* ld = app.add_subcommand("ld", "List LD(k, delta)");
    add_scan_options(ld);

    auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check both global criteria on random pairs");
    selfcheck->add_option("--seed", seed)->capture_default_str();
    selfcheck->add_option("--iters", iters)->capture_default_str();
    selfcheck->add_option("--max-delta", bounds.max_delta)->capture_default_str();
    selfcheck->add_option("--max-k", bounds.max_k)->capture_default_str();
    selfcheck->add_option("--max-places", bounds.max_places)->capture_default_str();
    selfcheck->add_option("--threads", threads)->capture_default_str();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_invalid;
    }

    const Context ctx{out, err, json_output};
    try {
        if (*validate)
            return cmd_validate(ctx, file);
        if (*local)
            return cmd_local(ctx, file, place, limit);
        if (*global)
            return cmd_global(ctx, file);
        if (*obstruction_cmd)
            return cmd_obstruction(ctx, file);
        if (*hasse_pair)
            return cmd_hasse_pair(ctx, k, delta, all_witnesses, max_witnesses, max_k);
        if (*counterexample)
            return cmd_counterexample(ctx, k, delta, output, max_k);
        if (*ld)
            return cmd_ld(ctx, k, delta, max_k);
        if (*selfcheck)
            return cmd_selfcheck(ctx, seed, iters, bounds, threads);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (ctx.json)
            out << json{{"error", describe(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

}  // namespace csa_embed::cli
