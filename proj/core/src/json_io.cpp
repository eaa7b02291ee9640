#include "csa_embed/json_io.hpp"

#include "csa_embed/error.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>

namespace csa_embed {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorKind::malformed_input, what);
}

void expect_object(const json& j, const std::string& context, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {})
{
    if (!j.is_object())
        malformed(context + " must be an object");
    for (const char* key : required) {
        if (!j.contains(key))
            malformed(context + " lacks \"" + key + "\"");
    }
    for (const auto& item : j.items()) {
        const auto matches = [&](const char* key) { return item.key() == key; };
        if (std::none_of(required.begin(), required.end(), matches) &&
            std::none_of(optional.begin(), optional.end(), matches))
            malformed("unknown field \"" + item.key() + "\" in " + context);
    }
}

std::uint64_t positive_u64(const json& j, const std::string& context)
{
    if (!j.is_number_integer())
        malformed(context + " must be an integer");
    if (j.is_number_unsigned())
        return j.get<std::uint64_t>();
    const auto v = j.get<std::int64_t>();
    if (v <= 0)
        malformed(context + " must be positive");
    return static_cast<std::uint64_t>(v);
}

FieldKind field_kind_from(const json& j)
{
    if (j == "number")
        return FieldKind::number;
    if (j == "function")
        return FieldKind::function;
    malformed("field_kind must be \"number\" or \"function\"");
}

PlaceKind place_kind_from(const json& j)
{
    if (j == "finite")
        return PlaceKind::finite;
    if (j == "real")
        return PlaceKind::real;
    if (j == "complex")
        return PlaceKind::complex;
    malformed("place kind must be \"finite\", \"real\" or \"complex\"");
}

std::string place_id(const json& j)
{
    if (!j.is_string() || j.get<std::string>().empty())
        malformed("place must be a nonempty string");
    return j.get<std::string>();
}

json parts_to_json(const std::vector<std::uint64_t>& parts)
{
    return json(parts);
}

json rats_to_json(const std::vector<Rat>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(x);
    return out;
}

}  // namespace

json integer_to_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_unsigned())
        return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
        if (text.size() == start || !std::all_of(text.begin() + start, text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            malformed("\"" + text + "\" is not an integer");
        return Integer(text);
    }
    malformed("expected an integer");
}

void to_json(json& j, const QZ& q)
{
    j = json{{"num", integer_to_json(q.num())}, {"den", integer_to_json(q.den())}};
}

void from_json(const json& j, QZ& q)
{
    expect_object(j, "rational", {"num", "den"});
    q = qz_reduce(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

void to_json(json& j, const Rat& r)
{
    j = json{{"num", integer_to_json(r.num())}, {"den", integer_to_json(r.den())}};
}

PairDocument parse_pair_document(const json& j)
{
    expect_object(j, "pair", {"field_kind", "csa", "etale"});
    PairDocument doc;
    doc.csa.field_kind = field_kind_from(j.at("field_kind"));
    doc.etale.field_kind = doc.csa.field_kind;

    const json& csa = j.at("csa");
    expect_object(csa, "csa", {"degree", "invariants"});
    doc.csa.degree = positive_u64(csa.at("degree"), "csa.degree");
    if (!csa.at("invariants").is_array())
        malformed("csa.invariants must be an array");
    for (const json& item : csa.at("invariants")) {
        expect_object(item, "invariant", {"place", "num", "den"}, {"kind"});
        const std::string id = place_id(item.at("place"));
        LocalInvariant local;
        local.kind = item.contains("kind") ? place_kind_from(item.at("kind")) : PlaceKind::finite;
        local.inv = qz_reduce(integer_from_json(item.at("num")), integer_from_json(item.at("den")));
        if (!doc.csa.invariants.emplace(id, local).second)
            malformed("duplicate place \"" + id + "\" in csa.invariants");
    }

    const json& etale = j.at("etale");
    expect_object(etale, "etale", {"degree", "decompositions"});
    doc.etale.degree = positive_u64(etale.at("degree"), "etale.degree");
    if (!etale.at("decompositions").is_array())
        malformed("etale.decompositions must be an array");
    for (const json& item : etale.at("decompositions")) {
        expect_object(item, "decomposition", {"place", "partition"}, {"kind"});
        const std::string id = place_id(item.at("place"));
        const json& parts = item.at("partition");
        if (!parts.is_array())
            malformed("partition at \"" + id + "\" must be an array");
        std::vector<std::uint64_t> values;
        for (const json& p : parts)
            values.push_back(positive_u64(p, "partition part"));
        PlaceKind kind = PlaceKind::finite;
        if (item.contains("kind"))
            kind = place_kind_from(item.at("kind"));
        else if (auto it = doc.csa.invariants.find(id); it != doc.csa.invariants.end())
            kind = it->second.kind;
        if (!doc.etale.decompositions.emplace(id, LocalDecomposition{kind, Partition(std::move(values))}).second)
            malformed("duplicate place \"" + id + "\" in etale.decompositions");
    }
    return doc;
}

Pair pair_from_json(const json& j)
{
    PairDocument doc = parse_pair_document(j);
    return validate_pair(doc.etale, doc.csa);
}

json document_to_json(const PairDocument& doc)
{
    json invariants = json::array();
    for (const auto& [id, local] : doc.csa.invariants) {
        invariants.push_back({{"place", id},
                              {"kind", to_string(local.kind)},
                              {"num", integer_to_json(local.inv.num())},
                              {"den", integer_to_json(local.inv.den())}});
    }
    json decompositions = json::array();
    for (const auto& [id, local] : doc.etale.decompositions) {
        json item{{"place", id}, {"partition", parts_to_json(local.partition.parts())}};
        if (local.kind != PlaceKind::finite)
            item["kind"] = to_string(local.kind);
        decompositions.push_back(std::move(item));
    }
    return json{{"field_kind", to_string(doc.csa.field_kind)},
                {"csa", {{"degree", doc.csa.degree}, {"invariants", std::move(invariants)}}},
                {"etale", {{"degree", doc.etale.degree}, {"decompositions", std::move(decompositions)}}}};
}

json pair_to_json(const Pair& pair)
{
    return document_to_json(PairDocument{pair.csa().spec(), pair.etale()});
}

Pair read_pair_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        malformed("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        malformed(path + ": " + e.what());
    }
    return pair_from_json(j);
}

json to_json(const CapacityChain& chain)
{
    json places = json::array();
    for (const auto& data : chain.local) {
        json parts = json::array();
        for (const auto& part : data.parts) {
            parts.push_back({{"k_w", part.k_w},
                             {"c_w", part.c_w},
                             {"d_prime_w", part.d_prime_w},
                             {"ell_w", part.ell_w},
                             {"inv_prime_w", part.inv_prime_w},
                             {"t_w", part.t_w}});
        }
        places.push_back({{"place", data.place},
                          {"kind", to_string(data.kind)},
                          {"inv", data.inv},
                          {"d_v", data.d_v},
                          {"s_v", data.s_v},
                          {"parts", std::move(parts)}});
    }
    return json{{"delta0", chain.delta0}, {"delta_prime", chain.delta_prime}, {"c", chain.c}, {"places", std::move(places)}};
}

json to_json(const LocalClassSet& set)
{
    return json{{"place", set.place}, {"ell", set.ell}, {"target", set.target}};
}

json to_json(const SpecialVector& vec)
{
    return json{{"place", vec.place}, {"x", rats_to_json(vec.components)}};
}

json to_json(const Obstruction& obs)
{
    json entries = json::array();
    for (const auto& e : obs.entries) {
        entries.push_back({{"place", e.place},
                           {"part", e.part},
                           {"x", e.x},
                           {"num", integer_to_json(e.value.num())},
                           {"den", integer_to_json(e.value.den())}});
    }
    return json{{"vanishes", obs.vanishes()}, {"entries", std::move(entries)}};
}

json to_json(const PairVerdict& verdict)
{
    json out{{"verdict", to_string(verdict.kind)}};
    if (verdict.kind == VerdictKind::holds_local_failure)
        out["place"] = verdict.failing_place;
    if (verdict.kind == VerdictKind::fails) {
        json entries = json::array();
        for (const auto& e : verdict.obstruction) {
            entries.push_back({{"place", e.place},
                               {"part", e.part},
                               {"num", integer_to_json(e.value.num())},
                               {"den", integer_to_json(e.value.den())}});
        }
        out["obstruction"] = std::move(entries);
    }
    return out;
}

json to_json(const LdEntry& entry)
{
    return json{{"lambda", parts_to_json(entry.lambda.parts())},
                {"s", entry.s},
                {"d", entry.d},
                {"ell", entry.ell},
                {"x", rats_to_json(entry.x)},
                {"integral", entry.integral()}};
}

json to_json(const HasseVerdict& verdict)
{
    json witnesses = json::array();
    for (const auto& w : verdict.witnesses)
        witnesses.push_back(to_json(w));
    return json{{"holds", verdict.holds},
                {"exhaustive", verdict.exhaustive},
                {"entries_examined", verdict.entries_examined},
                {"witnesses", std::move(witnesses)}};
}

json to_json(const oracle::CrossCheckReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed)
            item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return json{{"ok", report.ok()},
                {"capacity_verdict", report.capacity_verdict},
                {"obstruction_verdict", report.obstruction_verdict},
                {"checks", std::move(checks)}};
}

}  // namespace csa_embed
