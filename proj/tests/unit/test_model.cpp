#include "csa_embed/error.hpp"
#include "csa_embed/json_io.hpp"
#include "csa_embed/model.hpp"
#include "csa_embed/oracle.hpp"

#include "../support.hpp"

#include <doctest.h>

using namespace csa_embed;
using namespace csa_embed::test;

namespace {

ErrorKind error_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::invalid_argument;
}

}  // namespace

TEST_SUITE("model")
{
    TEST_CASE("validate_csa derives index and capacity")
    {
        const Csa a = validate_csa(make_csa(24, {{"v1", 1, 4}, {"v2", 3, 4}}));
        CHECK(a.degree() == 24);
        CHECK(a.delta0() == 4);
        CHECK(a.capacity() == 6);
        CHECK(a.local_index("v1") == 4);
        CHECK(a.local_index("elsewhere") == 1);

        const Csa split = validate_csa(make_csa(6, {}));
        CHECK(split.delta0() == 1);
        CHECK(split.capacity() == 6);

        const Csa mixed = validate_csa(make_csa(12, {{"a", 1, 2}, {"b", 1, 3}, {"c", 1, 6}}));
        CHECK(mixed.delta0() == 6);
        CHECK(mixed.capacity() == 2);
    }

    TEST_CASE("validate_csa errors")
    {
        CHECK(error_of([] { validate_csa(make_csa(24, {{"v1", 1, 4}})); }) == ErrorKind::not_realizable);
        CHECK(error_of([] { validate_csa(make_csa(6, {{"v1", 1, 4}, {"v2", 3, 4}})); }) ==
              ErrorKind::degree_incompatible);
        CHECK(error_of([] {
                  validate_csa(make_csa(8, {{"r", 1, 4, PlaceKind::real}, {"v", 3, 4}}));
              }) == ErrorKind::archimedean_constraint);
        CHECK(error_of([] {
                  validate_csa(make_csa(2, {{"c", 1, 2, PlaceKind::complex}, {"v", 1, 2}}));
              }) == ErrorKind::archimedean_constraint);
        CHECK(error_of([] {
                  validate_csa(make_csa(2, {{"r", 1, 2, PlaceKind::real}, {"v", 1, 2}}, FieldKind::function));
              }) == ErrorKind::no_archimedean_places);
        CHECK(error_of([] { validate_csa(make_csa(0, {})); }) == ErrorKind::invalid_argument);

        CHECK_NOTHROW(validate_csa(make_csa(2, {{"r1", 1, 2, PlaceKind::real}, {"r2", 1, 2, PlaceKind::real}})));
        std::string message;
        try {
            validate_csa(make_csa(24, {{"v1", 1, 4}}));
        } catch (const Error& e) {
            message = e.what();
        }
        CHECK(message.rfind("not realizable (reciprocity)", 0) == 0);
    }

    TEST_CASE("validate_pair")
    {
        const Pair pair = worked_example();
        CHECK(pair.k() == 8);
        CHECK(pair.relevant_places() == std::vector<std::string>{"v1", "v2"});

        CHECK(error_of([] { make_pair(5, 24, {{"v1", 1, 4}, {"v2", 3, 4}}, {}); }) == ErrorKind::degree_divisibility);
        CHECK(error_of([] { make_pair(8, 24, {{"v1", 1, 4}, {"v2", 3, 4}}, {{"v2", {2, 2, 2, 2}}}); }) ==
              ErrorKind::underspecified_pair);
        CHECK(error_of([] {
                  make_pair(8, 24, {{"v1", 1, 4}, {"v2", 3, 4}}, {{"v1", {2, 2, 2}}, {"v2", {2, 2, 2, 2}}});
              }) == ErrorKind::malformed_partition);
        CHECK(error_of([] {
                  make_pair(2, 2, {{"r", 1, 2, PlaceKind::real}, {"v", 1, 2}}, {{"r", {1, 1}, PlaceKind::complex}, {"v", {2}}});
              }) == ErrorKind::malformed_input);
        CHECK(error_of([] { make_pair(2, 2, {}, {{"c", {2}, PlaceKind::complex}}); }) == ErrorKind::archimedean_constraint);
        CHECK(error_of([] {
                  make_pair(4, 4, {}, {{"r", {1, 3}, PlaceKind::real}});
              }) == ErrorKind::archimedean_constraint);
        CHECK_NOTHROW(make_pair(4, 4, {}, {{"r", {1, 1, 2}, PlaceKind::real}, {"c", {1, 1, 1, 1}, PlaceKind::complex}}));
    }

    TEST_CASE("relevant places include declared split places and skip explicit zero invariants")
    {
        const Pair pair = make_pair(2, 4, {{"v1", 1, 2}, {"v2", 1, 2}, {"z", 0, 1}},
                                    {{"v1", {1, 1}}, {"v2", {2}}, {"u", {1, 1}}});
        CHECK(pair.relevant_places() == std::vector<std::string>{"u", "v1", "v2"});
        CHECK(!pair.is_relevant("z"));
    }

    TEST_CASE("partitions are normalized")
    {
        const Partition p({3, 1, 2});
        CHECK(p.parts() == std::vector<std::uint64_t>{1, 2, 3});
        CHECK(p.sum() == 6);
        CHECK(p.str() == "(1,2,3)");
        CHECK_THROWS_AS(Partition({}), Error);
        CHECK_THROWS_AS(Partition({1, 0}), Error);
    }

    TEST_CASE("pair file format")
    {
        const json doc = json::parse(R"({"field_kind":"number","csa":{"degree":24,"invariants":[
            {"place":"v2","kind":"finite","num":-1,"den":4},{"place":"v1","kind":"finite","num":1,"den":4}]},
            "etale":{"degree":8,"decompositions":[{"place":"v1","partition":[2,2,2,2]},
            {"place":"v2","partition":[2,2,2,2]}]}})");
        const Pair pair = pair_from_json(doc);
        CHECK(pair.invariant("v2") == qz(3, 4));
        CHECK(pair_to_json(pair) == pair_to_json(worked_example()));
        CHECK(pair_to_json(pair).dump() ==
              R"({"csa":{"degree":24,"invariants":[{"den":4,"kind":"finite","num":1,"place":"v1"},)"
              R"({"den":4,"kind":"finite","num":3,"place":"v2"}]},"etale":{"decompositions":[)"
              R"({"partition":[2,2,2,2],"place":"v1"},{"partition":[2,2,2,2],"place":"v2"}],"degree":8},)"
              R"("field_kind":"number"})");

        json unknown = doc;
        unknown["csa"]["note"] = "x";
        CHECK(error_of([&] { pair_from_json(unknown); }) == ErrorKind::malformed_input);

        json duplicate = doc;
        duplicate["csa"]["invariants"].push_back({{"place", "v1"}, {"num", 0}, {"den", 1}});
        CHECK(error_of([&] { pair_from_json(duplicate); }) == ErrorKind::malformed_input);

        json unsorted = doc;
        unsorted["etale"]["degree"] = 6;
        unsorted["csa"]["degree"] = 12;
        unsorted["etale"]["decompositions"][0]["partition"] = {3, 1, 2};
        unsorted["etale"]["decompositions"][1]["partition"] = {4, 2};
        const Pair normalized = pair_from_json(unsorted);
        CHECK(normalized.partition("v1")->parts() == std::vector<std::uint64_t>{1, 2, 3});
    }

    TEST_CASE("decomposition kind is inherited from the invariant entry")
    {
        const json doc = json::parse(R"({"field_kind":"number","csa":{"degree":2,"invariants":[
            {"place":"r","kind":"real","num":1,"den":2},{"place":"p","kind":"finite","num":1,"den":2}]},
            "etale":{"degree":2,"decompositions":[{"place":"r","partition":[1,1]},{"place":"p","partition":[2]}]}})");
        const Pair pair = pair_from_json(doc);
        CHECK(pair.place_kind("r") == PlaceKind::real);
        const json out = pair_to_json(pair);
        CHECK(out["etale"]["decompositions"][1]["kind"] == "real");
        CHECK(pair_to_json(pair_from_json(out)) == out);
    }

    TEST_CASE("round trip through canonical JSON for generated pairs")
    {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const Pair pair = oracle::random_valid_pair(seed);
            const json first = pair_to_json(pair);
            const Pair again = pair_from_json(json::parse(first.dump()));
            REQUIRE(pair_to_json(again) == first);
        }
    }
}
