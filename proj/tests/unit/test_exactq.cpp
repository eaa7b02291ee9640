#include "csa_embed/error.hpp"
#include "csa_embed/exactq.hpp"
#include "csa_embed/json_io.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace csa_embed;
using test::qz;
using test::rat;

namespace {

std::vector<QZ> all_classes(std::int64_t max_den)
{
    std::vector<QZ> out;
    for (std::int64_t d = 1; d <= max_den; ++d) {
        for (std::int64_t n = 0; n < d; ++n) {
            if (std::gcd(n, d) == 1 || (n == 0 && d == 1))
                out.push_back(qz_reduce(n, d));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("exactq")
{
    TEST_CASE("qz_reduce canonical forms")
    {
        CHECK(qz(3, 4).num() == 3);
        CHECK(qz(3, 4).den() == 4);
        CHECK(qz(-1, 4) == qz(3, 4));
        CHECK(qz(6, 4) == qz(1, 2));
        CHECK(qz(6, 4).den() == 2);
        CHECK(qz(4, 4).is_zero());
        CHECK(qz(4, 4).den() == 1);
        CHECK(qz(1, -4) == qz(3, 4));
        CHECK_THROWS_AS(qz_reduce(1, 0), Error);
    }

    TEST_CASE("group operations")
    {
        CHECK(qz_add(qz(1, 4), qz(3, 4)).is_zero());
        CHECK(qz_add(qz(1, 2), qz(1, 3)) == qz(5, 6));
        CHECK(qz_neg(qz(1, 6)) == qz(5, 6));
        CHECK(qz_neg(QZ{}) == QZ{});
    }

    TEST_CASE("order and scaling")
    {
        CHECK(qz_order(QZ{}) == 1);
        CHECK(qz_order(qz(3, 4)) == 4);
        CHECK(qz_order(qz(5, 6)) == 6);
        CHECK(qz_scale(qz(1, 4), 2) == qz(1, 2));
        CHECK(qz_scale(qz(2, 7), 1) == qz(2, 7));
        CHECK(qz_scale(qz(3, 4), 4).is_zero());
    }

    TEST_CASE("big denominators do not wrap")
    {
        const Integer big = Integer(1) << 100;
        const QZ a = qz_reduce(1, big);
        CHECK(qz_order(a) == big);
        CHECK(qz_scale(a, big).is_zero());
        CHECK(qz_order(qz_scale(a, Integer(1) << 60)) == Integer(1) << 40);
        const json j = a;
        CHECK(j.at("den").is_string());
        CHECK(j.get<QZ>() == a);
    }

    TEST_CASE("canonicalization is idempotent")
    {
        for (const QZ& a : all_classes(60))
            CHECK(qz_reduce(a.num(), a.den()) == a);
    }

    TEST_CASE("group laws over denominators up to 60")
    {
        const auto classes = all_classes(60);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
        for (int i = 0; i < 20000; ++i) {
            const QZ& a = classes[pick(rng)];
            const QZ& b = classes[pick(rng)];
            const QZ& c = classes[pick(rng)];
            REQUIRE(qz_add(qz_add(a, b), c) == qz_add(a, qz_add(b, c)));
            REQUIRE(qz_add(a, b) == qz_add(b, a));
            REQUIRE(qz_add(a, qz_neg(a)).is_zero());
            REQUIRE(qz_add(a, QZ{}) == a);
        }
    }

    TEST_CASE("order of a multiple, exhaustive for den and m up to 60")
    {
        for (const QZ& a : all_classes(60)) {
            for (std::int64_t m = 1; m <= 60; ++m) {
                const Integer order = qz_order(a);
                REQUIRE(qz_order(qz_scale(a, m)) == order / gcd(order, Integer(m)));
            }
        }
    }

    TEST_CASE("rationals")
    {
        CHECK(rat(6, 4) == rat(3, 2));
        CHECK(rat(-3, -6) == rat(1, 2));
        CHECK(rat(0, 5).den() == 1);
        CHECK(rat(12, 8).str() == "3/2");
        CHECK(rat(4, 2).str() == "2");
        CHECK((rat(1, 2) + rat(1, 3)) == rat(5, 6));
        CHECK((rat(1, 2) * rat(2, 3)) == rat(1, 3));
        CHECK((rat(1, 2) / rat(1, 4)) == rat(2));
        CHECK(qz_class(rat(12, 8)) == qz(1, 2));
        CHECK(qz_class(rat(-1, 3)) == qz(2, 3));
        CHECK_THROWS_AS(rat(1, 0), Error);
    }

    TEST_CASE("json form accepts non-canonical input")
    {
        const QZ a = json{{"num", -5}, {"den", 10}}.get<QZ>();
        CHECK(a == qz(1, 2));
        CHECK(json(a).dump() == R"({"den":2,"num":1})");
        CHECK_THROWS_AS((json{{"num", 1}, {"den", 2}, {"extra", 0}}.get<QZ>()), Error);
    }
}
