#include <doctest.h>

#include "oracle.hpp"
#include "subshift/error.hpp"
#include "subshift/spectrum.hpp"
#include "subshift/weakmix.hpp"

#include <cmath>

using namespace subshift;

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(BigInt(static_cast<unsigned long>(n))) == oracle::is_prime(n));
    CHECK(is_prime(BigInt("18446744073709551557")));
    CHECK_FALSE(is_prime(BigInt("18446744073709551559")));
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
}

TEST_CASE("example construction") {
    const auto ex = build_example({});
    REQUIRE(ex.levels.size() == 7);
    CHECK(ex.levels[0].m == 4);
    CHECK(ex.levels[0].d == 5);
    CHECK(ex.levels[1].m == 17);
    CHECK(ex.levels[1].d == 89);
    const LengthSeq L(ex.params, 8);
    for (const auto& lv : ex.levels) {
        CHECK(lv.n == 2 * lv.m);
        CHECK(lv.d == L.d(static_cast<long>(lv.k)));
        CHECK(is_prime(lv.d));
        CHECK(lv.coprime);
        CHECK(lv.m >= lv.minimum);
    }
    for (std::size_t i = 1; i < ex.levels.size(); ++i) CHECK(ex.levels[i].d > ex.levels[i - 1].d);
    // the schedule minimum itself is skipped exactly when it gives a composite height
    for (const auto& lv : ex.levels) {
        const long k = static_cast<long>(lv.k);
        for (BigInt b = lv.minimum; b < lv.m; ++b) CHECK_FALSE(is_prime(b * L.d(k - 1) + L.a(lv.k) * L.d(k - 2)));
    }
}

TEST_CASE("tight search cap") {
    ExampleConfig cfg;
    cfg.search_cap = 1;
    cfg.kmax = 4;
    CHECK_THROWS_AS(build_example(cfg), Error);
}

TEST_CASE("landmarks on a small example") {
    ExampleConfig cfg;
    cfg.kmax = 7;
    cfg.growth = schedule_by_name("double");
    const auto ex = build_example(cfg);
    const auto table = auto_validated_table(ex.params, 600);
    const auto rep = landmark_complexities(ex.params, 3, table, [](double q) { return std::sqrt(q); });
    for (const auto& row : rep.rows) {
        CHECK(row.identity_holds);
        CHECK(row.low_identity_holds);
        if (row.p_table) CHECK(BigInt(static_cast<unsigned long>(*row.p_table)) == row.p);
        if (row.p_low_table) CHECK(BigInt(static_cast<unsigned long>(*row.p_low_table)) == row.p_low);
    }
    CHECK(rep.table_agrees);
}
