#include <doctest.h>

#include "oracle.hpp"
#include "subshift/error.hpp"
#include "subshift/substitution.hpp"

#include <cmath>
#include <random>

using namespace subshift;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::vector<TauParams> constant(long m, long n, std::size_t count) {
    return std::vector<TauParams>(count, TauParams{BigInt(m), BigInt(n)});
}

}  // namespace

TEST_CASE("make_tau examples") {
    auto t = make_tau({2, 3});
    CHECK(t.image(0) == W("01"));
    CHECK(t.image(1) == W("001"));
    t = make_tau({1, 2});
    CHECK(t.image(0) == W("1"));
    CHECK(t.image(1) == W("01"));
    t = make_tau({3, 5});
    CHECK(t.image(0) == W("001"));
    CHECK(t.image(1) == W("00001"));
    CHECK_THROWS_AS(make_tau({3, 3}), Error);
    CHECK_THROWS_AS(make_tau({0, 2}), Error);
}

TEST_CASE("compose") {
    const auto id = Substitution::identity(2);
    CHECK(compose(id, make_tau({2, 3})) == make_tau({2, 3}));
    // M_{outer o inner} = M_inner * M_outer in the row convention used here
    const auto a = abelian_analysis(compose(make_tau({2, 3}), make_tau({1, 3})));
    CHECK(a.entries[0][0] == 2);
    CHECK(a.entries[0][1] == 1);
    CHECK(a.entries[1][0] == 4);
    CHECK(a.entries[1][1] == 3);
    CHECK(compose(make_tau({2, 3}), make_tau({1, 3})).apply(W("0")) == W("001"));
}

TEST_CASE("abelian_analysis") {
    auto a = abelian_analysis(make_tau({2, 3}));
    CHECK(a.trace == 2);
    CHECK(a.det == -1);
    CHECK(a.lambda_major == doctest::Approx(1 + std::sqrt(2.0)));
    CHECK(a.lambda_minor == doctest::Approx(1 - std::sqrt(2.0)));
    CHECK(a.pisot);
    a = abelian_analysis(make_tau({1, 3}));
    CHECK(a.lambda_major == doctest::Approx(2));
    CHECK(a.lambda_minor == doctest::Approx(-1));
    CHECK_FALSE(a.pisot);
    a = abelian_analysis(make_tau({1, 2}));
    CHECK(a.lambda_major == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(a.pisot);
    CHECK_THROWS_AS(abelian_analysis(Substitution::identity(3)), Error);
}

TEST_CASE("generate_word examples") {
    const auto id = Substitution::identity(2);
    CHECK(generate_word(id, constant(1, 2, 4), 4) == W("01101"));
    CHECK(generate_word(id, constant(2, 3, 2), 2) == W("01001"));
    const Substitution pi({W("01"), W("101")});
    CHECK(generate_word(pi, constant(2, 4, 3), 0) == W("01"));
}

TEST_CASE("generate_word matches naive string substitution (property)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<long, long>> mn;
        std::vector<TauParams> tp;
        for (int k = 0; k < 8; ++k) {
            const long m = 1 + static_cast<long>(rng() % 3);
            const long n = m + 1 + static_cast<long>(rng() % 3);
            mn.emplace_back(m, n);
            tp.push_back({BigInt(m), BigInt(n)});
        }
        const std::string p0 = trial % 2 ? "01" : "0", p1 = trial % 2 ? "101" : "1";
        const Substitution pi({W(p0.c_str()), W(p1.c_str())});
        for (std::size_t K = 0; K <= 6; ++K) {
            const std::string expect = oracle::generate(p0, p1, mn, K);
            CHECK(generate_word(pi, tp, K).str() == expect);
            const auto lens = image_lengths(pi, tp, K);
            CHECK(lens[0] == BigInt(std::to_string(expect.size())));
        }
    }
}

TEST_CASE("generate_word prefix and budget") {
    const auto id = Substitution::identity(2);
    const auto full = generate_word(id, constant(1, 2, 20), 20);
    GenerateOptions o;
    o.prefix = 100;
    CHECK(generate_word(id, constant(1, 2, 20), 20, o) == full.prefix(100));
    GenerateOptions tight;
    tight.max_symbols = 1000;
    CHECK_THROWS_AS(generate_word(id, constant(1, 2, 40), 40, tight), Error);
}
