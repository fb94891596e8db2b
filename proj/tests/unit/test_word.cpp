#include <doctest.h>

#include "subshift/error.hpp"
#include "subshift/word.hpp"

#include <random>

using namespace subshift;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::string random_bits(std::mt19937_64& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + (rng() & 1));
    return s;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(W("0110").str() == "0110");
    CHECK(W("3,10,2").size() == 3);
    CHECK(W("3,10,2").str() == "3,10,2");
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("0a1"), Error);
}

TEST_CASE("minimal_root examples") {
    CHECK(minimal_root(W("0")) == W("0"));
    CHECK(minimal_root(W("0101")) == W("01"));
    CHECK(minimal_root(W("100")) == W("100"));
    CHECK_THROWS_AS(minimal_root(Word{}), Error);
}

TEST_CASE("max_common_suffix_periodic examples") {
    CHECK(max_common_suffix_periodic(W("0"), W("1")).empty());
    CHECK(max_common_suffix_periodic(W("01"), W("001")) == W("01"));
    try {
        max_common_suffix_periodic(W("01"), W("0101"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::powers_of_same_word);
    }
}

TEST_CASE("common prefix and suffix") {
    CHECK(max_common_prefix(W("01"), W("001")) == W("0"));
    CHECK(max_common_prefix(W("0"), W("1")).empty());
    CHECK(max_common_prefix(W("0101"), W("0100")) == W("010"));
    CHECK(max_common_suffix(W("0110"), W("10")) == W("10"));
}

TEST_CASE("common_power_decomposition examples") {
    auto d = common_power_decomposition(W("0101"), W("01"));
    CHECK(d.base == W("01"));
    CHECK(d.t == 2);
    CHECK(d.s == 1);
    d = common_power_decomposition(W("00"), W("000"));
    CHECK(d.base == W("0"));
    CHECK(d.t == 2);
    CHECK(d.s == 3);
    CHECK_THROWS_AS(common_power_decomposition(W("01"), W("10")), Error);
}

TEST_CASE("is_root examples") {
    CHECK(is_root(W("01"), W("0101")));
    CHECK_FALSE(is_root(W("0"), W("100")));
    CHECK(is_root(W("01"), W("101")));
}

TEST_CASE("minimal_root is the shortest periodic tail (property)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::string base = random_bits(rng, 1 + rng() % 5);
        std::string s;
        const std::size_t reps = 1 + rng() % 4;
        for (std::size_t i = 0; i < reps; ++i) s += base;
        s = s.substr(rng() % s.size());
        const Word w = W(s.c_str());
        const Word r = minimal_root(w);
        CHECK(is_root(r, w));
        for (std::size_t len = 1; len < r.size(); ++len) CHECK_FALSE(is_root(w.suffix(len), w));
    }
}

TEST_CASE("max_common_suffix_periodic agrees with a long explicit comparison (property)") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        const std::string v = random_bits(rng, 1 + rng() % 4);
        const std::string u = random_bits(rng, 1 + rng() % 6);
        std::string vinf;
        while (vinf.size() < 60) vinf += v;
        const std::string a = vinf, b = vinf + u;
        std::size_t k = 0;
        while (k < a.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
        if (k >= v.size() + u.size()) {
            CHECK_THROWS_AS(max_common_suffix_periodic(W(v.c_str()), W(u.c_str())), Error);
        } else {
            CHECK(max_common_suffix_periodic(W(v.c_str()), W(u.c_str())).str() == a.substr(a.size() - k));
        }
    }
}
