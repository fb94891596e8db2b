#include <doctest.h>

#include "oracle.hpp"
#include "subshift/error.hpp"
#include "subshift/recover.hpp"

#include <random>

using namespace subshift;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

Word prefix_of(const SadicParams& p, std::size_t N) {
    std::size_t K = 0;
    while (image_lengths(p.pi, p.taus(), K)[0] < BigInt(static_cast<unsigned long>(N))) ++K;
    return generate_word(p.pi, p.taus(), K, {std::size_t{1} << 26, N});
}

LanguageTable fib_table() {
    const auto fib = periodic_params(W("0"), W("1"), {{1, 2}}, 30);
    return validated_table(fib, 14, 60);
}

}  // namespace

TEST_CASE("unique bi-special") {
    const auto t = fib_table();
    CHECK(unique_bispecial(t, 1) == W("1"));
    for (std::size_t q = 2; q < 30; ++q) {
        const Word w = unique_bispecial(t, q);
        CHECK(w.size() >= q);
        CHECK(w.size() <= q + t.p(q) + 1);
        CHECK(t.followers(w).size() == 2);
        CHECK(t.predecessors(w).size() == 2);
    }
    const auto p24 = periodic_params(W("0"), W("1"), {{2, 4}}, 30);
    const auto t24 = validated_table(p24, 8, 40);
    std::size_t q = 1;
    while (t24.p(q + 1) - t24.p(q) != 2) ++q;
    CHECK_THROWS_AS(unique_bispecial(t24, q), Error);
}

TEST_CASE("return words") {
    const auto t = fib_table();
    // 1 recurs after gaps 1 (in 11) and 2 (in 101)
    auto rw = return_words(t, W("1"));
    CHECK(rw.u == W("01"));
    CHECK(rw.v == W("1"));
    std::vector<Word> gm;
    for (const char* s : {"0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"}) gm.push_back(W(s));
    rw = return_words(LanguageTable::from_factors(gm, 4), W("0"));
    CHECK(rw.u == W("10"));
    CHECK(rw.v == W("0"));
    CHECK_THROWS_AS(return_words(t, W("0")), Error);
}

TEST_CASE("recovery of Fibonacci and a constant (2,4) stream") {
    const auto fib = periodic_params(W("0"), W("1"), {{1, 2}}, 40);
    auto r = recover_structure(prefix_of(fib, 10'000), 4);
    CHECK(r.certified);
    CHECK(r.depth == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(r.mk[k] == 1);
        CHECK(r.nk[k] == 2);
    }
    const auto p24 = periodic_params(W("0"), W("1"), {{2, 4}}, 30);
    r = recover_structure(prefix_of(p24, 10'000), 3);
    CHECK(r.certified);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(r.mk[k] == 2);
        CHECK(r.nk[k] == 4);
    }
}

TEST_CASE("recovered parameters regenerate the data (round trip)") {
    const auto p = periodic_params(W("01"), W("101"), {{2, 4}, {3, 4}}, 30);
    const Word x = prefix_of(p, 10'000);
    const auto r = recover_structure(x, 3);
    REQUIRE(r.certified);
    // the recovered deepest blocks occur in the data, and the data's factors up to the
    // certified length are those of the true system
    const auto q = r.params();
    const std::string xs = x.str();
    for (Letter a : {0, 1}) CHECK(xs.find(generate_image(q.pi, q.taus(), r.depth - 1, a).str()) != std::string::npos);
    std::size_t K = 0;
    while (image_lengths(p.pi, p.taus(), K)[0] < BigInt(60'000)) ++K;
    const std::string truth = generate_word(p.pi, p.taus(), K).str();
    for (std::size_t n : {std::size_t{5}, std::size_t{17}, r.certified_length}) CHECK(oracle::factors(truth, n) == oracle::factors(xs, n));
}

TEST_CASE("high complexity data is refused") {
    std::string champ;
    for (unsigned i = 1; champ.size() < 10'000; ++i) {
        std::string b;
        for (unsigned v = i; v; v >>= 1) b.insert(b.begin(), static_cast<char>('0' + (v & 1)));
        champ += b;
    }
    try {
        recover_structure(W(champ.substr(0, 10'000)), 3);
        FAIL("expected refusal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::complexity_too_high);
    }
    std::mt19937_64 rng(61);
    std::string noise;
    for (int i = 0; i < 10'000; ++i) noise += static_cast<char>('0' + rng() % 2);
    CHECK_THROWS_AS(recover_structure(W(noise), 3), Error);
    CHECK_THROWS_AS(recover_structure(W("0101"), 3), Error);
}
