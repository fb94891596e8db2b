#include <doctest.h>

#include "subshift/error.hpp"
#include "subshift/spectrum.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace subshift;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

SadicParams constant(const char* p0, const char* p1, long m, long n, std::size_t levels) {
    return periodic_params(W(p0), W(p1), {{m, n}}, levels);
}

SadicParams random_full(std::mt19937_64& rng, std::size_t levels) {
    std::vector<BigInt> mk, nk;
    long prev_gap = 0;
    for (std::size_t k = 1; k <= levels; ++k) {
        long m = 1 + static_cast<long>(rng() % 7), n;
        if (k >= 2 && prev_gap >= 2) {
            n = m + 1;
        } else {
            const long cap = m > 4 ? (19 * m - 1) / 10 : 2 * m;
            n = std::min(cap, m + 1 + static_cast<long>(rng() % 4));
            if (n <= m) n = m + 1;
        }
        mk.emplace_back(m);
        nk.emplace_back(n);
        prev_gap = n - m;
    }
    return make_params(W("01"), W("101"), mk, nk);
}

double direct_probe(const Word& x, double freq, std::size_t N) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < N; ++j) {
        const double phase = -2 * M_PI * std::fmod(freq * static_cast<double>(j), 1.0);
        acc += std::polar(x[j] == 0 ? 1.0 : -1.0, phase);
    }
    return std::abs(acc) / static_cast<double>(N);
}

}  // namespace

TEST_CASE("length recursions") {
    const auto fib = constant("0", "1", 1, 2, 20);
    const LengthSeq L(fib, 10);
    const long expect[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (long k = -1; k <= 10; ++k) CHECK(L.d(k) == expect[k + 1]);
    const auto wm = make_params(W("0"), W("1"), {1, 4, 4}, {2, 8, 8});
    CHECK(LengthSeq(wm, 2).d(2) == 5);
    CHECK(L.d(1) == L.b(1) * L.d(0) + L.a(1) * L.d(-1));
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_full(rng, 12);
        const LengthSeq S(p, 10);
        const auto lens = image_lengths(p.pi, p.taus(), 6);
        CHECK(S.d(6) == lens[0]);
        for (long k = 0; k <= 10; ++k) CHECK(S.d(k) == S.d(-1) * S.c(k) + S.d(0) * S.e(k));
    }
}

TEST_CASE("beta sequence") {
    const auto fib = constant("0", "1", 1, 2, 20);
    const auto r = beta_sequence(fib, 4);
    CHECK(r.betas[1] == 1);
    CHECK(r.betas[2] == Rational(1, 2));
    CHECK(r.betas[3] == Rational(2, 3));
    CHECK(r.betas[4] == Rational(3, 5));
    CHECK(r.product == Rational(1, 5));
    CHECK(r.product_identity);
    const auto p24 = beta_sequence(constant("01", "101", 2, 4, 40), 30);
    for (std::size_t j = 1; j <= 30; ++j) {
        CHECK(p24.labels[j] == BetaCase::case2);
        CHECK(p24.betas[j] < Rational(24, 25));
        CHECK(p24.case_holds[j]);
    }
    CHECK(p24.product_below_bound);
    CHECK_THROWS_AS(beta_sequence(constant("0", "1", 5, 10, 10), 5), Error);
}

TEST_CASE("beta product identity on random streams (property)") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_full(rng, 60);
        const auto r = beta_sequence(p, 50);
        CHECK(r.product_identity);
        CHECK(r.all_in_range);
        CHECK(r.product_below_bound);
    }
}

TEST_CASE("epsilon bound") {
    auto e = epsilon_bound(constant("0", "1", 1, 2, 10), 4);
    CHECK(e.lhs == Rational(3, 8));
    CHECK(e.eps == doctest::Approx(8 * std::pow(48.0 / 49.0, 2)));
    CHECK(e.holds);
    CHECK(epsilon_bound(constant("0", "1", 1, 2, 10), 0).eps == doctest::Approx(8));
    e = epsilon_bound(constant("01", "101", 2, 4, 30), 20);
    CHECK(e.holds);
    CHECK(e.eps == doctest::Approx(8 * std::pow(48.0 / 49.0, 10)));
}

TEST_CASE("eigenvalue estimates") {
    const auto fib = constant("0", "1", 1, 2, 80);
    const auto est = eigenvalue(fib, 40, 128);
    const double golden = (std::sqrt(5.0) - 1) / 2;
    CHECK(to_double(est.alpha) == doctest::Approx(golden).epsilon(1e-15));
    CHECK(to_double(est.beta_cf) == doctest::Approx(golden).epsilon(1e-15));
    CHECK(to_double(est.error_bound) < 1e-15);
    CHECK(est.distances[3] == doctest::Approx(2 - 3 * golden).epsilon(1e-12));
    CHECK(est.distances[3] < 0.2);
    CHECK(abs(alpha_from_beta(fib, est.beta_cf) - est.alpha) < est.error_bound * 4);
    CHECK_THROWS_AS(eigenvalue(fib, 40, 32), Error);
}

TEST_CASE("distance bounds hold with certified enclosures") {
    for (const auto& d : distance_bounds(constant("01", "101", 2, 4, 80), 60)) CHECK(d.holds);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial)
        for (const auto& d : distance_bounds(random_full(rng, 50), 40)) CHECK(d.holds);
}

TEST_CASE("weyl probe") {
    CHECK(weyl_probe(Word::repeat(0, 1000), Rational(0), 1000) == doctest::Approx(1));
    const auto fib = constant("0", "1", 1, 2, 60);
    const Word x = generate_word(fib.pi, fib.taus(), 30, {std::size_t{1} << 26, 100'000});
    const Rational alpha = eigenvalue(fib, 40, 128).alpha;
    const auto ladder = weyl_ladder(x, alpha, {1000, 10'000, 100'000});
    for (const auto& pt : ladder) CHECK(pt.modulus > 0.1);
    for (const auto& f : {Rational(1, 3), Rational(2, 7), alpha})
        for (std::size_t N : {997u, 10'000u})
            CHECK(weyl_probe(x, f, N) == doctest::Approx(direct_probe(x, to_double(f), N)).epsilon(1e-9));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("x"), Error);
}
