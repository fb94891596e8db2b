#include "subshift/spectrum.hpp"

#include "subshift/error.hpp"
#include "subshift/parallel.hpp"

#include <cmath>
#include <numbers>

namespace subshift {

LengthSeq::LengthSeq(const SadicParams& p, std::size_t K) : K_(K) {
    p.check_structure();
    if (K > p.depth()) throw Error(ErrorKind::out_of_range, "K exceeds the parameter list");
    a_.assign(K + 2, 0);
    b_.assign(K + 1, 0);
    a_[1] = 1;
    for (std::size_t k = 2; k <= K + 1; ++k) a_[k] = p.n(k - 1) - p.m(k - 1);
    for (std::size_t k = 1; k <= K; ++k) b_[k] = p.m(k);
    const long pi0 = static_cast<long>(p.pi.image(0).size()), pi1 = static_cast<long>(p.pi.image(1).size());
    d_ = {BigInt(pi1 - pi0), BigInt(pi0)};
    c_ = {BigInt(1), BigInt(0)};
    e_ = {BigInt(0), BigInt(1)};
    for (std::size_t k = 1; k <= K; ++k) {
        // x_k = b_k x_{k-1} + a_k x_{k-2}, stored at index k + 1
        d_.push_back(b_[k] * d_[k] + a_[k] * d_[k - 1]);
        c_.push_back(b_[k] * c_[k] + a_[k] * c_[k - 1]);
        e_.push_back(b_[k] * e_[k] + a_[k] * e_[k - 1]);
    }
}

const BigInt& LengthSeq::a(std::size_t k) const {
    if (k == 0 || k > K_ + 1) throw Error(ErrorKind::out_of_range, "a_k index");
    return a_[k];
}
const BigInt& LengthSeq::b(std::size_t k) const {
    if (k == 0 || k > K_) throw Error(ErrorKind::out_of_range, "b_k index");
    return b_[k];
}
const BigInt& LengthSeq::d(long k) const {
    if (k < -1 || k > static_cast<long>(K_)) throw Error(ErrorKind::out_of_range, "d_k index");
    return d_[static_cast<std::size_t>(k + 1)];
}
const BigInt& LengthSeq::c(long k) const {
    if (k < -1 || k > static_cast<long>(K_)) throw Error(ErrorKind::out_of_range, "c_k index");
    return c_[static_cast<std::size_t>(k + 1)];
}
const BigInt& LengthSeq::e(long k) const {
    if (k < -1 || k > static_cast<long>(K_)) throw Error(ErrorKind::out_of_range, "e_k index");
    return e_[static_cast<std::size_t>(k + 1)];
}

BigInt LengthSeq::a_product(std::size_t upto) const {
    BigInt prod = 1;
    for (std::size_t k = 1; k <= upto; ++k) prod *= a(k);
    return prod;
}

LengthSeq length_sequences(const SadicParams& p, std::size_t K) {
    if (K < 1) throw Error(ErrorKind::invalid_argument, "K must be at least 1");
    return LengthSeq(p, K);
}

std::string_view to_string(BetaCase c) {
    switch (c) {
        case BetaCase::case1: return "case1";
        case BetaCase::case2: return "case2";
        case BetaCase::case3: return "case3";
        case BetaCase::case4: return "case4";
    }
    return "?";
}

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// x^2 < 4 (48/49)^K, i.e. x < 2 (48/49)^{K/2} for x > 0.
bool below_scaled_power(const Rational& x, const Rational& factor, std::size_t K) {
    return x * x < factor * pow(Rational(48, 49), K);
}

}  // namespace

BetaReport beta_sequence(const SadicParams& p, std::size_t K) {
    if (K < 1) throw Error(ErrorKind::invalid_argument, "K must be at least 1");
    SadicParams head = p;
    head.mk.resize(std::min(p.depth(), K + 1));
    head.nk.resize(head.mk.size());
    if (!validate_params(head).bullets_hold)
        throw Error(ErrorKind::unsupported, "beta case analysis needs the four parameter conditions");
    if (p.pi.image(1).size() < p.pi.image(0).size())
        throw Error(ErrorKind::unsupported, "beta case analysis needs |pi(1)| >= |pi(0)|");
    const LengthSeq L(p, K);
    BetaReport r;
    for (std::size_t j = 0; j <= K; ++j) r.betas.push_back(ratio(L.a(j + 1) * L.d(static_cast<long>(j) - 1), L.d(static_cast<long>(j))));
    r.labels.assign(K + 1, BetaCase::case1);
    r.case_holds.assign(K + 1, true);
    r.product = 1;
    r.all_in_range = true;
    for (std::size_t j = 1; j <= K; ++j) {
        const BigInt& b = L.b(j);
        const BigInt& a_next = L.a(j + 1);
        const bool prev_small = j == 1 || L.b(j - 1) <= 4;
        const Rational& beta = r.betas[j];
        const Rational pair = beta * r.betas[j - 1];
        BetaCase label;
        bool ok;
        if (b > 4) {
            label = BetaCase::case1;
            ok = beta < Rational(9, 10);
        } else if (a_next <= b && prev_small) {
            label = BetaCase::case2;
            ok = beta < Rational(24, 25);
        } else if (a_next <= b) {
            label = BetaCase::case3;
            ok = beta < Rational(24, 25) || pair < Rational(1, 2);
        } else if (a_next == 2 && b == 1) {
            label = BetaCase::case4;
            ok = pair < Rational(48, 49) || (j >= 2 && pair * r.betas[j - 2] < Rational(13, 25));
        } else {
            throw Error(ErrorKind::unsupported, "index " + std::to_string(j) + " fits none of the four cases");
        }
        r.labels[j] = label;
        r.case_holds[j] = ok;
        r.product *= beta;
        if (!(sgn(beta) > 0 && beta < 2)) r.all_in_range = false;
    }
    const Rational expected = ratio(BigInt(static_cast<unsigned long>(p.pi.image(0).size())) * L.a_product(K + 1), L.d(static_cast<long>(K)));
    r.product_identity = r.product == expected;
    r.product_below_bound = below_scaled_power(r.product, Rational(4), K);
    return r;
}

EpsilonReport epsilon_bound(const SadicParams& p, std::size_t K) {
    if (K + 1 > p.depth()) throw Error(ErrorKind::out_of_range, "epsilon bound needs level K + 1");
    SadicParams head = p;
    head.mk.resize(K + 1);
    head.nk.resize(K + 1);
    if (!validate_params(head).bullets_hold)
        throw Error(ErrorKind::unsupported, "epsilon bound needs the four parameter conditions");
    const LengthSeq L(p, K + 1);
    EpsilonReport r;
    BigInt prod = 1;
    for (std::size_t i = 1; i <= K; ++i) prod *= p.n(i) - p.m(i);
    r.lhs = ratio((p.n(K + 1) + 1) * BigInt(static_cast<unsigned long>(p.pi.image(0).size())) * prod,
                  L.d(static_cast<long>(K + 1)));
    r.eps = 8.0 * std::pow(48.0 / 49.0, static_cast<double>(K) / 2.0);
    r.holds = below_scaled_power(r.lhs, Rational(64), K);
    return r;
}

Rational alpha_from_beta(const SadicParams& p, const Rational& beta) {
    const Rational pi0(static_cast<long>(p.pi.image(0).size())), pi1(static_cast<long>(p.pi.image(1).size()));
    return beta / (pi1 * beta + pi0 * (1 - beta));
}

namespace {

Rational frac(const Rational& x) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

Rational nearest_int_distance(const Rational& x) {
    const Rational f = frac(x);
    const Rational g = 1 - f;
    return f < g ? f : g;
}

}  // namespace

EigenvalueEstimate eigenvalue(const SadicParams& p, std::size_t K, std::size_t bits) {
    if (K < 2) throw Error(ErrorKind::invalid_argument, "K must be at least 2");
    if (bits < 64) throw Error(ErrorKind::invalid_argument, "precision below 64 bits; request more bits");
    if (K + 1 > p.depth()) throw Error(ErrorKind::out_of_range, "eigenvalue at K needs level K + 1");
    EigenvalueEstimate out;
    out.precision_bits = bits;
    const Rational pi0(static_cast<long>(p.pi.image(0).size()));
    // deepen until the enclosure is below 2^-bits or the parameters run out
    const std::size_t deepest = p.depth() - 1;
    const LengthSeq L(p, deepest + 1);
    auto err_at = [&](std::size_t k) -> Rational {
        return pi0 * ratio(L.a_product(k + 1), L.d(static_cast<long>(k)) * L.d(static_cast<long>(k) + 1));
    };
    out.alpha = ratio(L.c(static_cast<long>(K)), L.d(static_cast<long>(K)));
    out.beta_cf = ratio(L.c(static_cast<long>(K)), L.e(static_cast<long>(K)));
    out.error_bound = err_at(K);
    const Rational target = pow(Rational(1, 2), static_cast<unsigned long>(bits));
    std::size_t level = K;
    while (level < deepest && err_at(level) >= target) ++level;
    out.refined_level = level;
    out.refined_error = err_at(level);
    const Rational refined = ratio(L.c(static_cast<long>(level)), L.d(static_cast<long>(level)));
    for (std::size_t k = 0; k <= K; ++k)
        out.distances.push_back(nearest_int_distance(Rational(L.d(static_cast<long>(k))) * refined).get_d());
    return out;
}

std::vector<DistanceCheck> distance_bounds(const SadicParams& p, std::size_t kmax) {
    if (kmax + 3 > p.depth()) throw Error(ErrorKind::out_of_range, "distance checks need a few levels beyond kmax");
    const std::size_t deepest = p.depth() - 1;
    const LengthSeq L(p, deepest + 1);
    const Rational pi0(static_cast<long>(p.pi.image(0).size()));
    std::vector<DistanceCheck> out;
    for (std::size_t level = std::min(deepest - 1, kmax + 8);; level = std::min(deepest - 1, level + 16)) {
        // alpha lies strictly between consecutive convergents
        const Rational x = ratio(L.c(static_cast<long>(level)), L.d(static_cast<long>(level)));
        const Rational y = ratio(L.c(static_cast<long>(level) + 1), L.d(static_cast<long>(level) + 1));
        const Rational width = abs(x - y);
        out.clear();
        bool all = true;
        for (std::size_t k = 0; k <= kmax; ++k) {
            DistanceCheck c;
            c.k = k;
            const Rational dk(L.d(static_cast<long>(k)));
            c.upper = nearest_int_distance(dk * x) + dk * width;
            c.bound = pi0 * ratio(L.a_product(k + 1), L.d(static_cast<long>(k) + 1));
            c.holds = c.upper < c.bound;
            all = all && c.holds;
            out.push_back(std::move(c));
        }
        if (all || level == deepest - 1) return out;
    }
}

namespace {

using u128 = unsigned __int128;

u128 fixed_point_phase(const Rational& f) {
    // floor(frac(f) * 2^128)
    const Rational fr = frac(f);
    BigInt scaled = fr.get_num();
    scaled <<= 128;
    scaled /= fr.get_den();
    u128 out = 0;
    for (int limb = 3; limb >= 0; --limb) {
        BigInt part = scaled >> (32 * limb);
        part &= BigInt(0xffffffffUL);
        out = (out << 32) | static_cast<u128>(part.get_ui());
    }
    return out;
}

}  // namespace

double weyl_probe(const Word& x, const Rational& freq, std::size_t N) {
    if (N == 0) throw Error(ErrorKind::invalid_argument, "N must be positive");
    if (x.size() < N) throw Error(ErrorKind::insufficient_data, "word shorter than N");
    const Letter* data = x.letters().data();
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const Rational fr = frac(freq);
    if (fr.get_den() <= 65536) {
        // exact residue-class sums, then one twiddle per class
        const std::size_t d = fr.get_den().get_ui();
        const std::size_t c = fr.get_num().get_ui();
        std::vector<std::int64_t> residue(d, 0);
        for (std::size_t j = 0; j < N; ++j) residue[j % d] += data[j] == 0 ? 1 : -1;
        long double re = 0, im = 0;
        for (std::size_t r = 0; r < d; ++r) {
            if (!residue[r]) continue;
            const long double angle = two_pi * static_cast<long double>((c * r) % d) / static_cast<long double>(d);
            re += static_cast<long double>(residue[r]) * std::cos(angle);
            im -= static_cast<long double>(residue[r]) * std::sin(angle);
        }
        return static_cast<double>(std::hypot(re, im) / static_cast<long double>(N));
    }
    const u128 phase = fixed_point_phase(fr);
    constexpr std::size_t chunk = std::size_t{1} << 16;
    std::vector<long double> re((N + chunk - 1) / chunk, 0), im(re.size(), 0);
    parallel_chunks(N, chunk, [&](std::size_t ci, std::size_t b, std::size_t e) {
        long double sr = 0, si = 0;
        for (std::size_t j = b; j < e; ++j) {
            const u128 ph = static_cast<u128>(j) * phase;  // exact modulo 1
            const long double turn = std::ldexp(static_cast<long double>(static_cast<std::uint64_t>(ph >> 64)), -64);
            const long double s = data[j] == 0 ? 1.0L : -1.0L;
            sr += s * std::cos(two_pi * turn);
            si -= s * std::sin(two_pi * turn);
        }
        re[ci] = sr;
        im[ci] = si;
    });
    long double tr = 0, ti = 0;
    for (std::size_t i = 0; i < re.size(); ++i) {
        tr += re[i];
        ti += im[i];
    }
    return static_cast<double>(std::hypot(tr, ti) / static_cast<long double>(N));
}

std::vector<LadderPoint> weyl_ladder(const Word& x, const Rational& freq, const std::vector<std::size_t>& Ns) {
    std::vector<LadderPoint> out;
    for (auto N : Ns) out.push_back({N, weyl_probe(x, freq, N)});
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::invalid_argument, "empty number");
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            Rational r(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
            if (sgn(r.get_den()) == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
            r.canonicalize();
            return r;
        }
        std::string digits = text;
        bool negative = false;
        if (digits[0] == '-' || digits[0] == '+') {
            negative = digits[0] == '-';
            digits.erase(0, 1);
        }
        BigInt den = 1;
        if (auto dot = digits.find('.'); dot != std::string::npos) {
            const std::size_t places = digits.size() - dot - 1;
            digits.erase(dot, 1);
            mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::invalid_argument, "not a number: " + text);
        Rational r(BigInt(digits, 10), den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::invalid_argument, "not a number: " + text);
    }
}

}  // namespace subshift
