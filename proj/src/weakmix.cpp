#include "subshift/weakmix.hpp"

#include "subshift/error.hpp"

#include <array>

namespace subshift {

GrowthSchedule schedule_by_name(const std::string& name) {
    if (name == "default" || name == "square")
        return [](const BigInt& prev, std::size_t) {
            const BigInt sq = prev * prev;
            return sq > 4 ? sq : BigInt(4);
        };
    if (name == "double")
        return [](const BigInt& prev, std::size_t) {
            const BigInt twice = 2 * prev;
            return twice > 4 ? twice : BigInt(4);
        };
    throw Error(ErrorKind::invalid_argument, "unknown schedule '" + name + "' (expected default or double)");
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned long, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : witnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    // deterministic for n < 2^64 with the first twelve primes as witnesses
    BigInt d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    const BigInt n1 = n - 1;
    for (unsigned long w : witnesses) {
        BigInt x;
        const BigInt base(w);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

WeakMixExample build_example(const ExampleConfig& cfg) {
    if (cfg.kmax < 2) throw Error(ErrorKind::invalid_argument, "kmax must be at least 2");
    WeakMixExample out;
    std::vector<BigInt> mk{1}, nk{2};
    // d_{-1}, d_0, d_1 for pi = identity and (m_1, n_1) = (1, 2)
    BigInt d_prev2 = 1, d_prev = 1;
    BigInt p_len = 0;  // |p_k|
    const BigInt K = 1;  // p(|s_2 p_2|) - |s_2 p_2| = p(1) - 1 on a binary alphabet
    for (std::size_t k = 2; k <= cfg.kmax; ++k) {
        const BigInt a = nk.back() - mk.back();
        // |p_k| = |p_{k-1}| + (m_{k-1} - 1)|v_{k-1}|, and |v_{k-1}| = d_{k-2}
        p_len += (mk.back() - 1) * d_prev2;
        ExampleLevel lvl;
        lvl.k = k;
        lvl.minimum = cfg.growth(mk.back(), k);
        BigInt b = lvl.minimum;
        for (;; ++b) {
            if (lvl.candidates++ >= cfg.search_cap)
                throw Error(ErrorKind::schedule_too_tight,
                            "no prime d_" + std::to_string(k) + " among " + std::to_string(cfg.search_cap) +
                                " candidates from b = " + lvl.minimum.get_str() + " (d_{k-1} = " + d_prev.get_str() +
                                ", a_k = " + a.get_str() + ")");
            if (cfg.liminf_target) {
                // need |p_k| + K < f(|v_k^{b-1} p_k|), |v_k| = d_{k-1}
                const BigInt q_low = (b - 1) * d_prev + p_len;
                if (!(BigInt(p_len + K).get_d() < cfg.liminf_target(q_low.get_d()))) continue;
            }
            const BigInt d = b * d_prev + a * d_prev2;
            if (is_prime(d)) {
                lvl.d = d;
                break;
            }
        }
        lvl.m = b;
        lvl.n = 2 * b;
        BigInt g;
        const BigInt other = b * d_prev;  // a_{k+1} d_{k-1} with a_{k+1} = n_k - m_k = m_k
        mpz_gcd(g.get_mpz_t(), lvl.d.get_mpz_t(), other.get_mpz_t());
        lvl.coprime = g == 1;
        mk.push_back(lvl.m);
        nk.push_back(lvl.n);
        d_prev2 = d_prev;
        d_prev = lvl.d;
        out.levels.push_back(std::move(lvl));
    }
    out.params = make_params(Word{0}, Word{1}, std::move(mk), std::move(nk));
    return out;
}

LandmarkReport landmark_complexities(const SadicParams& p, std::size_t K, const LanguageTable& table,
                                     const std::function<double(double)>& f) {
    if (K < 2) throw Error(ErrorKind::invalid_argument, "landmarks start at k = 2");
    if (K > p.depth()) throw Error(ErrorKind::out_of_range, "K exceeds the parameter list");
    const ClosedForm cf(p, table);
    LandmarkReport r;
    r.K = cf.constant();
    const Rational Kq(r.K);
    for (std::size_t k = 2; k <= K; ++k) {
        const auto& l = cf.lengths(k);
        LandmarkRow row;
        row.k = k;
        row.q = cf.mid(k);
        row.p = cf.evaluate(row.q).value;
        row.ratio = Rational(row.p, row.q);
        row.ratio.canonicalize();
        row.excess = Rational(row.p) - Rational(3, 2) * Rational(row.q);
        const Rational predicted = Rational(3, 2) * Rational(row.q) - Rational(l.s - l.p) / 2 + Kq - 1;
        row.identity_holds = Rational(row.p) == predicted;
        row.q_low = (p.m(k) - 1) * l.v + l.p;
        row.p_low = cf.evaluate(row.q_low).value;
        row.ratio_low = Rational(row.p_low, row.q_low);
        row.ratio_low.canonicalize();
        row.low_identity_holds = row.p_low == row.q_low + l.p + r.K;
        if (row.q <= table.n_max()) {
            row.p_table = table.p(to_size(row.q));
            r.table_agrees = r.table_agrees && BigInt(static_cast<unsigned long>(*row.p_table)) == row.p;
        }
        if (row.q_low <= table.n_max()) {
            row.p_low_table = table.p(to_size(row.q_low));
            r.table_agrees = r.table_agrees && BigInt(static_cast<unsigned long>(*row.p_low_table)) == row.p_low;
        }
        if (f) row.below_target = BigInt(row.p_low - row.q_low).get_d() < f(row.q_low.get_d());
        r.rows.push_back(std::move(row));
    }
    r.excess_strictly_decreasing = true;
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        if (!(r.rows[i].excess < r.rows[i - 1].excess)) r.excess_strictly_decreasing = false;
    return r;
}

}  // namespace subshift
