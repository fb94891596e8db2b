#include "subshift/sadic.hpp"

#include "subshift/error.hpp"
#include "subshift/parallel.hpp"

#include <algorithm>

namespace subshift {

std::string_view to_string(Tier t) { return t == Tier::full ? "full-4/3" : "structural"; }

const BigInt& SadicParams::m(std::size_t k) const {
    if (k == 0 || k > mk.size()) throw Error(ErrorKind::out_of_range, "level " + std::to_string(k) + " has no parameters");
    return mk[k - 1];
}

const BigInt& SadicParams::n(std::size_t k) const {
    if (k == 0 || k > nk.size()) throw Error(ErrorKind::out_of_range, "level " + std::to_string(k) + " has no parameters");
    return nk[k - 1];
}

std::vector<TauParams> SadicParams::taus() const {
    std::vector<TauParams> out;
    out.reserve(mk.size());
    for (std::size_t i = 0; i < mk.size(); ++i) out.push_back({mk[i], nk[i]});
    return out;
}

void SadicParams::check_structure() const {
    if (pi.domain_size() != 2) throw Error(ErrorKind::invalid_argument, "pi must map the letters 0 and 1");
    if (mk.size() != nk.size()) throw Error(ErrorKind::invalid_argument, "mk and nk differ in length");
    for (std::size_t i = 0; i < mk.size(); ++i)
        if (sgn(mk[i]) <= 0 || mk[i] >= nk[i])
            throw Error(ErrorKind::invalid_argument, "level " + std::to_string(i + 1) + ": need 0 < m < n, got (" +
                                                         mk[i].get_str() + "," + nk[i].get_str() + ")");
}

SadicParams make_params(const Word& pi0, const Word& pi1, std::vector<BigInt> mk, std::vector<BigInt> nk) {
    SadicParams p{Substitution({pi0, pi1}), std::move(mk), std::move(nk)};
    p.check_structure();
    return p;
}

SadicParams periodic_params(const Word& pi0, const Word& pi1, const std::vector<std::pair<long, long>>& block,
                            std::size_t levels) {
    std::vector<BigInt> mk, nk;
    for (std::size_t i = 0; i < levels; ++i) {
        mk.emplace_back(block[i % block.size()].first);
        nk.emplace_back(block[i % block.size()].second);
    }
    return make_params(pi0, pi1, std::move(mk), std::move(nk));
}

AdmissibilityReport validate_params(const SadicParams& p) {
    p.check_structure();
    AdmissibilityReport r;
    auto at = [](std::size_t k) { return "level " + std::to_string(k) + ": "; };
    for (std::size_t k = 1; k <= p.depth(); ++k) {
        const BigInt& m = p.m(k);
        const BigInt& n = p.n(k);
        if (m > 1 && n > 2 * m) r.violations.push_back(at(k) + "n <= 2m required when m > 1");
        if (m > 4 && !(10 * n < 19 * m)) r.violations.push_back(at(k) + "n < 1.9m required when m > 4");
        if (m == 1 && n > 3) r.violations.push_back(at(k) + "n <= 3 required when m = 1");
        if (k >= 2 && m == 1 && n == 3 && p.n(k - 1) != p.m(k - 1) + 1)
            r.violations.push_back(at(k) + "(m, n) = (1, 3) requires n = m + 1 at the previous level");
    }
    r.bullets_hold = r.violations.empty();
    const Word& a = p.pi.image(0);
    const Word& b = p.pi.image(1);
    r.pi_condition = a.size() < b.size() && b.size() < 2 * a.size() && a.front() != b.front();
    if (!r.pi_condition) r.violations.push_back("pi: need |pi(0)| < |pi(1)| < 2|pi(0)| with distinct first letters");
    r.tier = r.bullets_hold && r.pi_condition ? Tier::full : Tier::structural;
    return r;
}

std::vector<DerivedLengths> derived_lengths(const SadicParams& p, std::size_t K) {
    p.check_structure();
    if (K == 0) throw Error(ErrorKind::invalid_argument, "levels start at 1");
    if (K > p.depth() + 1) throw Error(ErrorKind::out_of_range, "not enough parameter levels");
    const Word& v1 = p.pi.image(0);
    const Word& u1 = p.pi.image(1);
    std::vector<DerivedLengths> out;
    out.push_back({1, BigInt(u1.size()), BigInt(v1.size()), BigInt(max_common_suffix_periodic(v1, u1).size()), 0});
    for (std::size_t k = 1; k < K; ++k) {
        const auto& c = out.back();
        const BigInt& m = p.m(k);
        const BigInt& n = p.n(k);
        DerivedLengths next;
        next.k = k + 1;
        next.v = (m - 1) * c.v + c.u;
        next.u = (n - 1) * c.v + c.u;
        next.s = c.s + next.v;
        next.p = (m - 1) * c.v + c.p;
        out.push_back(std::move(next));
    }
    return out;
}

DerivedWords derived_words(const SadicParams& p, std::size_t k, std::size_t max_symbols) {
    const auto lengths = derived_lengths(p, k);
    const auto& last = lengths.back();
    if (last.u > max_symbols || last.s > max_symbols)
        throw Error(ErrorKind::budget_exceeded, "level " + std::to_string(k) + " words have length " +
                                                    last.u.get_str() + " (budget " + std::to_string(max_symbols) + ")");
    DerivedWords d;
    d.k = 1;
    d.v = p.pi.image(0);
    d.u = p.pi.image(1);
    d.s = max_common_suffix_periodic(d.v, d.u);
    for (std::size_t j = 1; j < k; ++j) {
        const std::size_t m = to_size(p.m(j)), n = to_size(p.n(j));
        Word head = d.v.power(m - 1);
        Word v = head + d.u;
        Word u = d.v.power(n - 1) + d.u;
        d.s += v;
        d.p = head + d.p;
        d.v = std::move(v);
        d.u = std::move(u);
        d.k = j + 1;
    }
    return d;
}

SadicSystem::SadicSystem(SadicParams params, std::size_t max_symbols)
    : params_(std::move(params)), max_symbols_(max_symbols) {
    params_.check_structure();
}

const DerivedWords& SadicSystem::derived(std::size_t k) const {
    std::lock_guard lock(mutex_);
    while (cache_.size() < k) cache_.push_back(derived_words(params_, cache_.size() + 1, max_symbols_));
    return cache_[k - 1];
}

BlockDecomposition unique_decompose(const Word& w, const SadicParams& p, std::size_t k) {
    p.check_structure();
    if (k > p.depth()) throw Error(ErrorKind::out_of_range, "level beyond the parameter list");
    const Word& a = p.pi.image(0);
    const Word& b = p.pi.image(1);
    // parses of each prefix over {pi(0), pi(1)}, counted up to 2
    const std::size_t N = w.size();
    std::vector<std::uint8_t> ways(N + 1, 0);
    std::vector<std::int8_t> last(N + 1, -1);
    ways[0] = 1;
    auto matches = [&](const Word& blk, std::size_t at) {
        return at + blk.size() <= N && std::equal(blk.letters().begin(), blk.letters().end(), w.letters().begin() + static_cast<std::ptrdiff_t>(at));
    };
    for (std::size_t i = 0; i < N; ++i) {
        if (!ways[i]) continue;
        for (Letter c = 0; c < 2; ++c) {
            const Word& blk = c ? b : a;
            if (matches(blk, i)) {
                auto& slot = ways[i + blk.size()];
                slot = static_cast<std::uint8_t>(std::min(2, slot + ways[i]));
                last[i + blk.size()] = static_cast<std::int8_t>(c);
            }
        }
    }
    if (ways[N] == 0) throw Error(ErrorKind::not_a_concatenation, w.str().substr(0, 64) + " is not a concatenation of pi-blocks");
    if (ways[N] > 1) throw Error(ErrorKind::invariant_violation, "decomposition into pi-blocks is not unique");
    std::vector<Letter> seq;
    for (std::size_t i = N; i > 0;) {
        const Letter c = static_cast<Letter>(last[i]);
        seq.push_back(c);
        i -= (c ? b : a).size();
    }
    std::reverse(seq.begin(), seq.end());
    // each higher level groups 0^{m-1}1 -> 0 and 0^{n-1}1 -> 1
    for (std::size_t j = 1; j <= k; ++j) {
        std::vector<Letter> next;
        BigInt zeros = 0;
        for (Letter c : seq) {
            if (c == 0) {
                ++zeros;
                continue;
            }
            if (zeros == p.m(j) - 1)
                next.push_back(0);
            else if (zeros == p.n(j) - 1)
                next.push_back(1);
            else
                throw Error(ErrorKind::not_a_concatenation, "run of " + zeros.get_str() + " zeros fits no level-" +
                                                                std::to_string(j) + " block");
            zeros = 0;
        }
        if (zeros != 0)
            throw Error(ErrorKind::not_a_concatenation, "word does not end on a level-" + std::to_string(j) + " block");
        seq = std::move(next);
    }
    return {k, std::move(seq)};
}

BigInt calibrate_constant(const SadicParams& p, const LanguageTable& calibration) {
    const auto len = derived_lengths(p, 2);
    const std::size_t at = to_size(len[1].s + len[1].p);
    if (!calibration.validated())
        throw Error(ErrorKind::insufficient_depth, "calibration table is not validated");
    if (at > calibration.n_max())
        throw Error(ErrorKind::insufficient_depth, "calibration needs p(" + std::to_string(at) + ")");
    return BigInt(static_cast<unsigned long>(calibration.p(at))) - BigInt(static_cast<unsigned long>(at));
}

ClosedForm::ClosedForm(SadicParams params, BigInt constant) : params_(std::move(params)), K_(std::move(constant)) {
    if (params_.depth() < 2) throw Error(ErrorKind::invalid_argument, "closed form needs at least two levels");
    len_ = derived_lengths(params_, params_.depth());
}

ClosedForm::ClosedForm(const SadicParams& params, const LanguageTable& calibration)
    : ClosedForm(params, calibrate_constant(params, calibration)) {}

const DerivedLengths& ClosedForm::lengths(std::size_t k) const {
    if (k == 0 || k > len_.size()) throw Error(ErrorKind::out_of_range, "level outside the parameter list");
    return len_[k - 1];
}

BigInt ClosedForm::lo(std::size_t k) const {
    const auto& l = lengths(k);
    return l.s + (params_.m(k) - 1) * l.v + l.p;
}

BigInt ClosedForm::mid(std::size_t k) const {
    const auto& l = lengths(k);
    return l.s + (params_.n(k) - 2) * l.v + l.p;
}

BigInt ClosedForm::domain_start() const { return lengths(2).s + lengths(2).p; }

ClosedFormValue ClosedForm::evaluate(const BigInt& q) const {
    if (q < domain_start())
        throw Error(ErrorKind::out_of_range, "q = " + q.get_str() + " is below the formula's range (starts at " +
                                                 domain_start().get_str() + ")");
    if (q <= lo(2) + 1) return {q + K_, 1, 'A'};
    BigInt excess = 0;  // sum_{j=2}^{k-1} (n_j - m_j - 1)|v_j|
    for (std::size_t k = 2; k <= params_.depth(); ++k) {
        const BigInt lo_k = lo(k) + 1, mid_k = mid(k) + 1;
        if (lo_k <= q && q <= mid_k) return {2 * q - lo_k + excess + K_, k, 'B'};
        if (k == params_.depth()) break;
        excess += (params_.n(k) - params_.m(k) - 1) * lengths(k).v;
        if (mid_k <= q && q <= lo(k + 1) + 1) return {q + excess + K_, k, 'A'};
    }
    throw Error(ErrorKind::out_of_range, "q = " + q.get_str() + " lies beyond the available parameter levels");
}

BigInt closed_form_complexity(const SadicParams& p, const BigInt& q, const LanguageTable& calibration) {
    return ClosedForm(p, calibration).evaluate(q).value;
}

namespace {

BigInt a_product(const SadicParams& p, std::size_t upto) {
    // a_1 ... a_upto with a_1 = 1, a_j = n_{j-1} - m_{j-1}
    BigInt prod = 1;
    for (std::size_t j = 2; j <= upto; ++j) prod *= p.n(j - 1) - p.m(j - 1);
    return prod;
}

}  // namespace

DiffCount yz_diff_count(const SadicParams& p, int i, std::size_t k, std::size_t reps, std::size_t max_symbols) {
    p.check_structure();
    if (i != 0 && i != 1) throw Error(ErrorKind::invalid_argument, "i must be 0 or 1");
    if (reps == 0) throw Error(ErrorKind::invalid_argument, "reps must be positive");
    if (k > p.depth()) throw Error(ErrorKind::out_of_range, "level beyond the parameter list");
    const auto taus = p.taus();
    const auto lens = image_lengths(p.pi, taus, k);
    if (lens[0] * reps + lens[1] > max_symbols)
        throw Error(ErrorKind::budget_exceeded, "y/z words exceed the budget");
    GenerateOptions opts;
    opts.max_symbols = max_symbols;
    const Word zero = generate_image(p.pi, taus, k, 0, opts);
    const Word one = generate_image(p.pi, taus, k, 1, opts);
    const Word& rep = i == 0 ? zero : one;
    const Word& tail = i == 0 ? one : zero;
    const Word y = rep.power(reps) + tail;
    const Word z = tail + rep.power(reps);
    DiffCount out;
    for (std::size_t t = 0; t < y.size(); ++t) out.count += y[t] != z[t];
    out.bound = 2 * BigInt(static_cast<unsigned long>(p.pi.image(1).size())) * reps * a_product(p, k + 1);
    return out;
}

std::uint64_t shift_differences(const Word& x, std::uint64_t q, std::uint64_t N) {
    if (x.size() < N + q) throw Error(ErrorKind::insufficient_data, "word shorter than N + q");
    std::vector<std::uint64_t> partial((N + (1u << 20) - 1) >> 20, 0);
    const Letter* data = x.letters().data();
    parallel_chunks(N, std::size_t{1} << 20, [&](std::size_t c, std::size_t b, std::size_t e) {
        std::uint64_t cnt = 0;
        for (std::size_t t = b; t < e; ++t) cnt += data[t] != data[t + q];
        partial[c] = cnt;
    });
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

DensityReport shift_diff_density(const SadicParams& p, std::uint64_t q, std::uint64_t N, std::size_t max_symbols) {
    p.check_structure();
    DensityReport r;
    r.q = q;
    r.N = N;
    if (N == 0) throw Error(ErrorKind::invalid_argument, "N must be positive");
    const auto taus = p.taus();
    if (q != 0) {
        std::size_t level = 0;
        while (image_lengths(p.pi, taus, level)[0] < N + q) {
            if (++level > p.depth()) throw Error(ErrorKind::insufficient_data, "parameters too short for N + q symbols");
        }
        GenerateOptions opts;
        opts.max_symbols = max_symbols;
        opts.prefix = static_cast<std::size_t>(N + q);
        const Word x = generate_word(p.pi, taus, level, opts);
        r.differences = shift_differences(x, q, N);
    }
    r.density = Rational(BigInt(static_cast<unsigned long>(r.differences)), BigInt(static_cast<unsigned long>(N)));
    r.density.canonicalize();
    const BigInt two_pi1 = 2 * BigInt(static_cast<unsigned long>(p.pi.image(1).size()));
    for (std::size_t k = 0; k < p.depth(); ++k) {
        const auto d = image_lengths(p.pi, taus, k)[0];
        if (d > q) break;
        if (d != q) continue;
        Rational b(two_pi1 * a_product(p, k + 1), image_lengths(p.pi, taus, k + 1)[0]);
        b.canonicalize();
        if (!r.bound || b < *r.bound) {
            r.bound = b;
            r.k = k;
        }
    }
    return r;
}

SyndeticReport syndetic_set(const SadicParams& p, std::size_t k, std::uint64_t horizon, std::uint64_t cap) {
    p.check_structure();
    if (horizon > cap) throw Error(ErrorKind::budget_exceeded, "horizon above the configured cap");
    const auto taus = p.taus();
    std::vector<char> reach(horizon + 1, 0);
    reach[0] = 1;
    for (std::size_t i = k; i + 1 <= p.depth(); ++i) {
        const BigInt d = image_lengths(p.pi, taus, i)[0];
        if (d > horizon) break;
        const std::uint64_t di = to_u64(d);
        const BigInt digits = p.n(i + 1) + 1;
        const std::uint64_t top = digits < horizon / di ? to_u64(digits) : horizon / di;
        std::vector<char> next(reach);
        for (std::uint64_t s = 0; s <= horizon; ++s) {
            if (!reach[s]) continue;
            for (std::uint64_t c = 1; c <= top && s + c * di <= horizon; ++c) next[s + c * di] = 1;
        }
        reach = std::move(next);
    }
    SyndeticReport r;
    for (std::uint64_t s = 0; s <= horizon; ++s)
        if (reach[s]) r.elements.push_back(s);
    std::uint64_t prev = 0;
    for (auto s : r.elements) {
        r.max_gap = std::max(r.max_gap, s - prev);
        prev = s;
    }
    r.max_gap = std::max(r.max_gap, horizon - prev);
    return r;
}

LanguageTable block_pair_language(const SadicParams& p, std::size_t j, std::size_t max_symbols) {
    const DerivedWords d = derived_words(p, j, max_symbols);
    const BigInt& m = p.m(j);
    const BigInt& n = p.n(j);
    std::vector<Word> pairs{d.v + d.u, d.u + d.v};
    if (n >= 3) pairs.push_back(d.v + d.v);
    if (m == 1) pairs.push_back(d.u + d.u);
    return LanguageTable::from_factors(std::move(pairs), d.v.size() + 1,
                                       "level-" + std::to_string(j) + " block pairs");
}

LanguageTable validated_table(const SadicParams& p, std::size_t K, std::size_t n_max, std::size_t max_symbols) {
    p.check_structure();
    if (K + 1 > p.depth()) throw Error(ErrorKind::insufficient_depth, "validation needs level K + 1 parameters");
    const auto taus = p.taus();
    const auto len = image_lengths(p.pi, taus, K)[0];
    if (len < 2 * n_max)
        throw InsufficientDepth(to_size(len) / 2 + 1, "level " + std::to_string(K) + " word has length " + len.get_str() +
                                                          " < 2 n_max = " + std::to_string(2 * n_max));
    GenerateOptions opts;
    opts.max_symbols = max_symbols;
    const auto t1 = LanguageTable::from_word(generate_word(p.pi, taus, K, opts), n_max, "level " + std::to_string(K));
    const auto t2 = LanguageTable::from_word(generate_word(p.pi, taus, K + 1, opts), n_max, "level " + std::to_string(K + 1));
    return stability_check(t1, t2);
}

LanguageTable auto_validated_table(const SadicParams& p, std::size_t n_max, std::size_t max_symbols) {
    const auto taus = p.taus();
    for (std::size_t K = 0; K + 1 <= p.depth(); ++K) {
        if (image_lengths(p.pi, taus, K)[0] < 2 * n_max) continue;
        if (image_lengths(p.pi, taus, K + 1)[0] > max_symbols)
            throw Error(ErrorKind::budget_exceeded, "no level up to the budget validates n_max = " + std::to_string(n_max));
        try {
            return validated_table(p, K, n_max, max_symbols);
        } catch (const InsufficientDepth&) {
        }
    }
    throw Error(ErrorKind::insufficient_depth, "parameter list exhausted before the table validated");
}

}  // namespace subshift
