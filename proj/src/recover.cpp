#include "subshift/recover.hpp"

#include "subshift/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace subshift {

Word unique_bispecial(const LanguageTable& t, std::size_t q) {
    if (q == 0 || q + 1 > t.n_max()) throw Error(ErrorKind::out_of_range, "q outside the table");
    if (t.p(q + 1) != t.p(q) + 1)
        throw Error(ErrorKind::not_applicable, "p(q+1) - p(q) = " + std::to_string(t.p(q + 1) - t.p(q)) + " at q = " +
                                                   std::to_string(q));
    std::optional<Word> left, right;
    for (const auto& cls : t.classes(q)) {
        if (cls.followers.size() >= 2) {
            if (right) throw Error(ErrorKind::not_applicable, "two right-special words");
            right = t.corpus().factor(cls.pos, q);
        }
        if (cls.predecessors.size() >= 2) {
            if (left) throw Error(ErrorKind::not_applicable, "two left-special words");
            left = t.corpus().factor(cls.pos, q);
        }
    }
    if (!left || !right) throw Error(ErrorKind::not_applicable, "no special word of length " + std::to_string(q));
    Word w = *left;
    Word cur = *left;
    const std::uint64_t cap = t.p(q) + 1;
    for (std::uint64_t steps = 0; cur != *right; ++steps) {
        if (steps > cap) throw Error(ErrorKind::invariant_violation, "Rauzy walk did not reach the right-special word");
        const auto f = t.followers(cur);
        if (f.size() != 1) throw Error(ErrorKind::not_applicable, "walk met a second branching vertex");
        w += f[0];
        cur = cur.suffix(q - 1) + Word{f[0]};
    }
    return w;
}

ReturnWords return_words(const LanguageTable& t, const Word& w, std::size_t max_steps) {
    if (w.empty()) throw Error(ErrorKind::invalid_argument, "return words of the empty word");
    const auto f = t.followers(w);
    if (f.size() != 2)
        throw Error(ErrorKind::not_applicable, w.str().substr(0, 64) + " is not right-special with two followers");
    if (max_steps == 0) max_steps = t.corpus().text_size();
    std::vector<Word> labels;
    for (Letter a : f) {
        Word label{a};
        Word cur = w.suffix(w.size() - 1) + Word{a};
        while (cur != w) {
            if (label.size() > max_steps) throw Error(ErrorKind::insufficient_depth, "return cycle longer than the data");
            const auto g = t.followers(cur);
            if (g.empty()) throw Error(ErrorKind::insufficient_depth, "return cycle leaves the data");
            if (g.size() > 1) throw Error(ErrorKind::not_applicable, "another right-special word of the same length");
            label += g[0];
            cur = cur.suffix(cur.size() - 1) + Word{g[0]};
        }
        labels.push_back(std::move(label));
    }
    if (labels[1].size() < labels[0].size()) std::swap(labels[0], labels[1]);
    return {labels[1], labels[0]};
}

namespace {

// u = u_star v^s with s maximal subject to u_star nonempty.
std::pair<Word, std::size_t> strip_powers(const Word& u, const Word& v) {
    std::size_t s = 0;
    while ((s + 1) * v.size() < u.size() && u.has_suffix(v.power(s + 1))) ++s;
    return {u.prefix(u.size() - s * v.size()), s};
}

struct Bootstrap {
    Word a, b, anchor;
};

std::optional<Bootstrap> refine(const Word& v, const Word& u, const Word& anchor, bool suffix_of_v) {
    // b = u_star v where u = u_star v^s with 0 < |u_star| < |v|
    if (!is_root(v, u)) return std::nullopt;
    auto [u_star, s] = strip_powers(u, v);
    if (u_star.empty() || u_star.size() >= v.size() || (suffix_of_v && !v.has_suffix(u_star))) return std::nullopt;
    return Bootstrap{v, u_star + v, anchor};
}

std::optional<Bootstrap> bootstrap(const LanguageTable& t, std::size_t q) {
    Word w;
    ReturnWords rw;
    try {
        w = unique_bispecial(t, q);
        if (w.size() >= t.n_max()) return std::nullopt;
        rw = return_words(t, w);
    } catch (const Error&) {
        return std::nullopt;
    }
    const Word& v = rw.v;
    const Word& u = rw.u;
    if (v.front() == u.front() || v.size() >= w.size() || !is_root(v, w)) return std::nullopt;
    if (w.size() < 3 * v.size()) return refine(v, u, w, true);
    // long bi-special: look for a shorter right-special suffix w0 with |v| <= |w0| < 2|v|
    std::size_t len = v.size();
    for (; len < 2 * v.size() && len + 1 <= t.n_max(); ++len) {
        if (t.p(len + 1) != t.p(len) + 1) continue;
        if (t.followers(w.suffix(len)).size() == 2) break;
    }
    if (len >= 2 * v.size() || len + 1 > t.n_max()) return std::nullopt;
    Word w00;
    ReturnWords rw0;
    try {
        w00 = unique_bispecial(t, len);
        rw0 = return_words(t, w00);
    } catch (const Error&) {
        return std::nullopt;
    }
    // v0 is the return word starting like v; u0 is the other one
    const Word& u0 = rw0.v.front() == v.front() ? rw0.u : rw0.v;
    if (u0.size() <= v.size()) return refine(u0, v, w00, false);
    return refine(v, u0, w00, false);
}

std::optional<std::vector<Letter>> parse_blocks(const Word& x, const Word& a, const Word& b, const Word& anchor) {
    const auto& xs = x.letters();
    auto it = std::search(xs.begin(), xs.end(), std::boyer_moore_horspool_searcher(anchor.letters().begin(), anchor.letters().end()));
    if (it == xs.end()) return std::nullopt;
    std::size_t pos = static_cast<std::size_t>(it - xs.begin()) + anchor.size();
    const std::size_t N = x.size();
    auto at = [&](const Word& blk) {
        return pos + blk.size() <= N && std::equal(blk.letters().begin(), blk.letters().end(), xs.begin() + static_cast<std::ptrdiff_t>(pos));
    };
    std::vector<Letter> seq;
    while (pos < N) {
        if (at(a)) {
            seq.push_back(0);
            pos += a.size();
        } else if (at(b)) {
            seq.push_back(1);
            pos += b.size();
        } else if (pos + std::max(a.size(), b.size()) > N) {
            break;
        } else {
            return std::nullopt;
        }
    }
    return seq;
}

struct Attempt {
    std::size_t q = 0;
    Bootstrap boot;
    std::vector<BigInt> mk, nk;
    bool three_gaps = false;
};

void read_levels(std::vector<Letter> seq, std::size_t depth, Attempt& at) {
    while (at.mk.size() < depth) {
        std::vector<std::size_t> ones;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == 1) ones.push_back(i);
        // need at least three complete next-level blocks
        if (ones.size() < 4) return;
        std::vector<std::size_t> gaps;
        for (std::size_t i = 1; i < ones.size(); ++i) gaps.push_back(ones[i] - ones[i - 1] - 1);
        const std::set<std::size_t> values(gaps.begin(), gaps.end());
        if (values.size() > 2) {
            at.three_gaps = true;
            return;
        }
        if (values.size() < 2) return;
        const std::size_t lo = *values.begin(), hi = *values.rbegin();
        at.mk.emplace_back(static_cast<unsigned long>(lo + 1));
        at.nk.emplace_back(static_cast<unsigned long>(hi + 1));
        std::vector<Letter> next;
        next.reserve(gaps.size());
        for (auto g : gaps) next.push_back(g == hi ? 1 : 0);
        seq = std::move(next);
    }
}

// Regenerates the language from the level-D block pairs and compares it with x at every n <= |V_D| + 1.
std::optional<std::size_t> certify(const Word& x, const Attempt& at, std::size_t D) {
    if (D == 0 || D > at.mk.size()) return std::nullopt;
    Word V = at.boot.a, U = at.boot.b;
    constexpr std::size_t budget = std::size_t{1} << 24;
    for (std::size_t j = 0; j + 1 < D; ++j) {
        const std::size_t m = to_size(at.mk[j]), n = to_size(at.nk[j]);
        if ((n - 1) * V.size() + U.size() > budget) return std::nullopt;
        Word nv = V.power(m - 1) + U;
        Word nu = V.power(n - 1) + U;
        V = std::move(nv);
        U = std::move(nu);
    }
    const std::size_t L = V.size() + 1;
    if (2 * L > x.size()) return std::nullopt;
    std::vector<Word> pairs{V + U, U + V};
    if (at.nk[D - 1] >= 3) pairs.push_back(V + V);
    if (at.mk[D - 1] == 1) pairs.push_back(U + U);
    const Corpus regenerated(pairs);
    pairs.push_back(x);
    const Corpus joint(std::move(pairs));
    const Corpus data(std::vector<Word>{x});
    const auto cr = regenerated.factor_counts(L), cj = joint.factor_counts(L), cd = data.factor_counts(L);
    for (std::size_t n = 1; n <= L; ++n)
        if (cr[n] != cj[n] || cd[n] != cj[n]) return std::nullopt;
    return L;
}

}  // namespace

SadicParams RecoveryResult::params() const { return make_params(pi0, pi1, mk, nk); }

RecoveryResult recover_structure(const Word& x, std::size_t depth, const RecoverOptions& opts) {
    if (depth == 0) throw Error(ErrorKind::invalid_argument, "depth must be positive");
    if (x.size() < 64) throw Error(ErrorKind::insufficient_data, "need at least 64 symbols");
    // self-consistency: the first half must already show every factor the whole word shows
    std::size_t n_valid = x.size() / 4;
    try {
        stability_check(LanguageTable::from_word(x.prefix(x.size() / 2), n_valid, "first half"),
                        LanguageTable::from_word(x, n_valid, "input"));
    } catch (const InsufficientDepth& e) {
        n_valid = e.first_bad_n() - 1;
    }
    if (n_valid < 2) throw Error(ErrorKind::insufficient_data, "input language not self-consistent beyond n = 1");
    const LanguageTable t = LanguageTable::from_word(x, n_valid, "input").certified("half-prefix stable");

    RecoveryResult res;
    res.validated_n = n_valid;
    for (std::size_t q = 1; q <= n_valid; ++q)
        res.max_ratio = std::max(res.max_ratio, static_cast<double>(t.p(q)) / static_cast<double>(q));

    std::optional<Attempt> best;
    bool saw_three = false, any_bootstrap = false;
    const std::size_t top = std::min(n_valid - 1, opts.max_bootstrap_length);
    for (std::size_t q = top; q >= 1; --q) {
        if (t.p(q + 1) != t.p(q) + 1) continue;
        auto boot = bootstrap(t, q);
        if (!boot) continue;
        auto seq = parse_blocks(x, boot->a, boot->b, boot->anchor);
        if (!seq) continue;
        any_bootstrap = true;
        Attempt at;
        at.q = q;
        at.boot = std::move(*boot);
        read_levels(std::move(*seq), depth, at);
        saw_three = saw_three || at.three_gaps;
        if (at.mk.size() >= depth) {
            if (auto L = certify(x, at, depth)) {
                res.pi0 = at.boot.a;
                res.pi1 = at.boot.b;
                res.mk = at.mk;
                res.nk = at.nk;
                res.depth = depth;
                res.certified = true;
                res.certified_length = *L;
                res.bootstrap_q = q;
                res.note = "deepest bootstrap certified";
                return res;
            }
        }
        if (!best || at.mk.size() > best->mk.size()) best = std::move(at);
    }
    if (saw_three)
        throw Error(ErrorKind::complexity_too_high, "three distinct gaps between consecutive long blocks");
    if (!any_bootstrap) {
        if (res.max_ratio >= 4.0 / 3.0)
            throw Error(ErrorKind::complexity_too_high, "no bootstrap and p(q)/q reaches " + std::to_string(res.max_ratio));
        throw Error(ErrorKind::insufficient_data, "no bi-special word supports a block decomposition");
    }
    res.pi0 = best->boot.a;
    res.pi1 = best->boot.b;
    res.mk = best->mk;
    res.nk = best->nk;
    res.depth = best->mk.size();
    res.bootstrap_q = best->q;
    if (auto L = certify(x, *best, res.depth)) {
        res.certified = true;
        res.certified_length = *L;
    }
    res.note = "requested depth not reached; result is uncertified at the requested depth";
    return res;
}

}  // namespace subshift
