#include "subshift/language.hpp"

#include "subshift/error.hpp"
#include "subshift/suffix_array.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

namespace subshift {

Corpus::Corpus(std::vector<Word> sources) {
    if (sources.empty()) throw Error(ErrorKind::invalid_argument, "corpus needs at least one source word");
    std::size_t total = 0;
    for (const auto& w : sources) total += w.size() + 1;
    if (total >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
        throw Error(ErrorKind::budget_exceeded, "corpus of " + std::to_string(total) + " symbols is too large");
    text_.reserve(total);
    const auto count = static_cast<std::int32_t>(sources.size());
    std::vector<std::int32_t> ints;
    ints.reserve(total);
    for (std::int32_t i = 0; i < count; ++i) {
        const auto& w = sources[static_cast<std::size_t>(i)];
        starts_.push_back(text_.size());
        longest_ = std::max(longest_, w.size());
        for (Letter a : w.letters()) {
            if (a == separator) throw Error(ErrorKind::invalid_argument, "letter 255 is reserved");
            text_.push_back(a);
            ints.push_back(count + a);
        }
        // distinct separators, all below every letter: no common prefix runs across a source end
        text_.push_back(separator);
        ints.push_back(i);
    }
    sa_ = suffix_array(ints, count + 255);
    lcp_ = lcp_array(ints, sa_);
}

std::size_t Corpus::avail(std::size_t pos) const {
    std::size_t end;
    if (starts_.size() == 1) {
        end = text_.size() - 1;
    } else {
        auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
        end = (it == starts_.end() ? text_.size() : *it) - 1;
    }
    return end - pos;
}

bool Corpus::at_source_start(std::size_t pos) const {
    return pos == 0 || text_[pos - 1] == separator;
}

std::vector<std::uint64_t> Corpus::factor_counts(std::size_t n_max) const {
    std::vector<std::int64_t> diff(n_max + 2, 0);
    for (std::size_t i = 0; i < sa_.size(); ++i) {
        const std::size_t av = std::min(avail(static_cast<std::size_t>(sa_[i])), n_max);
        const auto l = static_cast<std::size_t>(lcp_[i]);
        // suffix i introduces new factors at every length in (lcp, avail]
        if (l < av) {
            ++diff[l + 1];
            --diff[av + 1];
        }
    }
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    counts[0] = 1;
    std::int64_t run = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        run += diff[n];
        counts[n] = static_cast<std::uint64_t>(run);
    }
    return counts;
}

namespace {

// <0 if the suffix at pos sorts before pattern, 0 if pattern is a prefix of it, >0 otherwise.
int compare_suffix(const std::vector<Letter>& text, std::size_t pos, std::span<const Letter> pattern) {
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        const std::size_t at = pos + k;
        if (at >= text.size() || text[at] == Corpus::separator) return -1;
        if (text[at] != pattern[k]) return text[at] < pattern[k] ? -1 : 1;
    }
    return 0;
}

}  // namespace

std::pair<std::size_t, std::size_t> Corpus::locate(std::span<const Letter> pattern) const {
    auto lo = std::partition_point(sa_.begin(), sa_.end(), [&](std::int32_t p) {
        return compare_suffix(text_, static_cast<std::size_t>(p), pattern) < 0;
    });
    auto hi = std::partition_point(lo, sa_.end(), [&](std::int32_t p) {
        return compare_suffix(text_, static_cast<std::size_t>(p), pattern) == 0;
    });
    return {static_cast<std::size_t>(lo - sa_.begin()), static_cast<std::size_t>(hi - sa_.begin())};
}

Word Corpus::factor(std::size_t pos, std::size_t n) const {
    auto first = text_.begin() + static_cast<std::ptrdiff_t>(pos);
    return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(n)));
}

std::vector<Word> Corpus::sources() const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < starts_.size(); ++i) out.push_back(factor(starts_[i], avail(starts_[i])));
    return out;
}

LanguageTable LanguageTable::from_word(const Word& w, std::size_t n_max, std::string source) {
    if (w.size() < 2 * n_max)
        throw Error(ErrorKind::word_too_short, "word of length " + std::to_string(w.size()) +
                                                   " cannot support tables to n = " + std::to_string(n_max));
    LanguageTable t;
    t.corpus_ = std::make_shared<const Corpus>(std::vector<Word>{w});
    t.counts_ = t.corpus_->factor_counts(n_max);
    t.n_max_ = n_max;
    t.source_ = std::move(source);
    return t;
}

LanguageTable LanguageTable::from_factors(std::vector<Word> words, std::size_t n_max, std::string source) {
    for (const auto& w : words)
        if (w.size() < n_max)
            throw Error(ErrorKind::word_too_short, "factor " + w.str() + " is shorter than n_max");
    LanguageTable t;
    t.corpus_ = std::make_shared<const Corpus>(std::move(words));
    t.counts_ = t.corpus_->factor_counts(n_max);
    t.n_max_ = n_max;
    t.validated_ = true;
    t.source_ = std::move(source);
    return t;
}

std::uint64_t LanguageTable::p(std::size_t n) const {
    if (n > n_max_)
        throw Error(ErrorKind::out_of_range, "p(" + std::to_string(n) + ") beyond table depth " + std::to_string(n_max_));
    return counts_[n];
}

bool LanguageTable::eventually_periodic() const {
    for (std::size_t n = 1; n < n_max_; ++n)
        if (counts_[n + 1] == counts_[n]) return true;
    return n_max_ >= 1 && counts_[1] <= 1;
}

std::vector<FactorClass> LanguageTable::classes(std::size_t n) const {
    if (n > n_max_) throw Error(ErrorKind::out_of_range, "length beyond table depth");
    const auto& c = *corpus_;
    const auto& sa = c.sa();
    const auto& lcp = c.lcp();
    std::vector<FactorClass> out;
    std::bitset<256> right, left;
    auto flush = [&] {
        if (out.empty()) return;
        for (std::size_t a = 0; a < 256; ++a) {
            if (right[a]) out.back().followers.push_back(static_cast<Letter>(a));
            if (left[a]) out.back().predecessors.push_back(static_cast<Letter>(a));
        }
        right.reset();
        left.reset();
    };
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const auto pos = static_cast<std::size_t>(sa[i]);
        const std::size_t av = c.avail(pos);
        if (av < n) continue;
        if (out.empty() || static_cast<std::size_t>(lcp[i]) < n) {
            flush();
            out.push_back(FactorClass{pos, {}, {}});
        }
        if (av > n) right.set(c.letter(pos + n));
        if (!c.at_source_start(pos)) left.set(c.letter(pos - 1));
    }
    flush();
    return out;
}

std::vector<Word> LanguageTable::factors(std::size_t n) const {
    std::vector<Word> out;
    for (const auto& cls : classes(n)) out.push_back(corpus_->factor(cls.pos, n));
    return out;
}

bool LanguageTable::contains(const Word& w) const {
    auto [lo, hi] = corpus_->locate(w.view());
    return lo < hi;
}

std::optional<std::size_t> LanguageTable::occurrence(const Word& w) const {
    auto [lo, hi] = corpus_->locate(w.view());
    if (lo == hi) return std::nullopt;
    return static_cast<std::size_t>(corpus_->sa()[lo]);
}

std::vector<Letter> LanguageTable::followers(const Word& w) const {
    const auto& c = *corpus_;
    auto [lo, hi] = c.locate(w.view());
    std::vector<Letter> out;
    std::vector<Letter> probe(w.letters());
    probe.push_back(0);
    // occurrences are sorted, so distinct next letters form consecutive runs
    std::size_t i = lo;
    while (i < hi) {
        const auto pos = static_cast<std::size_t>(c.sa()[i]);
        if (c.avail(pos) <= w.size()) {
            ++i;
            continue;
        }
        const Letter a = c.letter(pos + w.size());
        out.push_back(a);
        probe.back() = a;
        i = c.locate(probe).second;
    }
    return out;
}

std::vector<Letter> LanguageTable::predecessors(const Word& w) const {
    const auto& c = *corpus_;
    auto [lo, hi] = c.locate(w.view());
    std::bitset<256> seen;
    for (std::size_t i = lo; i < hi; ++i) {
        const auto pos = static_cast<std::size_t>(c.sa()[i]);
        if (!c.at_source_start(pos)) seen.set(c.letter(pos - 1));
    }
    std::vector<Letter> out;
    for (std::size_t a = 0; a < 256; ++a)
        if (seen[a]) out.push_back(static_cast<Letter>(a));
    return out;
}

LanguageTable LanguageTable::certified(std::string note) const {
    LanguageTable t = *this;
    t.validated_ = true;
    t.source_ += " [" + note + "]";
    return t;
}

LanguageTable stability_check(const LanguageTable& t1, const LanguageTable& t2) {
    const std::size_t n_max = t1.n_max();
    if (t2.n_max() < n_max)
        throw Error(ErrorKind::invalid_argument, "second table is shallower than the first");
    auto sources = t1.corpus().sources();
    for (auto& w : t2.corpus().sources()) sources.push_back(std::move(w));
    const Corpus joint(std::move(sources));
    const auto both = joint.factor_counts(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        // equal sets iff the union is no larger than either side
        if (both[n] != t1.p(n) || both[n] != t2.p(n))
            throw InsufficientDepth(n, "factor sets of '" + t1.source() + "' and '" + t2.source() +
                                           "' disagree at n = " + std::to_string(n));
    }
    LanguageTable out = t1;
    out.validated_ = true;
    out.source_ += " [stable against " + t2.source() + "]";
    return out;
}

namespace {

void require_validated(const LanguageTable& t) {
    if (!t.validated())
        throw Error(ErrorKind::insufficient_depth, "table '" + t.source() + "' has not been validated");
}

}  // namespace

ComplexityProfile complexity_profile(const LanguageTable& t) {
    require_validated(t);
    ComplexityProfile out;
    for (std::size_t n = 1; n <= t.n_max(); ++n) out.p.push_back(t.p(n));
    out.eventually_periodic = t.eventually_periodic();
    return out;
}

SpecialReport special_words(const LanguageTable& t, std::size_t n) {
    require_validated(t);
    if (n >= t.n_max())
        throw Error(ErrorKind::out_of_range, "special words need n < n_max");
    SpecialReport out;
    out.n = n;
    for (const auto& cls : t.classes(n)) {
        const bool rs = cls.followers.size() >= 2, ls = cls.predecessors.size() >= 2;
        if (!rs && !ls) continue;
        Word w = t.corpus().factor(cls.pos, n);
        if (rs) out.right_special.push_back({w, cls.followers});
        if (ls) out.left_special.push_back({w, cls.predecessors});
        if (rs && ls) out.bi_special.push_back(std::move(w));
    }
    return out;
}

namespace {

struct LengthContribution {
    std::uint64_t contribution = 0;
    std::uint64_t right_special = 0;
};

std::vector<LengthContribution> contributions_by_length(const LanguageTable& t, std::size_t lo, std::size_t hi) {
    std::vector<LengthContribution> out;
    for (std::size_t i = lo; i < hi; ++i) {
        LengthContribution c;
        for (const auto& cls : t.classes(i))
            if (cls.followers.size() >= 2) {
                c.contribution += cls.followers.size() - 1;
                ++c.right_special;
            }
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> right_special_contributions(const LanguageTable& t, std::size_t q_max) {
    require_validated(t);
    if (q_max > t.n_max()) throw Error(ErrorKind::out_of_range, "q beyond table depth");
    std::vector<std::uint64_t> out;
    for (const auto& c : contributions_by_length(t, 0, q_max)) out.push_back(c.contribution);
    return out;
}

RslemReport verify_rslem(const LanguageTable& t, std::size_t r, std::size_t q) {
    require_validated(t);
    if (!(r < q && q <= t.n_max())) throw Error(ErrorKind::out_of_range, "verify_rslem needs r < q <= n_max");
    RslemReport out;
    out.r = r;
    out.q = q;
    out.lhs = t.p(q);
    out.rhs = t.p(r);
    for (const auto& c : contributions_by_length(t, r, q)) {
        out.contributions.push_back(c.contribution);
        out.rhs += c.contribution;
        if (c.right_special > 1) ++out.multi_special_lengths;
    }
    out.equal = out.lhs == out.rhs;
    out.corollary_holds = out.lhs >= t.p(r) + (q - r) + out.multi_special_lengths;
    return out;
}

RauzyGraph rauzy_graph(const LanguageTable& t, std::size_t n) {
    require_validated(t);
    if (n >= t.n_max()) throw Error(ErrorKind::out_of_range, "Rauzy graph needs n < n_max");
    RauzyGraph g;
    g.n = n;
    g.vertices = t.factors(n);
    g.in_degree.assign(g.vertices.size(), 0);
    g.out_degree.assign(g.vertices.size(), 0);
    auto index = [&](const Word& w) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), w);
        if (it == g.vertices.end() || *it != w)
            throw Error(ErrorKind::invariant_violation, "factor " + w.str() + " missing from L_n");
        return static_cast<std::size_t>(it - g.vertices.begin());
    };
    for (auto& e : t.factors(n + 1)) {
        const std::size_t from = index(e.prefix(n)), to = index(e.suffix(n));
        g.edges.emplace_back(from, to);
        ++g.out_degree[from];
        ++g.in_degree[to];
        g.edge_labels.push_back(std::move(e));
    }
    return g;
}

std::string RauzyGraph::to_dot() const {
    std::string out = "digraph rauzy_" + std::to_string(n) + " {\n";
    for (const auto& v : vertices) out += "  \"" + v.str() + "\";\n";
    for (std::size_t i = 0; i < edges.size(); ++i)
        out += "  \"" + vertices[edges[i].first].str() + "\" -> \"" + vertices[edges[i].second].str() +
               "\" [label=\"" + edge_labels[i].str() + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace subshift
