#include "subshift/substitution.hpp"

#include "subshift/error.hpp"

#include <algorithm>
#include <cmath>

namespace subshift {

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error(ErrorKind::invalid_argument, "substitution with empty domain");
    for (const auto& w : images_) {
        if (w.empty()) throw Error(ErrorKind::invalid_argument, "substitution image is empty");
        codomain_ = std::max<std::size_t>(codomain_, w.alphabet_bound());
    }
}

Substitution Substitution::identity(std::size_t alphabet) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < alphabet; ++a) images.push_back(Word{static_cast<Letter>(a)});
    return Substitution(std::move(images));
}

const Word& Substitution::image(Letter a) const {
    if (a >= images_.size())
        throw Error(ErrorKind::invalid_argument, "letter " + std::to_string(a) + " outside the domain");
    return images_[a];
}

Word Substitution::apply(const Word& w) const {
    std::size_t total = 0;
    for (Letter a : w.letters()) total += image(a).size();
    std::vector<Letter> out;
    out.reserve(total);
    for (Letter a : w.letters()) {
        const auto& img = images_[a].letters();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out));
}

Substitution make_tau(const TauParams& p) {
    if (sgn(p.m) <= 0 || p.m >= p.n)
        throw Error(ErrorKind::invalid_argument,
                    "tau needs 0 < m < n, got (" + p.m.get_str() + "," + p.n.get_str() + ")");
    const std::size_t m = to_size(p.m, "m"), n = to_size(p.n, "n");
    return Substitution({Word::repeat(0, m - 1) + Word{1}, Word::repeat(0, n - 1) + Word{1}});
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    if (inner.codomain_size() > outer.domain_size())
        throw Error(ErrorKind::invalid_argument, "inner codomain is not inside the outer domain");
    std::vector<Word> images;
    images.reserve(inner.domain_size());
    for (const auto& w : inner.images()) images.push_back(outer.apply(w));
    return Substitution(std::move(images));
}

AbelianMatrix abelian_analysis(const Substitution& s) {
    if (s.domain_size() != 2 || s.codomain_size() > 2)
        throw Error(ErrorKind::unsupported, "abelian analysis is implemented for binary substitutions only");
    AbelianMatrix out;
    for (Letter a = 0; a < 2; ++a)
        for (Letter b : s.image(a).letters()) ++out.entries[a][b];
    const auto& e = out.entries;
    out.trace = e[0][0] + e[1][1];
    out.det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    const std::int64_t disc = out.trace * out.trace - 4 * out.det;
    out.real_roots = disc >= 0;
    if (out.real_roots) {
        const double r = std::sqrt(static_cast<double>(disc));
        out.lambda_major = (static_cast<double>(out.trace) + r) / 2;
        out.lambda_minor = (static_cast<double>(out.trace) - r) / 2;
    } else {
        out.lambda_major = out.lambda_minor = static_cast<double>(out.trace) / 2;
    }
    // One root above 1 and the other in (-1, 1) iff f(1) < 0 < f(-1) for f(x) = x^2 - tr x + det.
    const std::int64_t f_plus = 1 - out.trace + out.det;
    const std::int64_t f_minus = 1 + out.trace + out.det;
    out.pisot = out.real_roots && f_plus < 0 && f_minus > 0;
    return out;
}

std::array<BigInt, 2> image_lengths(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K) {
    if (pi.domain_size() != 2) throw Error(ErrorKind::invalid_argument, "pi must have a binary domain");
    if (K > params.size())
        throw Error(ErrorKind::invalid_argument, "level " + std::to_string(K) + " exceeds the parameter list");
    std::array<BigInt, 2> len{BigInt(pi.image(0).size()), BigInt(pi.image(1).size())};
    // Expanding level by level from the outside: pi o tau_1 o ... o tau_k images of 0 and 1.
    for (std::size_t k = 0; k < K; ++k) {
        const auto& p = params[k];
        BigInt zero = (p.m - 1) * len[0] + len[1];
        BigInt one = (p.n - 1) * len[0] + len[1];
        len = {zero, one};
    }
    return len;
}

namespace {

class Expander {
public:
    Expander(const Substitution& pi, const std::vector<TauParams>& params, std::size_t limit)
        : pi_(pi), params_(params), limit_(limit) {
        out_.reserve(limit);
    }

    void emit(std::size_t k, Letter a) {
        if (out_.size() >= limit_) return;
        if (k == 0) {
            const auto& img = pi_.image(a).letters();
            const std::size_t n = std::min(img.size(), limit_ - out_.size());
            out_.insert(out_.end(), img.begin(), img.begin() + static_cast<std::ptrdiff_t>(n));
            return;
        }
        const auto& p = params_[k - 1];
        const BigInt zeros = (a == 0 ? p.m : p.n) - 1;
        if (sgn(zeros) > 0) {
            const std::size_t start = out_.size();
            emit(k - 1, 0);
            const std::size_t len = out_.size() - start;
            // copies of the same level-(k-1) block, straight from the buffer
            for (BigInt i = 1; i < zeros && out_.size() < limit_; ++i) {
                const std::size_t n = std::min(len, limit_ - out_.size());
                const std::size_t at = out_.size();
                out_.resize(at + n);
                std::copy_n(out_.data() + start, n, out_.data() + at);
            }
        }
        emit(k - 1, 1);
    }

    std::vector<Letter> take() { return std::move(out_); }

private:
    const Substitution& pi_;
    const std::vector<TauParams>& params_;
    std::size_t limit_;
    std::vector<Letter> out_;
};

}  // namespace

Word generate_image(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K, Letter letter,
                    const GenerateOptions& opts) {
    if (letter > 1) throw Error(ErrorKind::invalid_argument, "binary letter expected");
    for (std::size_t k = 0; k < K && k < params.size(); ++k)
        if (sgn(params[k].m) <= 0 || params[k].m >= params[k].n)
            throw Error(ErrorKind::invalid_argument, "parameters at level " + std::to_string(k + 1) + " need 0 < m < n");
    const auto lengths = image_lengths(pi, params, K);
    const BigInt& full = lengths[letter];
    std::size_t limit;
    if (opts.prefix != 0) {
        limit = full < opts.prefix ? to_size(full) : opts.prefix;
    } else {
        if (full > opts.max_symbols)
            throw Error(ErrorKind::budget_exceeded, "word of predicted length " + full.get_str() +
                                                        " exceeds the budget of " +
                                                        std::to_string(opts.max_symbols) + " symbols");
        limit = to_size(full);
    }
    if (limit > opts.max_symbols)
        throw Error(ErrorKind::budget_exceeded, "prefix of " + std::to_string(limit) + " symbols exceeds the budget");
    Expander ex(pi, params, limit);
    ex.emit(K, letter);
    return Word(ex.take());
}

Word generate_word(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K,
                   const GenerateOptions& opts) {
    return generate_image(pi, params, K, 0, opts);
}

}  // namespace subshift
