#include "subshift/word.hpp"

#include "subshift/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace subshift {

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    if (text.find(',') == std::string_view::npos) {
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw Error(ErrorKind::invalid_argument, std::string("bad symbol '") + c + "'");
            out.push_back(static_cast<Letter>(c - '0'));
        }
        return Word(std::move(out));
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(pos, end - pos);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() || value > 254)
            throw Error(ErrorKind::invalid_argument, "bad symbol '" + std::string(field) + "'");
        out.push_back(static_cast<Letter>(value));
        pos = end + 1;
    }
    return Word(std::move(out));
}

Word Word::repeat(Letter a, std::size_t count) { return Word(std::vector<Letter>(count, a)); }

Word Word::prefix(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(letters_.end() - static_cast<std::ptrdiff_t>(n), letters_.end()));
}

Word Word::substr(std::size_t pos, std::size_t n) const {
    pos = std::min(pos, size());
    n = std::min(n, size() - pos);
    auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
    return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(n)));
}

bool Word::has_prefix(const Word& p) const {
    return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

bool Word::has_suffix(const Word& s) const {
    return s.size() <= size() && std::equal(s.letters_.rbegin(), s.letters_.rend(), letters_.rbegin());
}

Word Word::power(std::size_t k) const {
    std::vector<Letter> out;
    out.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

Letter Word::alphabet_bound() const {
    if (empty()) return 0;
    return static_cast<Letter>(*std::max_element(letters_.begin(), letters_.end()) + 1);
}

Word& Word::operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word& Word::operator+=(Letter a) {
    letters_.push_back(a);
    return *this;
}

std::string Word::str() const {
    std::string out;
    const bool digits = std::all_of(letters_.begin(), letters_.end(), [](Letter a) { return a < 10; });
    if (digits) {
        out.reserve(size());
        for (Letter a : letters_) out += static_cast<char>('0' + a);
        return out;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

namespace {

// Length of the longest proper border of every prefix (KMP failure function).
std::vector<std::size_t> borders(std::span<const Letter> w) {
    std::vector<std::size_t> f(w.size(), 0);
    for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = f[k - 1];
        if (w[i] == w[k]) ++k;
        f[i] = k;
    }
    return f;
}

}  // namespace

Word minimal_root(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::invalid_argument, "minimal_root of the empty word");
    // w is a suffix of v^inf for |v| = p iff p is a period of w.
    const auto f = borders(w.view());
    return w.suffix(w.size() - f.back());
}

Word max_common_suffix_periodic(const Word& v, const Word& u) {
    if (v.empty() || u.empty())
        throw Error(ErrorKind::invalid_argument, "max_common_suffix_periodic needs nonempty words");
    const std::size_t nv = v.size(), nu = u.size();
    auto periodic = [&](std::size_t i) { return v[nv - 1 - i % nv]; };
    auto tail = [&](std::size_t i) { return i < nu ? u[nu - 1 - i] : periodic(i - nu); };
    const std::size_t cap = nv + nu;
    std::size_t i = 0;
    while (i < cap && periodic(i) == tail(i)) ++i;
    if (i == cap)
        throw Error(ErrorKind::powers_of_same_word,
                    "v^inf and v^inf u agree on " + std::to_string(cap) + " letters");
    return u.size() >= i ? u.suffix(i) : v.power(i / nv + 1).suffix(i);
}

Word max_common_prefix(const Word& u, const Word& v) {
    auto [a, b] = std::mismatch(u.letters().begin(), u.letters().end(), v.letters().begin(), v.letters().end());
    return u.prefix(static_cast<std::size_t>(a - u.letters().begin()));
}

Word max_common_suffix(const Word& u, const Word& v) {
    auto [a, b] = std::mismatch(u.letters().rbegin(), u.letters().rend(), v.letters().rbegin(), v.letters().rend());
    return u.suffix(static_cast<std::size_t>(a - u.letters().rbegin()));
}

CommonPower common_power_decomposition(const Word& u, const Word& v) {
    if (u.empty() || v.empty())
        throw Error(ErrorKind::invalid_argument, "common_power_decomposition needs nonempty words");
    if (u + v != v + u) throw Error(ErrorKind::not_commuting, u.str() + " and " + v.str() + " do not commute");
    const Word g = u.prefix(std::gcd(u.size(), v.size()));
    const auto f = borders(g.view());
    std::size_t period = g.size() - f.back();
    if (g.size() % period != 0) period = g.size();
    return {g.prefix(period), u.size() / period, v.size() / period};
}

bool is_root(const Word& v, const Word& w) {
    if (v.empty()) throw Error(ErrorKind::invalid_argument, "is_root with empty candidate");
    if (v.size() > w.size()) return false;
    const std::size_t nv = v.size(), nw = w.size();
    for (std::size_t i = 0; i < nw; ++i)
        if (w[nw - 1 - i] != v[nv - 1 - i % nv]) return false;
    return true;
}

}  // namespace subshift
