#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subshift {

using Letter = std::uint8_t;

// A finite word over an alphabet of at most 255 letters.  Value type; cheap to move.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    // Accepts "0110" (digits) or "3,10,2" (comma separated); empty string is the empty word.
    static Word parse(std::string_view text);
    static Word repeat(Letter a, std::size_t count);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }
    Letter front() const { return letters_.front(); }

    std::span<const Letter> view() const noexcept { return letters_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::vector<Letter>& mutable_letters() noexcept { return letters_; }

    Word prefix(std::size_t n) const;
    Word suffix(std::size_t n) const;
    Word substr(std::size_t pos, std::size_t n) const;
    bool has_prefix(const Word& p) const;
    bool has_suffix(const Word& s) const;
    Word power(std::size_t k) const;
    Letter alphabet_bound() const;  // 1 + largest letter, 0 for the empty word

    Word& operator+=(const Word& other);
    Word& operator+=(Letter a);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    // Digits when every letter is < 10, otherwise comma separated.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

struct CommonPower {
    Word base;
    std::size_t t = 0;  // u = base^t
    std::size_t s = 0;  // v = base^s
};

// Shortest suffix v of w such that w is a suffix of the left-infinite word v^inf.
Word minimal_root(const Word& w);

// Maximal common suffix of v^inf and v^inf u.  Throws powers_of_same_word when
// |v|+|u| letters agree (then u and v commute).
Word max_common_suffix_periodic(const Word& v, const Word& u);

Word max_common_prefix(const Word& u, const Word& v);
Word max_common_suffix(const Word& u, const Word& v);

// u = base^t, v = base^s with base primitive; throws not_commuting if uv != vu.
CommonPower common_power_decomposition(const Word& u, const Word& v);

// |v| <= |w| and w is a suffix of v^inf.
bool is_root(const Word& v, const Word& w);

}  // namespace subshift
