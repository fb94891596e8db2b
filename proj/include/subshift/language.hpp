#pragma once

#include "subshift/word.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subshift {

// Generalized suffix array over one or more source words.  Factors never straddle two
// sources, so a corpus holds exactly the factors of its sources.
class Corpus {
public:
    explicit Corpus(std::vector<Word> sources);

    std::size_t text_size() const noexcept { return text_.size(); }
    std::size_t source_count() const noexcept { return starts_.size(); }
    std::size_t longest_source() const noexcept { return longest_; }

    // Letters available from `pos` before the end of its source.
    std::size_t avail(std::size_t pos) const;
    bool is_letter(std::size_t pos) const { return text_[pos] != separator; }
    Letter letter(std::size_t pos) const { return text_[pos]; }
    bool at_source_start(std::size_t pos) const;

    const std::vector<std::int32_t>& sa() const noexcept { return sa_; }
    const std::vector<std::int32_t>& lcp() const noexcept { return lcp_; }

    // counts[n] = number of distinct length-n factors, n = 0..n_max.
    std::vector<std::uint64_t> factor_counts(std::size_t n_max) const;

    // Half-open SA range of suffixes starting with `pattern`.
    std::pair<std::size_t, std::size_t> locate(std::span<const Letter> pattern) const;

    Word factor(std::size_t pos, std::size_t n) const;
    std::vector<Word> sources() const;

    static constexpr Letter separator = 255;

private:
    std::vector<Letter> text_;
    std::vector<std::size_t> starts_;
    std::vector<std::int32_t> sa_;
    std::vector<std::int32_t> lcp_;
    std::size_t longest_ = 0;
};

struct FactorClass {
    std::size_t pos = 0;                 // some occurrence in the corpus text
    std::vector<Letter> followers;       // F(w), sorted
    std::vector<Letter> predecessors;    // letters a with aw in the data, sorted
};

class LanguageTable {
public:
    // Factors of a single word; |w| >= 2 n_max.  Not validated.
    static LanguageTable from_word(const Word& w, std::size_t n_max, std::string source = "word");
    // Explicit factor data (e.g. all words of some length of a sofic language); declared exact.
    static LanguageTable from_factors(std::vector<Word> words, std::size_t n_max, std::string source = "factors");

    std::size_t n_max() const noexcept { return n_max_; }
    bool validated() const noexcept { return validated_; }
    const std::string& source() const noexcept { return source_; }
    const Corpus& corpus() const noexcept { return *corpus_; }

    std::uint64_t p(std::size_t n) const;
    bool eventually_periodic() const;

    std::vector<Word> factors(std::size_t n) const;  // sorted
    std::vector<FactorClass> classes(std::size_t n) const;  // sorted by word
    bool contains(const Word& w) const;
    std::vector<Letter> followers(const Word& w) const;
    std::vector<Letter> predecessors(const Word& w) const;
    // Position of some occurrence of w, if any.
    std::optional<std::size_t> occurrence(const Word& w) const;

    // Marks the table exact after an external certificate.
    LanguageTable certified(std::string note) const;

private:
    LanguageTable() = default;
    std::shared_ptr<const Corpus> corpus_;
    std::vector<std::uint64_t> counts_;  // counts_[n], n = 0..n_max
    std::size_t n_max_ = 0;
    bool validated_ = false;
    std::string source_;

    friend LanguageTable stability_check(const LanguageTable&, const LanguageTable&);
};

// Compares two tables (e.g. generation levels K and K+1) at every n <= t1.n_max().
// Returns t1 marked validated, or throws InsufficientDepth naming the first disagreeing n.
LanguageTable stability_check(const LanguageTable& t1, const LanguageTable& t2);

struct ComplexityProfile {
    std::vector<std::uint64_t> p;  // p[0] is p(1)
    bool eventually_periodic = false;
};
ComplexityProfile complexity_profile(const LanguageTable& t);

struct SpecialEntry {
    Word word;
    std::vector<Letter> letters;
};

struct SpecialReport {
    std::size_t n = 0;
    std::vector<SpecialEntry> right_special;  // letters = F(w)
    std::vector<SpecialEntry> left_special;   // letters = left extensions
    std::vector<Word> bi_special;
};
SpecialReport special_words(const LanguageTable& t, std::size_t n);

// contributions[i] = sum over right-special w of length i of (|F(w)| - 1), i = 0..q_max-1.
std::vector<std::uint64_t> right_special_contributions(const LanguageTable& t, std::size_t q_max);

struct RslemReport {
    std::size_t r = 0, q = 0;
    std::uint64_t lhs = 0;  // p(q)
    std::uint64_t rhs = 0;  // p(r) + sum of contributions
    bool equal = false;
    std::vector<std::uint64_t> contributions;  // lengths r..q-1
    std::uint64_t multi_special_lengths = 0;   // |T cap [r, q-1]|, T = lengths with >1 right-special word
    bool corollary_holds = false;              // p(q) >= p(r) + (q - r) + |T cap [r,q-1]|
};
RslemReport verify_rslem(const LanguageTable& t, std::size_t r, std::size_t q);

struct RauzyGraph {
    std::size_t n = 0;
    std::vector<Word> vertices;                              // L_n, sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices
    std::vector<Word> edge_labels;                           // L_{n+1}, aligned with edges
    std::vector<std::size_t> in_degree, out_degree;
    std::string to_dot() const;
};
RauzyGraph rauzy_graph(const LanguageTable& t, std::size_t n);

}  // namespace subshift
