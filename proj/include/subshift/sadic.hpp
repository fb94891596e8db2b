#pragma once

#include "subshift/bigint.hpp"
#include "subshift/language.hpp"
#include "subshift/substitution.hpp"
#include "subshift/word.hpp"

#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace subshift {

enum class Tier { full, structural };
std::string_view to_string(Tier t);

// pi together with the parameter sequences; level k (1-based) uses mk[k-1], nk[k-1].
struct SadicParams {
    Substitution pi = Substitution::identity(2);
    std::vector<BigInt> mk;
    std::vector<BigInt> nk;

    std::size_t depth() const noexcept { return mk.size(); }
    const BigInt& m(std::size_t k) const;  // 1-based
    const BigInt& n(std::size_t k) const;
    std::vector<TauParams> taus() const;

    // Throws invalid_argument unless pi is binary with nonempty images and 0 < m_k < n_k.
    void check_structure() const;
};

SadicParams make_params(const Word& pi0, const Word& pi1, std::vector<BigInt> mk, std::vector<BigInt> nk);
// Periodic parameters: the given (m, n) blocks repeated until `levels` entries exist.
SadicParams periodic_params(const Word& pi0, const Word& pi1, const std::vector<std::pair<long, long>>& block,
                            std::size_t levels);

struct AdmissibilityReport {
    Tier tier = Tier::structural;
    bool bullets_hold = false;     // the four parameter conditions, at every level
    bool pi_condition = false;     // |pi0| < |pi1| < 2|pi0|, distinct first letters
    std::vector<std::string> violations;
};
AdmissibilityReport validate_params(const SadicParams& p);

struct DerivedWords {
    std::size_t k = 0;
    Word u, v, s, p;
};

struct DerivedLengths {
    std::size_t k = 0;
    BigInt u, v, s, p;
};

// v_k = pi(rho_{k-1}(0)), u_k = pi(rho_{k-1}(1)), s_k and p_k by their recursions.
DerivedWords derived_words(const SadicParams& p, std::size_t k, std::size_t max_symbols = std::size_t{1} << 27);
// Lengths only, for k = 1..K (index 0 holds level 1).  No words are built beyond level 1.
std::vector<DerivedLengths> derived_lengths(const SadicParams& p, std::size_t K);

// Caches derived words per level; concurrent readers are safe.
class SadicSystem {
public:
    explicit SadicSystem(SadicParams params, std::size_t max_symbols = std::size_t{1} << 27);
    const SadicParams& params() const noexcept { return params_; }
    const DerivedWords& derived(std::size_t k) const;

private:
    SadicParams params_;
    std::size_t max_symbols_;
    mutable std::mutex mutex_;
    mutable std::deque<DerivedWords> cache_;  // cache_[k-1]
};

struct BlockDecomposition {
    std::size_t level = 0;
    std::vector<Letter> blocks;  // w = concatenation of pi(rho_level(blocks[i]))
};
// Unique parse of w into the level-k blocks (pi o rho_k)(0), (pi o rho_k)(1).
BlockDecomposition unique_decompose(const Word& w, const SadicParams& p, std::size_t k);

// Complexity constant read from a validated table at length |s_2 p_2|.
BigInt calibrate_constant(const SadicParams& p, const LanguageTable& calibration);

struct ClosedFormValue {
    BigInt value;
    std::size_t level = 0;  // k of the branch used
    char branch = 'A';      // 'A' linear growth, 'B' doubled growth
};

// Piecewise-linear complexity of the two-branch formula, with branch ends at
// |s_k v_k^{m_k-1} p_k| + 1 and |s_k v_k^{n_k-2} p_k| + 1.  Valid for q >= |s_2 p_2|.
class ClosedForm {
public:
    ClosedForm(SadicParams params, BigInt constant);
    ClosedForm(const SadicParams& params, const LanguageTable& calibration);

    const BigInt& constant() const noexcept { return K_; }
    BigInt domain_start() const;
    ClosedFormValue evaluate(const BigInt& q) const;
    // lo_k = |s_k v_k^{m_k-1} p_k|, mid_k = |s_k v_k^{n_k-2} p_k|, k >= 2
    BigInt lo(std::size_t k) const;
    BigInt mid(std::size_t k) const;
    const DerivedLengths& lengths(std::size_t k) const;

private:
    SadicParams params_;
    BigInt K_;
    std::vector<DerivedLengths> len_;
};

BigInt closed_form_complexity(const SadicParams& p, const BigInt& q, const LanguageTable& calibration);

struct DiffCount {
    std::uint64_t count = 0;
    BigInt bound;
};
// Positions where y_{i,k,reps} and z_{i,k,reps} differ, and 2|pi(1)| reps a_1...a_{k+1}.
DiffCount yz_diff_count(const SadicParams& p, int i, std::size_t k, std::size_t reps,
                        std::size_t max_symbols = std::size_t{1} << 27);

struct DensityReport {
    std::uint64_t q = 0;
    std::uint64_t N = 0;
    std::uint64_t differences = 0;
    Rational density;
    std::optional<Rational> bound;   // when q = d_k
    std::optional<std::size_t> k;    // level giving the bound
};
// Fraction of t < N with x(t) != x(t+q) on a long generated word.
DensityReport shift_diff_density(const SadicParams& p, std::uint64_t q, std::uint64_t N,
                                 std::size_t max_symbols = std::size_t{1} << 28);
// Same count on caller-supplied data (|x| >= N + q).
std::uint64_t shift_differences(const Word& x, std::uint64_t q, std::uint64_t N);

struct SyndeticReport {
    std::vector<std::uint64_t> elements;
    std::uint64_t max_gap = 0;
};
SyndeticReport syndetic_set(const SadicParams& p, std::size_t k, std::uint64_t horizon,
                            std::uint64_t cap = 100'000'000);

// Language of the subshift at lengths <= |v_j| + 1, read off the admissible level-j block pairs.
LanguageTable block_pair_language(const SadicParams& p, std::size_t j, std::size_t max_symbols = std::size_t{1} << 27);

// Generates levels K, K+1 and certifies the level-K table by stability; insufficient-depth when
// either level is too short for n_max.
LanguageTable validated_table(const SadicParams& p, std::size_t K, std::size_t n_max,
                              std::size_t max_symbols = std::size_t{1} << 28);
// Smallest level whose table validates to n_max (searching upward from level 1).
LanguageTable auto_validated_table(const SadicParams& p, std::size_t n_max, std::size_t max_symbols = std::size_t{1} << 28);

}  // namespace subshift
