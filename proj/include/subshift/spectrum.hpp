#pragma once

#include "subshift/bigint.hpp"
#include "subshift/sadic.hpp"
#include "subshift/word.hpp"

#include <string>
#include <vector>

namespace subshift {

// a_k, b_k for k >= 1 and d_k, c_k, e_k for k >= -1, all exact.
class LengthSeq {
public:
    LengthSeq(const SadicParams& p, std::size_t K);

    std::size_t K() const noexcept { return K_; }
    const BigInt& a(std::size_t k) const;  // k in [1, K+1]
    const BigInt& b(std::size_t k) const;  // k in [1, K]
    const BigInt& d(long k) const;         // k in [-1, K]
    const BigInt& c(long k) const;
    const BigInt& e(long k) const;
    BigInt a_product(std::size_t upto) const;  // a_1 ... a_upto

private:
    std::size_t K_;
    std::vector<BigInt> a_, b_;      // index k
    std::vector<BigInt> d_, c_, e_;  // index k + 1
};

LengthSeq length_sequences(const SadicParams& p, std::size_t K);

enum class BetaCase { case1, case2, case3, case4 };
std::string_view to_string(BetaCase c);

struct BetaReport {
    std::vector<Rational> betas;       // betas[j] = beta_j, j = 0..K
    std::vector<BetaCase> labels;      // labels[j] for j = 1..K (labels[0] unused)
    std::vector<bool> case_holds;      // post-condition of the label at j
    Rational product;                  // prod_{j=1}^K beta_j
    bool product_identity = false;     // product == |pi0| a_1...a_{K+1} / d_K
    bool product_below_bound = false;  // product < 2 (48/49)^{K/2}
    bool all_in_range = false;         // 0 < beta_j < 2 for j >= 1
};
// Requires the four parameter conditions on levels 1..K+1 and |pi(1)| >= |pi(0)|.
BetaReport beta_sequence(const SadicParams& p, std::size_t K);

struct EpsilonReport {
    Rational lhs;       // (n_{K+1}+1)|pi0| prod_{i<=K}(n_i - m_i) / d_{K+1}
    double eps = 0;     // 8 (48/49)^{K/2}
    bool holds = false; // decided exactly
};
EpsilonReport epsilon_bound(const SadicParams& p, std::size_t K);

struct EigenvalueEstimate {
    Rational alpha;         // c_K / d_K
    Rational beta_cf;       // c_K / e_K
    Rational error_bound;   // |pi0| a_1...a_{K+1} / (d_K d_{K+1})
    std::size_t precision_bits = 0;
    std::vector<double> distances;  // <d_k alpha*> for k = 0..K, alpha* refined as far as params allow
    std::size_t refined_level = 0;
    Rational refined_error;
};
EigenvalueEstimate eigenvalue(const SadicParams& p, std::size_t K, std::size_t bits);

// alpha from beta by alpha = beta / (|pi1| beta + |pi0| (1 - beta)).
Rational alpha_from_beta(const SadicParams& p, const Rational& beta);

struct DistanceCheck {
    std::size_t k = 0;
    Rational upper;  // certified upper bound on <d_k alpha>
    Rational bound;  // |pi0| prod_{i<=k}(n_i - m_i) / d_{k+1}
    bool holds = false;
};
// Exact check of <d_k alpha> < bound for k = 0..kmax using interval enclosures of alpha.
std::vector<DistanceCheck> distance_bounds(const SadicParams& p, std::size_t kmax);

// |(1/N) sum_{j<N} chi(x_j) exp(-2 pi i f j)|, chi(0) = +1, other letters -1.
double weyl_probe(const Word& x, const Rational& freq, std::size_t N);

struct LadderPoint {
    std::size_t N = 0;
    double modulus = 0;
};
std::vector<LadderPoint> weyl_ladder(const Word& x, const Rational& freq, const std::vector<std::size_t>& Ns);

// Parses "0.618", "3/7" or "5" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace subshift
