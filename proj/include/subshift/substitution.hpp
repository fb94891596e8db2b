#pragma once

#include "subshift/bigint.hpp"
#include "subshift/word.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace subshift {

// Letter -> word map; images are nonempty.
class Substitution {
public:
    explicit Substitution(std::vector<Word> images);
    static Substitution identity(std::size_t alphabet);

    std::size_t domain_size() const noexcept { return images_.size(); }
    std::size_t codomain_size() const noexcept { return codomain_; }
    const Word& image(Letter a) const;
    const std::vector<Word>& images() const noexcept { return images_; }
    Word apply(const Word& w) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<Word> images_;
    std::size_t codomain_ = 0;
};

struct TauParams {
    BigInt m;
    BigInt n;
};

// 0 -> 0^{m-1}1, 1 -> 0^{n-1}1.
Substitution make_tau(const TauParams& p);

// (outer o inner)(a) = outer(inner(a)).
Substitution compose(const Substitution& outer, const Substitution& inner);

struct AbelianMatrix {
    // entries[a][b] = occurrences of b in image(a)
    std::array<std::array<std::int64_t, 2>, 2> entries{};
    std::int64_t trace = 0;
    std::int64_t det = 0;
    double lambda_major = 0;  // larger root of x^2 - trace x + det
    double lambda_minor = 0;
    bool real_roots = true;
    bool pisot = false;
};

AbelianMatrix abelian_analysis(const Substitution& s);

struct GenerateOptions {
    std::size_t max_symbols = std::size_t{1} << 28;
    // When nonzero, only the first `prefix` letters are produced.
    std::size_t prefix = 0;
};

// pi(rho_K(0)) with rho_K = tau_1 o ... o tau_K.
Word generate_word(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K,
                   const GenerateOptions& opts = {});
// pi(rho_K(letter)), same machinery.
Word generate_image(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K, Letter letter,
                    const GenerateOptions& opts = {});

// |pi(rho_K(0))| and |pi(rho_K(1))| by the length recursion.
std::array<BigInt, 2> image_lengths(const Substitution& pi, const std::vector<TauParams>& params, std::size_t K);

}  // namespace subshift
