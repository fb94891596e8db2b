#pragma once

#include "subshift/bigint.hpp"
#include "subshift/language.hpp"
#include "subshift/sadic.hpp"
#include "subshift/word.hpp"

#include <string>
#include <utility>
#include <vector>

namespace subshift {

// The bi-special word reached by walking the Rauzy graph of order q from the unique
// left-special vertex to the unique right-special one.  Needs p(q+1) - p(q) = 1.
Word unique_bispecial(const LanguageTable& t, std::size_t q);

struct ReturnWords {
    Word u;  // longer
    Word v;  // shorter
};
// Labels of the two first-return cycles through a right-special w with two followers:
// wu and wv both end with w.
ReturnWords return_words(const LanguageTable& t, const Word& w, std::size_t max_steps = 0);

struct RecoverOptions {
    std::size_t max_bootstrap_length = 400;  // largest q tried for the starting bi-special
};

struct RecoveryResult {
    Word pi0, pi1;                  // the blocks a, b
    std::vector<BigInt> mk, nk;
    std::size_t depth = 0;          // levels read off the data
    bool certified = false;         // factor sets match at the certified length
    std::size_t certified_length = 0;
    std::size_t bootstrap_q = 0;    // order of the starting bi-special
    std::size_t validated_n = 0;    // depth to which the input language was self-consistent
    double max_ratio = 0;           // max p(q)/q over the validated range
    std::string note;

    SadicParams params() const;
};

// Reads pi and (m_k, n_k) from raw data.  Throws complexity_too_high when the gap test or the
// 4/3 guard fails, insufficient_data when no bootstrap applies.  A result with
// certified == false or depth < requested is uncertified and must not be trusted.
RecoveryResult recover_structure(const Word& x, std::size_t depth, const RecoverOptions& opts = {});

}  // namespace subshift
