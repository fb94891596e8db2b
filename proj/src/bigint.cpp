#include "subshift/bigint.hpp"

#include "subshift/error.hpp"

#include <limits>

namespace subshift {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::powers_of_same_word: return "powers-of-same-word";
        case ErrorKind::not_commuting: return "not-commuting";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::budget_exceeded: return "budget-exceeded";
        case ErrorKind::word_too_short: return "word-too-short";
        case ErrorKind::insufficient_depth: return "insufficient-depth";
        case ErrorKind::insufficient_data: return "insufficient-data";
        case ErrorKind::not_a_concatenation: return "not-a-concatenation";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::not_applicable: return "not-applicable";
        case ErrorKind::complexity_too_high: return "complexity-too-high";
        case ErrorKind::schedule_too_tight: return "schedule-too-tight";
        case ErrorKind::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw Error(ErrorKind::budget_exceeded,
                    std::string(what) + " = " + v.get_str() + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

std::size_t to_size(const BigInt& v, const char* what) {
    const auto x = to_u64(v, what);
    if (x > std::numeric_limits<std::size_t>::max())
        throw Error(ErrorKind::budget_exceeded, std::string(what) + " too large");
    return static_cast<std::size_t>(x);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
    BigInt num = q.get_num();
    const BigInt& den = q.get_den();
    std::string out;
    if (sgn(num) < 0) {
        out += '-';
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rest = num % den;
    out += whole.get_str();
    if (digits <= 0) return out;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt frac = rest * scale / den;
    std::string f = frac.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
    return out;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    r.canonicalize();
    return r;
}

}  // namespace subshift
