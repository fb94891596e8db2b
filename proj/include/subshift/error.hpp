#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subshift {

enum class ErrorKind {
    invalid_argument,
    powers_of_same_word,
    not_commuting,
    unsupported,
    budget_exceeded,
    word_too_short,
    insufficient_depth,
    insufficient_data,
    not_a_concatenation,
    out_of_range,
    not_applicable,
    complexity_too_high,
    schedule_too_tight,
    invariant_violation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a consecutive-level comparison disagrees; carries the first bad length.
class InsufficientDepth : public Error {
public:
    InsufficientDepth(std::size_t first_bad_n, const std::string& what)
        : Error(ErrorKind::insufficient_depth, what), first_bad_n_(first_bad_n) {}
    std::size_t first_bad_n() const noexcept { return first_bad_n_; }

private:
    std::size_t first_bad_n_;
};

}  // namespace subshift
