#pragma once

#include "subshift/bigint.hpp"
#include "subshift/language.hpp"
#include "subshift/sadic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subshift {

// Minimum m_k given m_{k-1} and k (k >= 2).
using GrowthSchedule = std::function<BigInt(const BigInt& prev_m, std::size_t k)>;

GrowthSchedule schedule_by_name(const std::string& name);  // "default" (squares) or "double"

struct ExampleConfig {
    std::size_t kmax = 8;
    std::uint64_t search_cap = 1'000'000;
    GrowthSchedule growth = schedule_by_name("default");
    // Optional target f: each m_k is also pushed up until p(q) < q + f(q) at the level-k
    // liminf landmark q = |v_k^{m_k-1} p_k|.
    std::function<double(double)> liminf_target;
};

struct ExampleLevel {
    std::size_t k = 0;
    BigInt m, n, d;
    BigInt minimum;                 // schedule minimum for m_k
    std::uint64_t candidates = 0;   // b values tried before d_k was prime
    bool coprime = false;           // gcd(d_k, a_{k+1} d_{k-1}) = 1
};

struct WeakMixExample {
    SadicParams params;
    std::vector<ExampleLevel> levels;  // k = 2..kmax
};

// Miller-Rabin: deterministic witness set below 2^64, 40 rounds above.
bool is_prime(const BigInt& n);

WeakMixExample build_example(const ExampleConfig& cfg);

struct LandmarkRow {
    std::size_t k = 0;
    BigInt q;                          // |s_k v_k^{2m_k-2} p_k|
    BigInt p;                          // closed form
    std::optional<std::uint64_t> p_table;
    Rational ratio;                    // p / q
    Rational excess;                   // p - 1.5 q
    bool identity_holds = false;       // p == 1.5q - (|s_k| - |p_k|)/2 + K - 1
    BigInt q_low;                      // |v_k^{m_k-1} p_k|
    BigInt p_low;
    std::optional<std::uint64_t> p_low_table;
    Rational ratio_low;
    bool low_identity_holds = false;   // p_low == q_low + |p_k| + K
    std::optional<bool> below_target;  // p_low < q_low + f(q_low)
};

struct LandmarkReport {
    BigInt K;
    std::vector<LandmarkRow> rows;
    bool excess_strictly_decreasing = false;
    bool table_agrees = true;
};

// Landmarks for k = 2..K by the closed form; cross-checked against `table` wherever q <= n_max.
LandmarkReport landmark_complexities(const SadicParams& p, std::size_t K, const LanguageTable& table,
                                     const std::function<double(double)>& f = {});

}  // namespace subshift
