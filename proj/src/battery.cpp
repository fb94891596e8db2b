#include "subshift/battery.hpp"

#include "subshift/error.hpp"
#include "subshift/spectrum.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace subshift {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

namespace {

struct Verdict {
    bool ok;
    std::string witness;
};

CheckResult guarded(std::string name, const std::function<Verdict()>& fn) {
    CheckResult r{std::move(name), CheckStatus::skipped, {}};
    try {
        auto v = fn();
        r.status = v.ok ? CheckStatus::pass : CheckStatus::fail;
        r.witness = std::move(v.witness);
    } catch (const Error& e) {
        r.witness = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return r;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

std::vector<CheckResult> run_battery(const SadicParams& p, const BatteryOptions& opts) {
    p.check_structure();
    const std::size_t K = std::min(opts.kmax, p.depth() > 0 ? p.depth() - 1 : 0);
    std::vector<CheckResult> out;

    out.push_back(guarded("admissibility", [&] {
        const auto rep = validate_params(p);
        return Verdict{rep.tier == Tier::full, "tier " + std::string(to_string(rep.tier)) +
                                                   (rep.violations.empty() ? "" : "; " + join(rep.violations))};
    }));

    out.push_back(guarded("length_recursion", [&] {
        const LengthSeq L(p, K);
        const auto taus = p.taus();
        for (std::size_t k = 0; k <= K; ++k) {
            const auto len = image_lengths(p.pi, taus, k)[0];
            if (len != L.d(static_cast<long>(k)))
                return Verdict{false, "d_" + std::to_string(k) + " = " + L.d(static_cast<long>(k)).get_str() +
                                          " but the image has length " + len.get_str()};
        }
        return Verdict{true, "d_k = b_k d_{k-1} + a_k d_{k-2} for k <= " + std::to_string(K)};
    }));

    out.push_back(guarded("convergent_identity", [&] {
        const LengthSeq L(p, K);
        for (long k = 0; k <= static_cast<long>(K); ++k)
            if (L.d(k) != L.d(-1) * L.c(k) + L.d(0) * L.e(k))
                return Verdict{false, "d_k != d_{-1} c_k + d_0 e_k at k = " + std::to_string(k)};
        return Verdict{true, "k <= " + std::to_string(K)};
    }));

    out.push_back(guarded("prefix_suffix_lengths", [&] {
        const auto lens = derived_lengths(p, K + 1);
        for (const auto& l : lens) {
            const BigInt lim = l.u + l.v < 3 * l.v ? BigInt(l.u + l.v) : BigInt(3 * l.v);
            if (!(l.p + l.s < lim)) return Verdict{false, "|p_k| + |s_k| too long at k = " + std::to_string(l.k)};
        }
        return Verdict{true, "|p_k| + |s_k| < min(|u_k| + |v_k|, 3|v_k|) for k <= " + std::to_string(K + 1)};
    }));

    out.push_back(guarded("common_suffix", [&] {
        std::size_t last = 0;
        for (std::size_t k = 1; k <= K + 1; ++k) {
            if (derived_lengths(p, k).back().u * 8 > opts.max_symbols) break;
            const auto d = derived_words(p, k, opts.max_symbols);
            for (int mask = 0; mask < 16; ++mask) {
                Word w;
                for (int i = 0; i < 4 && w.size() <= d.s.size(); ++i) w = ((mask >> i) & 1 ? d.u : d.v) + w;
                if (w.size() >= d.s.size() && !w.has_suffix(d.s))
                    return Verdict{false, "s_" + std::to_string(k) + " is not a suffix of a block concatenation"};
            }
            last = k;
        }
        if (last == 0) throw Error(ErrorKind::budget_exceeded, "level-1 blocks exceed the budget");
        return Verdict{true, "every concatenation of u_k, v_k of length >= |s_k| ends in s_k, k <= " + std::to_string(last)};
    }));

    out.push_back(guarded("unique_decomposition", [&] {
        std::size_t last = 0;
        for (std::size_t k = 1; k + 2 <= p.depth() + 1 && k <= K; ++k) {
            if (derived_lengths(p, k + 2).back().v > opts.max_symbols / 4) break;
            const auto d = derived_words(p, k + 2, opts.max_symbols);
            const auto dec = unique_decompose(d.v, p, k);
            std::vector<Letter> expect(to_size(p.m(k + 1)) - 1, 0);
            expect.push_back(1);
            if (dec.blocks != expect)
                return Verdict{false, "v_" + std::to_string(k + 2) + " parses differently at level " + std::to_string(k)};
            last = k;
        }
        if (last == 0) throw Error(ErrorKind::budget_exceeded, "no level fits the budget");
        return Verdict{true, "v_{k+2} = blocks 0^(m_{k+1}-1) 1 uniquely, k <= " + std::to_string(last)};
    }));

    out.push_back(guarded("yz_difference_bound", [&] {
        double worst = 0;
        std::size_t cases = 0;
        for (std::size_t k = 1; k <= std::min<std::size_t>(K, 8); ++k) {
            if (image_lengths(p.pi, p.taus(), k + 1)[0] * 6 > opts.max_symbols) break;
            for (int i = 0; i < 2; ++i)
                for (std::size_t reps = 1; reps <= 3; ++reps) {
                    const auto dc = yz_diff_count(p, i, k, reps, opts.max_symbols);
                    const BigInt c(static_cast<unsigned long>(dc.count));
                    ++cases;
                    if (c > dc.bound)
                        return Verdict{false, "count " + c.get_str() + " > bound " + dc.bound.get_str() + " at k = " +
                                                  std::to_string(k) + ", i = " + std::to_string(i) +
                                                  ", reps = " + std::to_string(reps)};
                    worst = std::max(worst, c.get_d() / dc.bound.get_d());
                }
        }
        if (cases == 0) throw Error(ErrorKind::budget_exceeded, "no level fits the budget");
        std::ostringstream ss;
        ss << cases << " cases, largest count/bound " << worst;
        return Verdict{true, ss.str()};
    }));

    out.push_back(guarded("beta_sequence", [&] {
        const auto r = beta_sequence(p, K);
        std::size_t bad_case = 0;
        for (std::size_t j = 1; j <= K; ++j) bad_case += !r.case_holds[j];
        const bool ok = r.product_identity && r.product_below_bound && r.all_in_range && bad_case == 0;
        std::ostringstream ss;
        ss << "product " << to_decimal(r.product, 12) << (r.product_identity ? ", identity holds" : ", identity FAILS")
           << (r.product_below_bound ? ", below 2(48/49)^(K/2)" : ", ABOVE 2(48/49)^(K/2)") << ", "
           << bad_case << " case post-conditions fail";
        return Verdict{ok, ss.str()};
    }));

    out.push_back(guarded("epsilon_bound", [&] {
        const auto e = epsilon_bound(p, K);
        return Verdict{e.holds, "lhs " + to_decimal(e.lhs, 12) + " vs eps " + std::to_string(e.eps)};
    }));

    out.push_back(guarded("distance_bounds", [&] {
        const auto checks = distance_bounds(p, K);
        for (const auto& c : checks)
            if (!c.holds)
                return Verdict{false, "<d_k alpha> bound fails at k = " + std::to_string(c.k) + ": upper " +
                                          to_decimal(c.upper, 12) + " vs " + to_decimal(c.bound, 12)};
        return Verdict{true, "k <= " + std::to_string(K)};
    }));

    // table-based checks share one validated table
    std::optional<LanguageTable> table;
    std::string table_error;
    try {
        table = auto_validated_table(p, opts.table_n, opts.max_symbols);
    } catch (const Error& e) {
        table_error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    auto need_table = [&] {
        if (!table) throw Error(ErrorKind::insufficient_depth, table_error);
    };

    out.push_back(guarded("right_special_identity", [&] {
        need_table();
        const std::size_t q_max = table->n_max();
        const auto contrib = right_special_contributions(*table, q_max);
        for (std::size_t r = 1; r < q_max; ++r) {
            std::uint64_t sum = table->p(r);
            for (std::size_t q = r + 1; q <= q_max; ++q) {
                sum += contrib[q - 1];
                if (sum != table->p(q))
                    return Verdict{false, "p(" + std::to_string(q) + ") != p(" + std::to_string(r) + ") + contributions"};
            }
        }
        return Verdict{true, "all 1 <= r < q <= " + std::to_string(q_max) + " on " + table->source()};
    }));

    out.push_back(guarded("closed_form", [&] {
        need_table();
        if (p.depth() < 2) throw Error(ErrorKind::not_applicable, "needs two levels");
        const ClosedForm cf(p, *table);
        const std::size_t start = to_size(cf.domain_start());
        std::size_t checked = 0;
        for (std::size_t q = start; q <= table->n_max(); ++q) {
            const auto v = cf.evaluate(BigInt(static_cast<unsigned long>(q)));
            if (v.value != BigInt(static_cast<unsigned long>(table->p(q))))
                return Verdict{false, "q = " + std::to_string(q) + ": formula " + v.value.get_str() + ", table " +
                                          std::to_string(table->p(q))};
            ++checked;
        }
        return Verdict{true, std::to_string(checked) + " lengths from " + std::to_string(start) + ", K = " +
                                 cf.constant().get_str()};
    }));

    return out;
}

}  // namespace subshift
