// subshift-lab: command-line front end.
//
// Exit codes: 0 ok, 1 invalid configuration, 2 insufficient depth or data,
// 3 uncertified result (or a failed verification), 4 budget exceeded.

#include "subshift/battery.hpp"
#include "subshift/error.hpp"
#include "subshift/language.hpp"
#include "subshift/params_io.hpp"
#include "subshift/recover.hpp"
#include "subshift/sadic.hpp"
#include "subshift/spectrum.hpp"
#include "subshift/weakmix.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace subshift;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* schema_prefix = "subshift-lab/";

enum class Format { json, csv, dot };

// --out takes either a format keyword (written to stdout) or a file path (format from extension).
struct Sink {
    Format format = Format::json;
    std::optional<fs::path> path;

    void write(const std::string& text) const {
        if (!path) {
            std::cout << text;
            return;
        }
        std::ofstream out(*path);
        if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path->string());
        out << text;
    }
};

Sink make_sink(const std::string& out, std::initializer_list<Format> allowed) {
    Sink s;
    if (out == "json") {
        s.format = Format::json;
    } else if (out == "csv") {
        s.format = Format::csv;
    } else if (out == "dot") {
        s.format = Format::dot;
    } else {
        s.path = fs::path(out);
        const auto ext = s.path->extension().string();
        if (ext == ".json") s.format = Format::json;
        else if (ext == ".csv") s.format = Format::csv;
        else if (ext == ".dot" || ext == ".gv") s.format = Format::dot;
        else throw Error(ErrorKind::invalid_argument, "cannot infer an output format from " + out);
    }
    if (std::find(allowed.begin(), allowed.end(), s.format) == allowed.end())
        throw Error(ErrorKind::invalid_argument, "output format not available for this command");
    return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json rational_json(const Rational& q, int digits = 40) {
    return {{"exact", q.get_str()}, {"decimal", to_decimal(q, digits)}, {"approx", q.get_d()}};
}

// A params file or an explicit factor list, turned into a language table.
struct Source {
    std::optional<SadicParams> params;
    std::optional<std::vector<Word>> factors;
};

Source load_source(const std::string& path) {
    const json j = read_json(path);
    Source s;
    if (is_factor_data(j)) s.factors = factors_from_json(j);
    else s.params = params_from_json(j);
    return s;
}

LanguageTable table_for(const Source& s, std::optional<std::size_t> level, std::size_t n_max, std::size_t max_symbols) {
    if (s.factors) {
        std::size_t longest = 0;
        for (const auto& w : *s.factors) longest = std::max(longest, w.size());
        if (n_max > longest)
            throw InsufficientDepth(longest + 1, "factor data only reaches length " + std::to_string(longest));
        return LanguageTable::from_factors(*s.factors, n_max, "factor data");
    }
    if (level) return validated_table(*s.params, *level, n_max, max_symbols);
    return auto_validated_table(*s.params, n_max, max_symbols);
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::insufficient_depth:
        case ErrorKind::insufficient_data:
        case ErrorKind::word_too_short:
        case ErrorKind::not_a_concatenation: return 2;
        case ErrorKind::complexity_too_high:
        case ErrorKind::invariant_violation: return 3;
        case ErrorKind::budget_exceeded:
        case ErrorKind::schedule_too_tight: return 4;
        default: return 1;
    }
}

std::string letters(const std::vector<Letter>& ls) {
    std::string out;
    for (auto a : ls) out += (out.empty() ? "" : ",") + std::to_string(a);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructs, analyzes and verifies low-complexity S-adic subshifts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "subshift-lab 1.0");

    std::string params_path, out = "json", input_path, schedule = "default", freq_text;
    std::optional<std::size_t> level;
    std::size_t n_max = 50, n = 3, kmax = 8, K = 30, bits = 256, depth = 3, table_n = 200;
    std::size_t max_symbols = std::size_t{1} << 28;
    std::uint64_t N = 1'000'000, search_cap = 1'000'000, q_from_dk = 0;
    std::optional<std::uint64_t> q_direct;
    std::size_t max_bootstrap = 400;

    auto add_budget = [&](CLI::App* c) {
        c->add_option("--max-symbols", max_symbols, "Largest generated word (memory cap)")
            ->check(CLI::PositiveNumber);
    };

    auto* complexity = app.add_subcommand("complexity", "Complexity function p(n) from a validated table");
    complexity->add_option("--params", params_path, "Parameter or factor-data JSON")->required()->check(CLI::ExistingFile);
    complexity->add_option("--level", level, "Generation level K (default: smallest that validates)");
    complexity->add_option("--nmax", n_max, "Largest n")->check(CLI::PositiveNumber);
    complexity->add_option("--out", out, "csv, json, or an output path");
    add_budget(complexity);

    auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph of order n");
    rauzy->add_option("--params", params_path, "Parameter or factor-data JSON")->required()->check(CLI::ExistingFile);
    rauzy->add_option("--level", level, "Generation level K");
    rauzy->add_option("--n", n, "Order of the graph")->check(CLI::PositiveNumber);
    rauzy->add_option("--out", out, "dot, json, or an output path");
    add_budget(rauzy);

    auto* special = app.add_subcommand("special", "Left-, right- and bi-special words of length n");
    special->add_option("--params", params_path, "Parameter or factor-data JSON")->required()->check(CLI::ExistingFile);
    special->add_option("--level", level, "Generation level K");
    special->add_option("--n", n, "Word length")->check(CLI::PositiveNumber);
    special->add_option("--out", out, "json or an output path");
    add_budget(special);

    auto* sadic = app.add_subcommand("sadic", "S-adic system checks");
    sadic->require_subcommand(1);
    auto* verify = sadic->add_subcommand("verify", "Run the invariant battery");
    verify->add_option("--params", params_path, "Parameter JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--kmax", kmax, "Deepest level checked")->check(CLI::PositiveNumber);
    verify->add_option("--table-n", table_n, "Length bound for table checks")->check(CLI::PositiveNumber);
    verify->add_option("--out", out, "json or an output path");
    add_budget(verify);
    auto* density = sadic->add_subcommand("density", "Density of x(t) != x(t+q) against its bound");
    density->add_option("--params", params_path, "Parameter JSON")->required()->check(CLI::ExistingFile);
    auto* qdk = density->add_option("--q-from-dk", q_from_dk, "Use q = d_k for this k");
    auto* qopt = density->add_option("--q", q_direct, "Explicit shift q");
    qdk->excludes(qopt);
    density->add_option("--N", N, "Prefix length")->check(CLI::PositiveNumber);
    density->add_option("--out", out, "json or an output path");
    add_budget(density);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue estimates and Weyl probes");
    spectrum->require_subcommand(1);
    auto* alpha = spectrum->add_subcommand("alpha", "Eigenvalue alpha with certified error");
    alpha->add_option("--params", params_path, "Parameter JSON")->required()->check(CLI::ExistingFile);
    alpha->add_option("--K", K, "Convergent index")->check(CLI::PositiveNumber);
    alpha->add_option("--bits", bits, "Working precision in bits")->check(CLI::PositiveNumber);
    alpha->add_option("--out", out, "json or an output path");
    auto* probe = spectrum->add_subcommand("probe", "Weyl-sum modulus over a geometric ladder of N");
    probe->add_option("--params", params_path, "Parameter JSON")->check(CLI::ExistingFile);
    probe->add_option("--input", input_path, "Symbol file instead of parameters")->check(CLI::ExistingFile);
    probe->add_option("--freq", freq_text, "Frequency: a/b, decimal, or 'alpha'")->required();
    probe->add_option("--N", N, "Largest N")->check(CLI::PositiveNumber);
    probe->add_option("--out", out, "csv, json, or an output path");
    add_budget(probe);

    auto* example = app.add_subcommand("example", "Prime-height weak-mixing example");
    example->require_subcommand(1);
    auto* build = example->add_subcommand("build", "Construct the parameters");
    build->add_option("--kmax", kmax, "Number of levels")->check(CLI::Range(2, 64));
    build->add_option("--seed-schedule", schedule, "default, square, or double");
    build->add_option("--search-cap", search_cap, "Candidates tried per level")->check(CLI::PositiveNumber);
    build->add_option("--out", out, "json or an output path");
    auto* landmarks = example->add_subcommand("landmarks", "Complexity at the landmark lengths");
    landmarks->add_option("--params", params_path, "Parameter JSON")->required()->check(CLI::ExistingFile);
    landmarks->add_option("--K", K, "Deepest level")->check(CLI::PositiveNumber);
    landmarks->add_option("--out", out, "csv, json, or an output path");

    auto* recover = app.add_subcommand("recover", "Recover pi and (m_k, n_k) from raw symbols");
    recover->add_option("--input", input_path, "Symbol file")->required()->check(CLI::ExistingFile);
    recover->add_option("--depth", depth, "Levels to recover")->check(CLI::PositiveNumber);
    recover->add_option("--max-bootstrap", max_bootstrap, "Largest bi-special order tried")->check(CLI::PositiveNumber);
    recover->add_option("--out", out, "json or an output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*complexity) {
            const Sink sink = make_sink(out, {Format::csv, Format::json});
            const auto t = table_for(load_source(params_path), level, n_max, max_symbols);
            if (sink.format == Format::csv) {
                std::ostringstream ss;
                ss << "n,p\n";
                for (std::size_t i = 1; i <= n_max; ++i) ss << i << "," << t.p(i) << "\n";
                sink.write(ss.str());
            } else {
                json j{{"schema", std::string(schema_prefix) + "complexity/v1"}, {"source", t.source()},
                       {"validated", t.validated()}, {"nmax", n_max}};
                j["p"] = json::array();
                for (std::size_t i = 1; i <= n_max; ++i) j["p"].push_back(t.p(i));
                j["eventually_periodic"] = t.eventually_periodic();
                sink.write(dump(j));
            }
            return 0;
        }

        if (*rauzy) {
            const Sink sink = make_sink(out, {Format::dot, Format::json});
            const auto g = rauzy_graph(table_for(load_source(params_path), level, n + 1, max_symbols), n);
            if (sink.format == Format::dot) {
                sink.write(g.to_dot());
            } else {
                json j{{"schema", std::string(schema_prefix) + "rauzy/v1"}, {"n", n}};
                j["vertices"] = json::array();
                for (const auto& v : g.vertices) j["vertices"].push_back(v.str());
                j["edges"] = json::array();
                for (std::size_t i = 0; i < g.edges.size(); ++i)
                    j["edges"].push_back({{"from", g.vertices[g.edges[i].first].str()},
                                          {"to", g.vertices[g.edges[i].second].str()},
                                          {"label", g.edge_labels[i].str()}});
                sink.write(dump(j));
            }
            return 0;
        }

        if (*special) {
            const Sink sink = make_sink(out, {Format::json});
            const auto r = special_words(table_for(load_source(params_path), level, n + 1, max_symbols), n);
            json j{{"schema", std::string(schema_prefix) + "special/v1"}, {"n", n}};
            auto entries = [](const std::vector<SpecialEntry>& es) {
                json a = json::array();
                for (const auto& e : es) a.push_back({{"word", e.word.str()}, {"letters", letters(e.letters)}});
                return a;
            };
            j["right_special"] = entries(r.right_special);
            j["left_special"] = entries(r.left_special);
            j["bi_special"] = json::array();
            for (const auto& w : r.bi_special) j["bi_special"].push_back(w.str());
            sink.write(dump(j));
            return 0;
        }

        if (*verify) {
            const Sink sink = make_sink(out, {Format::json});
            const auto p = load_params(params_path);
            BatteryOptions opts;
            opts.kmax = kmax;
            opts.table_n = table_n;
            opts.max_symbols = max_symbols;
            const auto results = run_battery(p, opts);
            json checks = json::object();
            bool all = true;
            for (const auto& r : results) {
                checks[r.name] = {{"status", std::string(to_string(r.status))}, {"witness", r.witness}};
                all = all && r.status != CheckStatus::fail;
            }
            json j{{"schema", std::string(schema_prefix) + "sadic-verify/v1"}, {"kmax", kmax}, {"checks", checks},
                   {"all_pass", all}};
            sink.write(dump(j));
            return all ? 0 : 3;
        }

        if (*density) {
            const Sink sink = make_sink(out, {Format::json});
            const auto p = load_params(params_path);
            std::uint64_t q;
            if (q_direct) {
                q = *q_direct;
            } else {
                if (qdk->count() == 0)
                    throw Error(ErrorKind::invalid_argument, "give --q-from-dk or --q");
                q = to_u64(image_lengths(p.pi, p.taus(), q_from_dk)[0], "d_k");
            }
            const auto r = shift_diff_density(p, q, N, max_symbols);
            json j{{"schema", std::string(schema_prefix) + "density/v1"}, {"q", r.q}, {"N", r.N},
                   {"differences", r.differences}, {"density", rational_json(r.density, 12)}};
            if (r.bound) {
                j["bound"] = rational_json(*r.bound, 12);
                j["k"] = *r.k;
                j["within_bound"] = r.density <= *r.bound;
            } else {
                j["bound"] = nullptr;
            }
            sink.write(dump(j));
            return 0;
        }

        if (*alpha) {
            const Sink sink = make_sink(out, {Format::json});
            const auto p = load_params(params_path);
            const auto est = eigenvalue(p, K, bits);
            const int digits = static_cast<int>(static_cast<double>(bits) * 0.30103);
            json j{{"schema", std::string(schema_prefix) + "spectrum-alpha/v1"},
                   {"K", K},
                   {"bits", bits},
                   {"alpha", rational_json(est.alpha, digits)},
                   {"beta", rational_json(est.beta_cf, digits)},
                   {"error_bound", rational_json(est.error_bound, 6)},
                   {"refined_level", est.refined_level},
                   {"refined_error", rational_json(est.refined_error, 6)}};
            j["distances"] = est.distances;
            sink.write(dump(j));
            return 0;
        }

        if (*probe) {
            const Sink sink = make_sink(out, {Format::csv, Format::json});
            if (params_path.empty() == input_path.empty())
                throw Error(ErrorKind::invalid_argument, "give exactly one of --params and --input");
            Word x;
            std::optional<SadicParams> p;
            if (!input_path.empty()) {
                x = read_symbols(input_path);
            } else {
                p = load_params(params_path);
                std::size_t lvl = 0;
                while (image_lengths(p->pi, p->taus(), lvl)[0] < BigInt(static_cast<unsigned long>(N))) {
                    if (++lvl > p->depth()) throw Error(ErrorKind::insufficient_data, "parameters too short for N symbols");
                }
                GenerateOptions go;
                go.max_symbols = max_symbols;
                go.prefix = static_cast<std::size_t>(N);
                x = generate_word(p->pi, p->taus(), lvl, go);
            }
            if (x.size() < N) throw Error(ErrorKind::insufficient_data, "input shorter than N");
            Rational f;
            if (freq_text == "alpha") {
                if (!p) throw Error(ErrorKind::invalid_argument, "--freq alpha needs --params");
                f = eigenvalue(*p, p->depth() - 1, 256).alpha;
            } else {
                f = parse_rational(freq_text);
            }
            std::vector<std::size_t> Ns;
            for (std::uint64_t m = 1000; m < N; m *= 10) Ns.push_back(m);
            Ns.push_back(N);
            const auto ladder = weyl_ladder(x, f, Ns);
            if (sink.format == Format::csv) {
                std::ostringstream ss;
                ss << "N,modulus\n";
                ss.precision(12);
                for (const auto& pt : ladder) ss << pt.N << "," << pt.modulus << "\n";
                sink.write(ss.str());
            } else {
                json j{{"schema", std::string(schema_prefix) + "spectrum-probe/v1"}, {"freq", rational_json(f, 20)}};
                j["ladder"] = json::array();
                for (const auto& pt : ladder) j["ladder"].push_back({{"N", pt.N}, {"modulus", pt.modulus}});
                sink.write(dump(j));
            }
            return 0;
        }

        if (*build) {
            const Sink sink = make_sink(out, {Format::json});
            ExampleConfig cfg;
            cfg.kmax = kmax;
            cfg.search_cap = search_cap;
            cfg.growth = schedule_by_name(schedule);
            const auto ex = build_example(cfg);
            json j = params_to_json(ex.params);
            j["levels"] = json::array();
            for (const auto& lv : ex.levels)
                j["levels"].push_back({{"k", lv.k},
                                       {"m", lv.m.get_str()},
                                       {"n", lv.n.get_str()},
                                       {"d", lv.d.get_str()},
                                       {"minimum", lv.minimum.get_str()},
                                       {"candidates", lv.candidates},
                                       {"coprime", lv.coprime}});
            j["schedule"] = schedule;
            j["schema"] = std::string(schema_prefix) + "example-build/v1";
            sink.write(dump(j));
            return 0;
        }

        if (*landmarks) {
            const Sink sink = make_sink(out, {Format::csv, Format::json});
            const auto p = load_params(params_path);
            // exact language at short lengths, enough to read off the constant
            std::size_t j_level = 2;
            const auto lens = derived_lengths(p, 2);
            while (j_level < p.depth() && derived_lengths(p, j_level).back().v + 1 < lens[1].s + lens[1].p) ++j_level;
            const auto table = block_pair_language(p, j_level);
            const auto rep = landmark_complexities(p, K, table);
            if (sink.format == Format::csv) {
                std::ostringstream ss;
                ss << "k,q,p,ratio,excess,q_low,p_low,ratio_low,identity_holds\n";
                for (const auto& r : rep.rows)
                    ss << r.k << "," << r.q << "," << r.p << "," << to_decimal(r.ratio, 12) << ","
                       << to_decimal(r.excess, 1) << "," << r.q_low << "," << r.p_low << ","
                       << to_decimal(r.ratio_low, 12) << "," << (r.identity_holds ? "true" : "false") << "\n";
                sink.write(ss.str());
            } else {
                json j{{"schema", std::string(schema_prefix) + "landmarks/v1"},
                       {"K", rep.K.get_str()},
                       {"excess_strictly_decreasing", rep.excess_strictly_decreasing},
                       {"table_agrees", rep.table_agrees}};
                j["rows"] = json::array();
                for (const auto& r : rep.rows)
                    j["rows"].push_back({{"k", r.k},
                                         {"q", r.q.get_str()},
                                         {"p", r.p.get_str()},
                                         {"ratio", to_decimal(r.ratio, 12)},
                                         {"excess", to_decimal(r.excess, 1)},
                                         {"q_low", r.q_low.get_str()},
                                         {"p_low", r.p_low.get_str()},
                                         {"ratio_low", to_decimal(r.ratio_low, 12)},
                                         {"identity_holds", r.identity_holds}});
                sink.write(dump(j));
            }
            return 0;
        }

        if (*recover) {
            const Sink sink = make_sink(out, {Format::json});
            RecoverOptions ro;
            ro.max_bootstrap_length = max_bootstrap;
            const auto r = recover_structure(read_symbols(input_path), depth, ro);
            const bool ok = r.certified && r.depth >= depth;
            json j = params_to_json(r.params());
            j["schema"] = std::string(schema_prefix) + "recover/v1";
            j["certificate"] = {{"certified", ok},
                                {"depth", r.depth},
                                {"certified_length", r.certified_length},
                                {"bootstrap_q", r.bootstrap_q},
                                {"validated_n", r.validated_n},
                                {"max_ratio", r.max_ratio},
                                {"note", r.note},
                                {"canonicalization", "longest bootstrapping bi-special that certifies"}};
            sink.write(dump(j));
            return ok ? 0 : 3;
        }
    } catch (const Error& e) {
        std::cerr << "subshift-lab: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "subshift-lab: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
