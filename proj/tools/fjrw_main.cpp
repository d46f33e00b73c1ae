#include "fjrw/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <regex>
#include <thread>

using namespace fjrw;

namespace {

constexpr int EXIT_MISMATCH = 1;
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_DEGENERATE = 3;

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("invalid rational '" + s + "'", 0);
    }
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, Rational> out;
    for (auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("expected k=v in '" + kv + "'", 0);
        out[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    return out;
}

std::vector<Rational> parse_phases(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    return out;
}

struct GroupChoice {
    bool maximal = true;
    std::vector<Rational> gen; // explicit generator phases when nonempty
};

GroupChoice parse_group(const std::string& s, const CorpusEntry* entry) {
    GroupChoice g;
    if (s.empty()) {
        if (entry) g.maximal = entry->maximal_group;
        return g;
    }
    if (s == "maximal") return g;
    if (s == "J") {
        g.maximal = false;
        return g;
    }
    if (s.rfind("gen=", 0) == 0) {
        g.gen = parse_phases(s.substr(4));
        return g;
    }
    throw ParseError("invalid --group '" + s + "'", 0);
}

// weight-system and isolated-singularity sanity; throws DegenerateInput
void check_nondegenerate(const Polynomial& W, const WeightSystem& ws) {
    for (auto& q : ws.q)
        if (q <= 0 || q >= 1) throw DegenerateInput("weights not in (0,1): " + W.str());
    try {
        milnor_ring(W, ws.q);
    } catch (const InfiniteQuotient& e) {
        throw DegenerateInput(std::string("non-isolated singularity: ") + e.what());
    }
}

void build(PipelineResult& P, const Polynomial& W, const GroupChoice& g,
           const std::vector<Rational>& pinned) {
    WeightSystem ws = solve_weights(W);
    check_nondegenerate(W, ws);
    if (!ws.heavy.empty()) {
        std::cerr << "warning: variable weight >= 1/2:";
        for (int v : ws.heavy) std::cerr << " " << W.vars[(size_t)v];
        std::cerr << "\n";
    }
    if (g.gen.empty()) {
        run_pipeline(P, W, g.maximal, pinned);
        return;
    }
    P.W = W;
    P.ws = ws;
    P.G = group_from_generators({PhaseVector{g.gen}});
    P.S = build_state_space(W, P.ws, P.G, PhaseVector{g.gen});
    P.sys = compute_correlators(P.S);
    P.sys.S = &P.S;
    P.res = resolve_unknowns(P.sys);
}

struct Input {
    std::string name;
    Polynomial W;
    const CorpusEntry* entry = nullptr;
    std::map<std::string, Rational> params;
};

Input resolve_input(const std::string& arg, const std::vector<std::string>& param_kvs) {
    Input in;
    in.params = parse_params(param_kvs);
    in.entry = corpus_find(arg);
    if (in.entry) {
        in.name = arg;
        in.W = instantiate(*in.entry, in.params);
        return in;
    }
    in.name = arg;
    Polynomial W = parse_polynomial(arg);
    if (!in.params.empty()) W = substitute_params(W, in.params);
    in.W = W;
    return in;
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    return ReportFormat::Markdown;
}

bool glob_match(const std::string& pattern, const std::string& s) {
    std::string re;
    for (char c : pattern) {
        if (c == '*') re += ".*";
        else if (std::isalnum((unsigned char)c)) re += c;
        else re += std::string("\\") + c;
    }
    return std::regex_match(s, std::regex(re));
}

int cmd_analyze(const Input& in, const GroupChoice& g, ReportFormat fmt) {
    PipelineResult P;
    build(P, in.W, g, in.entry ? in.entry->pinned_gen : std::vector<Rational>{});
    if (fmt == ReportFormat::Json) {
        nlohmann::json j = report_json(in.name, P, nullptr);
        j.erase("correlators");
        std::cout << j.dump(2) << "\n";
    } else {
        std::string md = render_markdown(in.name, P, nullptr);
        std::cout << md.substr(0, md.find("\n### Correlators")) << "\n";
    }
    return 0;
}

int cmd_correlators(const Input& in, const GroupChoice& g, ReportFormat fmt) {
    PipelineResult P;
    build(P, in.W, g, in.entry ? in.entry->pinned_gen : std::vector<Rational>{});
    auto cors = collect_correlators(P);
    if (fmt == ReportFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& c : cors) arr.push_back(correlator_json(c));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (auto& c : cors)
            std::cout << "<" << c.labels[0] << ", " << c.labels[1] << ", " << c.labels[2]
                      << "> = " << c.value << "  [" << c.axiom << "]\n";
    }
    return 0;
}

int cmd_ring(const Input& in, const GroupChoice& g, ReportFormat fmt) {
    PipelineResult P;
    build(P, in.W, g, in.entry ? in.entry->pinned_gen : std::vector<Rational>{});
    auto assignments = sign_assignments(P.sys, P.res, true);
    FrobeniusAlgebra A = build_algebra(P.sys, P.res, assignments.front());
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["singularity"] = in.name;
        j["dimension"] = A.dim;
        nlohmann::json basis = nlohmann::json::array();
        for (size_t i = 0; i < A.dim; ++i)
            basis.push_back({{"label", A.labels[i]}, {"degree", to_string(A.degrees[i])}});
        j["basis"] = basis;
        nlohmann::json prods = nlohmann::json::array();
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t j2 = i; j2 < A.dim; ++j2) {
                nlohmann::json coords = nlohmann::json::array();
                for (auto& c : A.prod[i][j2]) coords.push_back(c.str());
                prods.push_back({{"left", A.labels[i]}, {"right", A.labels[j2]},
                                 {"coords", coords}});
            }
        j["products"] = prods;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "## " << in.name << " ring\n\n- dimension: " << A.dim << "\n\n";
        std::cout << "| element | degree |\n|---|---|\n";
        for (size_t i = 0; i < A.dim; ++i)
            std::cout << "| " << A.labels[i] << " | " << to_string(A.degrees[i]) << " |\n";
        std::cout << "\n### Products\n\n";
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t j = i; j < A.dim; ++j) {
                std::cout << A.labels[i] << " * " << A.labels[j] << " =";
                bool any = false;
                for (size_t k = 0; k < A.dim; ++k) {
                    const SymValue& c = A.prod[i][j][k];
                    if (c.is_zero()) continue;
                    any = true;
                    std::cout << " + (" << c.str() << ") " << A.labels[k];
                }
                std::cout << (any ? "" : " 0") << "\n";
            }
    }
    return 0;
}

int cmd_mirror_check(const Input& in, const GroupChoice& g, ReportFormat fmt, bool all_signs) {
    EntryResult r;
    PipelineResult P;
    if (in.entry) {
        build(P, in.W, g, in.entry->pinned_gen);
        r = run_entry(*in.entry, in.params, all_signs);
    } else {
        build(P, in.W, g, {});
        r.name = in.name;
        r.verdict = verify_mirror(P.W, P.S, P.sys, P.res, {}, all_signs);
        r.ok = r.verdict.status != MirrorStatus::Undetermined;
    }
    if (fmt == ReportFormat::Json) {
        nlohmann::json j = report_json(in.name, P, &r.verdict);
        if (!r.failures.empty()) j["failures"] = r.failures;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_report(in.name, P, &r.verdict, fmt);
        for (auto& f : r.failures) std::cout << "- FAIL: " << f << "\n";
    }
    bool bad = !r.ok || r.verdict.status == MirrorStatus::Undetermined;
    return bad ? EXIT_MISMATCH : 0;
}

int cmd_corpus_run(const std::string& filter, ReportFormat fmt, bool all_signs, unsigned jobs) {
    std::vector<const CorpusEntry*> entries;
    for (auto& e : corpus())
        if (filter.empty() || glob_match(filter, e.name)) entries.push_back(&e);

    std::vector<EntryResult> results(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < entries.size(); i = next++)
            results[i] = run_entry(*entries[i], {}, all_signs);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    size_t bad = 0;
    if (fmt == ReportFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (size_t i = 0; i < entries.size(); ++i) {
            nlohmann::json j = verdict_json(entries[i]->name, results[i].verdict);
            j["ok"] = results[i].ok;
            if (!results[i].failures.empty()) j["failures"] = results[i].failures;
            arr.push_back(j);
            if (!results[i].ok) ++bad;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < entries.size(); ++i) {
            const EntryResult& r = results[i];
            std::cout << (r.ok ? "PASS " : "FAIL ") << entries[i]->name << "  "
                      << to_string(r.verdict.status) << "  dim " << r.verdict.dim_A << "/"
                      << r.verdict.dim_B;
            for (auto& h : r.verdict.hypotheses) std::cout << "  {" << h << "}";
            std::cout << "\n";
            for (auto& f : r.failures) std::cout << "    " << f << "\n";
            if (!r.ok) ++bad;
        }
        std::cout << (bad ? "mismatches: " + std::to_string(bad) : "all entries verified")
                  << "\n";
    }
    return bad ? EXIT_MISMATCH : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FJRW A-model engine and mirror symmetry verifier"};
    app.require_subcommand(1);

    std::string target, group, format = "md", signs = "all", filter;
    std::vector<std::string> params;
    unsigned jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_target) {
        if (with_target) cmd->add_option("target", target, "corpus entry name or polynomial")
                             ->required();
        cmd->add_option("--group", group, "maximal|J|gen=<phases>");
        cmd->add_option("--param", params, "parameter binding k=v");
        cmd->add_option("--format", format, "md|json");
        cmd->add_option("--signs", signs, "all|first");
        cmd->add_option("--jobs", jobs, "worker threads");
    };

    auto* analyze = app.add_subcommand("analyze", "weights, group and sector table");
    add_common(analyze, true);
    auto* correlators = app.add_subcommand("correlators", "three-point correlator table");
    add_common(correlators, true);
    auto* ring = app.add_subcommand("ring", "Frobenius algebra basis and products");
    add_common(ring, true);
    auto* mirror = app.add_subcommand("mirror-check", "full pipeline and mirror verdict");
    add_common(mirror, true);
    auto* corpus_cmd = app.add_subcommand("corpus", "bundled corpus operations");
    auto* run = corpus_cmd->add_subcommand("run", "verify corpus entries");
    run->add_option("filter", filter, "name glob, e.g. Z_*");
    add_common(run, false);
    corpus_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (format != "md" && format != "json") throw ParseError("invalid --format", 0);
        if (signs != "all" && signs != "first") throw ParseError("invalid --signs", 0);
        ReportFormat fmt = parse_format(format);
        bool all_signs = signs == "all";
        if (*run) return cmd_corpus_run(filter, fmt, all_signs, jobs);
        Input in = resolve_input(target, params);
        GroupChoice gc = parse_group(group, in.entry);
        if (*analyze) return cmd_analyze(in, gc, fmt);
        if (*correlators) return cmd_correlators(in, gc, fmt);
        if (*ring) return cmd_ring(in, gc, fmt);
        if (*mirror) return cmd_mirror_check(in, gc, fmt, all_signs);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return EXIT_DEGENERATE;
    } catch (const InfiniteQuotient& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return EXIT_DEGENERATE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DEGENERATE;
    }
    return 0;
}
