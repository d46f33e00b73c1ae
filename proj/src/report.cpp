#include "fjrw/report.hpp"

#include <algorithm>
#include <sstream>

namespace fjrw {

namespace {

int axiom_rank(const std::string& a) {
    if (a == "pairing") return 0;
    if (a == "concavity") return 1;
    if (a == "index_zero") return 2;
    if (a == "composition") return 3;
    return 4;
}

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Pairing: return "pairing";
        case Axiom::Concavity: return "concavity";
        case Axiom::IndexZero: return "index_zero";
        default: return "none";
    }
}

SymValue fully_derive(SymValue v, const Resolution& res) {
    for (int i = 0; i < 16; ++i) {
        SymValue next = res.reduce(v.substitute_all(res.derived));
        if (next == v) break;
        v = next;
    }
    return v;
}

std::string var_list(const Polynomial& W, const std::vector<int>& idx) {
    std::string out;
    for (int v : idx) {
        if (!out.empty()) out += ", ";
        out += W.vars[(size_t)v];
    }
    return out;
}

} // namespace

std::vector<ReportedCorrelator> collect_correlators(const PipelineResult& P) {
    std::vector<ReportedCorrelator> out;
    for (auto& [t, ent] : P.sys.table) {
        ReportedCorrelator c;
        c.triple = t;
        for (int i = 0; i < 3; ++i) c.labels[(size_t)i] = P.S.basis[(size_t)t[(size_t)i]].label;
        if (ent.value.kind == CorrelatorValue::Known) {
            c.value = to_string(ent.value.value);
            c.axiom = axiom_name(ent.axiom);
        } else {
            SymValue v = fully_derive(SymValue::symbol(ent.value.name), P.res);
            auto sq = [&](const SymValue& s) -> std::optional<Rational> {
                if (s.terms.size() != 1) return std::nullopt;
                auto& [m, coeff] = *s.terms.begin();
                if (m.size() != 1 || m.begin()->second != 1) return std::nullopt;
                auto it = P.res.sign_square.find(m.begin()->first);
                if (it == P.res.sign_square.end()) return std::nullopt;
                return coeff * coeff * it->second;
            };
            if (v.is_rational()) {
                c.value = to_string(v.rational());
                c.axiom = "composition";
            } else if (auto r = sq(v)) {
                c.value = "±√(" + to_string(*r) + ")";
                c.axiom = "composition";
            } else {
                c.value = "unknown:" + ent.value.name;
                c.axiom = "none";
            }
        }
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const ReportedCorrelator& a,
                                                const ReportedCorrelator& b) {
        return axiom_rank(a.axiom) < axiom_rank(b.axiom);
    });
    return out;
}

nlohmann::json correlator_json(const ReportedCorrelator& c) {
    return {{"triple", {c.labels[0], c.labels[1], c.labels[2]}},
            {"value", c.value},
            {"axiom", c.axiom}};
}

nlohmann::json verdict_json(const std::string& name, const MirrorVerdict& v) {
    nlohmann::json j{{"singularity", name},
                     {"status", to_string(v.status)},
                     {"dim_A", v.dim_A},
                     {"dim_B", v.dim_B},
                     {"sign_assignments_tested", v.sign_assignments_tested},
                     {"hypotheses", v.hypotheses}};
    j["alpha"] = v.alpha ? nlohmann::json(to_string(*v.alpha)) : nlohmann::json();
    j["mu"] = v.mu ? nlohmann::json(to_string(*v.mu)) : nlohmann::json();
    return j;
}

nlohmann::json report_json(const std::string& name, const PipelineResult& P,
                           const MirrorVerdict* verdict) {
    nlohmann::json j;
    j["singularity"] = name;
    j["polynomial"] = P.W.str();
    nlohmann::json weights = nlohmann::json::array();
    for (auto& q : P.ws.q) weights.push_back(to_string(q));
    j["weights"] = weights;
    j["central_charge"] = to_string(P.S.chat);
    j["group"] = {{"order", P.G.order()},
                  {"generator", P.S.gen ? nlohmann::json(P.S.gen->str()) : nlohmann::json()}};

    nlohmann::json loci = nlohmann::json::array();
    for (auto& sec : P.S.sectors) {
        if (sec.fix.dimension() == 0) continue;
        loci.push_back({{"sector", sec.label},
                        {"phases", sec.h.str()},
                        {"fixed_variables", var_list(P.W, sec.fix.fixed)},
                        {"restriction", sec.restricted.str()},
                        {"mu", sec.ring.mu}});
    }
    j["fixed_loci"] = loci;

    nlohmann::json rows = nlohmann::json::array();
    for (auto& row : degree_table(P.S))
        rows.push_back({{"sector", row.sector_label},
                        {"degree", to_string(row.scaled_degree)},
                        {"invariants", row.invariants}});
    j["sectors"] = rows;

    nlohmann::json cors = nlohmann::json::array();
    for (auto& c : collect_correlators(P)) cors.push_back(correlator_json(c));
    j["correlators"] = cors;

    if (verdict) j["verdict"] = verdict_json(name, *verdict);
    return j;
}

std::string render_markdown(const std::string& name, const PipelineResult& P,
                            const MirrorVerdict* verdict) {
    std::ostringstream os;
    os << "## " << name << "\n\n";
    os << "- polynomial: " << P.W.str() << "\n";
    os << "- weights: (";
    for (size_t i = 0; i < P.ws.q.size(); ++i)
        os << (i ? ", " : "") << to_string(P.ws.q[i]);
    os << ")\n";
    os << "- central charge: " << to_string(P.S.chat) << "\n";
    os << "- group: order " << P.G.order();
    if (P.S.gen) os << ", generator " << P.S.gen->str();
    os << "\n\n";

    os << "### Fixed loci\n\n";
    os << "| sector | phases | fixed variables | restriction | mu |\n";
    os << "|---|---|---|---|---|\n";
    for (auto& sec : P.S.sectors) {
        if (sec.fix.dimension() == 0) continue;
        os << "| " << sec.label << " | " << sec.h.str() << " | " << var_list(P.W, sec.fix.fixed)
           << " | " << sec.restricted.str() << " | " << sec.ring.mu << " |\n";
    }
    os << "\n### Sectors\n\n";
    os << "| sector | degree | invariants |\n";
    os << "|---|---|---|\n";
    for (auto& row : degree_table(P.S)) {
        os << "| " << row.sector_label << " | " << to_string(row.scaled_degree) << " | ";
        for (size_t i = 0; i < row.invariants.size(); ++i)
            os << (i ? ", " : "") << row.invariants[i];
        os << " |\n";
    }

    os << "\n### Correlators\n";
    auto cors = collect_correlators(P);
    std::string group;
    for (auto& c : cors) {
        if (c.axiom != group) {
            group = c.axiom;
            std::string title = group == "pairing"      ? "Pairing"
                                : group == "concavity"  ? "Concavity"
                                : group == "index_zero" ? "Index zero"
                                : group == "composition" ? "Composition"
                                                          : "Other";
            os << "\n#### " << title << "\n\n";
        }
        os << "- <" << c.labels[0] << ", " << c.labels[1] << ", " << c.labels[2]
           << "> = " << c.value << "\n";
    }

    if (verdict) {
        os << "\n### Mirror verdict\n\n";
        os << "- status: " << to_string(verdict->status) << "\n";
        os << "- dim A / dim B: " << verdict->dim_A << " / " << verdict->dim_B << "\n";
        os << "- sign assignments tested: " << verdict->sign_assignments_tested << "\n";
        if (!verdict->hypotheses.empty()) {
            os << "- hypotheses:";
            for (auto& h : verdict->hypotheses) os << " " << h << ";";
            os << "\n";
        }
        if (verdict->alpha) os << "- alpha: " << to_string(*verdict->alpha) << "\n";
        if (verdict->mu) os << "- mu: " << to_string(*verdict->mu) << "\n";
        if (!verdict->detail.empty()) os << "- detail: " << verdict->detail << "\n";
    }
    return os.str();
}

std::string render_report(const std::string& name, const PipelineResult& P,
                          const MirrorVerdict* verdict, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) return report_json(name, P, verdict).dump(2) + "\n";
    return render_markdown(name, P, verdict);
}

} // namespace fjrw
