#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties_common.hpp"

#include <iostream>
#include <map>
#include <memory>
#include <set>

using namespace fjrw;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void check(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            notes.push_back(what);
        }
    }
    void finish() {
        std::cout << (ok ? "PASS " : "FAIL ") << name << std::endl;
        for (auto& n : notes) {
            std::cout << "    " << n << std::endl;
            FAIL_CHECK(n);
        }
        CHECK(ok);
    }
};

const PipelineResult& pipe(const std::string& name) {
    static std::map<std::string, std::unique_ptr<PipelineResult>> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return *it->second;
    const CorpusEntry* e = corpus_find(name);
    REQUIRE(e);
    auto P = std::make_unique<PipelineResult>();
    run_pipeline(*P, instantiate(*e), e->maximal_group, e->pinned_gen);
    return *cache.emplace(name, std::move(P)).first->second;
}

const EntryResult& result(const std::string& name) {
    static std::map<std::string, EntryResult> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const CorpusEntry* e = corpus_find(name);
    REQUIRE(e);
    return cache.emplace(name, run_entry(*e)).first->second;
}

int index_of(const PipelineResult& P, const std::string& label) {
    for (size_t i = 0; i < P.S.basis.size(); ++i)
        if (P.S.basis[i].label == label) return (int)i;
    return -1;
}

const CorrelatorEntry* find_by_labels(const PipelineResult& P, const std::string& a,
                                      const std::string& b, const std::string& c) {
    int i = index_of(P, a), j = index_of(P, b), k = index_of(P, c);
    if (i < 0 || j < 0 || k < 0) return nullptr;
    return P.sys.find({i, j, k});
}

} // namespace

TEST_CASE("criterion 1: E_19 end to end") {
    Criterion C("criterion 1: E_19 end to end");
    const PipelineResult& P = pipe("E_19");

    C.check(P.ws.q == std::vector<Rational>{Rational(1, 3), Rational(2, 21)}, "weights");
    C.check(P.S.chat == Rational(24, 21), "central charge");
    C.check(P.G.order() == 21, "group order");

    std::vector<std::string> labels;
    for (auto& b : P.S.basis) labels.push_back(b.label);
    std::vector<std::string> want_labels = {"y^6 e_0", "e_1",  "e_2",  "e_4",  "e_5",
                                            "e_7",     "e_8",  "e_10", "e_11", "e_13",
                                            "e_14",    "e_16", "e_17", "e_19", "e_20"};
    C.check(labels == want_labels, "state space basis labels");

    std::vector<std::pair<std::string, long>> want_rows = {
        {"e_0", 24},  {"e_1", 0},   {"e_2", 18},  {"e_4", 12},  {"e_5", 30},
        {"e_7", 24},  {"e_8", 42},  {"e_10", 36}, {"e_11", 12}, {"e_13", 6},
        {"e_14", 24}, {"e_16", 18}, {"e_17", 36}, {"e_19", 30}, {"e_20", 48}};
    auto tab = degree_table(P.S);
    C.check(tab.size() == want_rows.size(), "degree table size");
    for (size_t i = 0; i < tab.size() && i < want_rows.size(); ++i)
        C.check(tab[i].sector_label == want_rows[i].first &&
                    tab[i].scaled_degree == Rational(want_rows[i].second),
                "degree table row " + tab[i].sector_label);

    const CorrelatorEntry* pr = find_by_labels(P, "y^6 e_0", "y^6 e_0", "e_1");
    C.check(pr && pr->value.kind == CorrelatorValue::Known &&
                pr->value.value == Rational(-1, 7) && pr->axiom == Axiom::Pairing,
            "pairing correlator -1/7");

    size_t concave = 0;
    bool all_one = true;
    for (auto& [t, ent] : P.sys.table)
        if (ent.axiom == Axiom::Concavity) {
            ++concave;
            if (ent.value.value != 1) all_one = false;
        }
    C.check(concave == 9 && all_one, "nine concavity correlators equal to 1");

    // the composition relation forces the remaining correlator to square to 1
    C.check(P.res.sign_square.size() == 1 && P.res.sign_square.begin()->second == 1,
            "composition relation pins the square of the undetermined correlator");

    auto assignments = sign_assignments(P.sys, P.res, false);
    std::set<Rational> vals;
    for (auto& a : assignments)
        for (auto& [n, v] : a) vals.insert(v);
    C.check(assignments.size() == 2 && vals == std::set<Rational>{Rational(1), Rational(-1)},
            "both sign choices admissible");

    CorrelatorSystem sys = P.sys; // verify_mirror takes a mutable system
    sys.S = &P.S;
    MirrorVerdict V = verify_mirror(P.W, P.S, sys, P.res, {}, true);
    C.check(V.status == MirrorStatus::Isomorphic && V.dim_A == 15 && V.dim_B == 15 &&
                V.sign_assignments_tested == 2,
            "isomorphism to the transposed ring for both sign choices");
    C.finish();
}

TEST_CASE("criterion 2: sector milnor numbers") {
    Criterion C("criterion 2: sector milnor numbers");
    for (auto& e : corpus()) {
        if (e.sector_mus.empty()) continue;
        const PipelineResult& P = pipe(e.name);
        std::set<size_t> got, want(e.sector_mus.begin(), e.sector_mus.end());
        for (auto& sec : P.S.sectors)
            if (sec.fix.dimension() > 0) got.insert(sec.ring.mu);
        C.check(got == want, e.name + ": sector milnor numbers");
    }
    C.finish();
}

TEST_CASE("criterion 3: correlator values") {
    Criterion C("criterion 3: correlator values");
    std::set<Rational> pairing_vals, index_zero_vals;

    for (auto& e : corpus()) {
        if (e.kind == EntryKind::Tensor) continue;
        const PipelineResult& P = pipe(e.name);
        std::vector<ExpectedCorrelator> expected = e.correlators;
        if (e.param_correlators) {
            auto extra = e.param_correlators(e.params);
            expected.insert(expected.end(), extra.begin(), extra.end());
        }
        for (auto& c : expected) {
            const CorrelatorEntry* ent = find_by_labels(P, c.labels[0], c.labels[1], c.labels[2]);
            bool good = ent && ent->value.kind == CorrelatorValue::Known &&
                        ent->value.value == c.value &&
                        (c.axiom == Axiom::None || ent->axiom == c.axiom);
            C.check(good, e.name + ": <" + c.labels[0] + ", " + c.labels[1] + ", " + c.labels[2] +
                              "> = " + to_string(c.value));
            if (!ent) continue;
            if (ent->axiom == Axiom::Pairing) pairing_vals.insert(ent->value.value);
            if (ent->axiom == Axiom::IndexZero) index_zero_vals.insert(ent->value.value);
        }
    }

    for (long v : {-2, -3, -4, -5, -6})
        C.check(index_zero_vals.count(Rational(v)) > 0,
                "index zero value " + std::to_string(v) + " realized");
    for (auto& f : std::vector<Rational>{Rational(-1, 3), Rational(-1, 2), Rational(-1, 4),
                                         Rational(-1, 5), Rational(-1, 8), Rational(-1, 9),
                                         Rational(1, 11), Rational(-4, 11), Rational(-3, 11),
                                         Rational(-6, 17), Rational(1, 17), Rational(-3, 17)})
        C.check(pairing_vals.count(f) > 0, "pairing value " + to_string(f) + " realized");

    struct Spot {
        const char* entry;
        const char* l;
        long v;
    };
    for (auto& s : std::vector<Spot>{{"S_12", "e_9", -3}, {"W_17", "e_7", -5},
                                     {"S_17T", "e_1", -6}}) {
        const CorrelatorEntry* ent = find_by_labels(pipe(s.entry), s.l, s.l, s.l);
        C.check(ent && ent->value.kind == CorrelatorValue::Known &&
                    ent->value.value == Rational(s.v) && ent->axiom == Axiom::IndexZero,
                std::string(s.entry) + ": <" + s.l + ", " + s.l + ", " + s.l + "> index zero");
    }

    // parametrized pairing families at several rational parameter values
    auto family = [&](const std::string& name, const std::string& pname,
                      const std::vector<Rational>& values) {
        const CorpusEntry* e = corpus_find(name);
        REQUIRE(e);
        for (auto& v : values) {
            std::map<std::string, Rational> params = e->params;
            params[pname] = v;
            PipelineResult P;
            run_pipeline(P, instantiate(*e, params), e->maximal_group, e->pinned_gen);
            for (auto& c : e->param_correlators(params)) {
                const CorrelatorEntry* ent =
                    find_by_labels(P, c.labels[0], c.labels[1], c.labels[2]);
                C.check(ent && ent->value.kind == CorrelatorValue::Known &&
                            ent->value.value == c.value,
                        name + " at " + pname + "=" + to_string(v) + ": <" + c.labels[0] + ", " +
                            c.labels[1] + ", " + c.labels[2] + "> = " + to_string(c.value));
            }
        }
    };
    family("J_3_0", "b", {Rational(1), Rational(2), Rational(-1)});
    family("W_1_0", "a", {Rational(1), Rational(3), Rational(1, 2)});
    C.finish();
}

TEST_CASE("criterion 4: mirror verdicts") {
    Criterion C("criterion 4: mirror verdicts");
    std::vector<std::string> iso = {"E_13",  "W_13", "Z_11",  "Z_12",  "Z_13",  "Q_11", "S_11",
                                    "S_12",  "S_16", "Z_17",  "Z_17T", "Z_18",  "Z_19", "Z_19T",
                                    "W_17",  "W_17T", "Q_17", "S_17",  "Q_2_0", "S_1_0", "Z_1_0",
                                    "E_19"};
    std::vector<std::string> conditional = {"Q_17T", "S_17T", "Q_2_0T", "S_1_0T"};
    std::vector<std::string> tensor = {"Q_10", "Q_12", "U_12", "W_12", "E_12", "E_14",
                                       "E_18", "E_20", "U_16", "W_18", "Q_16", "Q_18"};

    for (auto& n : iso) {
        const CorpusEntry* e = corpus_find(n);
        const EntryResult& r = result(n);
        C.check(r.ok, n + ": entry verification");
        C.check(r.verdict.status == MirrorStatus::Isomorphic, n + ": isomorphic");
        C.check(e && r.verdict.dim_A == e->mirror_dim && r.verdict.dim_B == e->mirror_dim,
                n + ": target dimension");
    }
    for (auto& n : conditional) {
        const EntryResult& r = result(n);
        C.check(r.ok, n + ": entry verification");
        C.check(r.verdict.status == MirrorStatus::Conditional && !r.verdict.hypotheses.empty(),
                n + ": conditional with named hypothesis");
    }
    for (auto& n : tensor) {
        const EntryResult& r = result(n);
        C.check(r.ok, n + ": entry verification");
        C.check(r.verdict.tensor_path && r.verdict.status == MirrorStatus::Isomorphic,
                n + ": tensor path isomorphic");
    }
    C.finish();
}

TEST_CASE("criterion 5: graded non-existence") {
    Criterion C("criterion 5: graded non-existence");

    const EntryResult& j = result("J_3_0");
    C.check(j.ok, "J_3_0 entry verification");
    C.check(j.verdict.status == MirrorStatus::NoMilnorRing, "J_3_0 status");
    C.check(j.verdict.alpha && *j.verdict.alpha == Rational(1, 22), "J_3_0 alpha 1/22");
    C.check(j.verdict.mu && *j.verdict.mu == Rational(168, 25), "J_3_0 mu 168/25");

    const EntryResult& w = result("W_1_0");
    C.check(w.ok, "W_1_0 entry verification");
    C.check(w.verdict.status == MirrorStatus::NoMilnorRing, "W_1_0 status");
    C.check(w.verdict.mu && !is_integer(*w.verdict.mu), "W_1_0 mu non-integral");

    // a five-generator degree profile also fails the weight count
    MirrorVerdict f = milnor_nonexistence_check(
        7, {Rational(14), Rational(10), Rational(16), Rational(12), Rational(18)}, Rational(28));
    C.check(f.status == MirrorStatus::NoMilnorRing, "degree-list status");
    C.check(f.alpha && *f.alpha == Rational(5, 168), "degree-list alpha 5/168");
    C.check(f.mu && !is_integer(*f.mu), "degree-list mu non-integral");
    C.finish();
}

TEST_CASE("criterion 6: structural property suite") {
    Criterion C("criterion 6: structural property suite");
    for (auto& e : corpus())
        for (auto& f : props::entry_properties(e)) C.check(false, f);
    C.finish();
}

TEST_CASE("criterion 7: oracle equivalence on the ADE series") {
    Criterion C("criterion 7: oracle equivalence on the ADE series");

    auto nilpotency = [&](const FrobeniusAlgebra& A, const std::string& tag) {
        int gen = -1;
        Rational best;
        for (size_t i = 0; i < A.dim; ++i)
            if (A.degrees[i] > 0 && (gen < 0 || A.degrees[i] < best)) {
                gen = (int)i;
                best = A.degrees[i];
            }
        C.check(gen >= 0 || A.dim == 1, tag + ": generator exists");
        if (gen < 0) return;
        std::set<int> seen;
        for (size_t k = 0; k < A.dim; ++k) {
            SymVec p = A.power(gen, (long)k);
            int nz = -1;
            size_t count = 0;
            for (size_t i = 0; i < A.dim; ++i)
                if (!p[i].is_zero()) {
                    nz = (int)i;
                    ++count;
                }
            C.check(count == 1 && seen.insert(nz).second,
                    tag + ": power " + std::to_string(k) + " is a fresh basis direction");
        }
        SymVec top = A.power(gen, (long)A.dim);
        bool zero = true;
        for (auto& c : top)
            if (!c.is_zero()) zero = false;
        C.check(zero, tag + ": generator is nilpotent of the right order");
    };

    for (long n = 2; n <= 7; ++n) {
        std::string tag = "A_" + std::to_string(n);
        Polynomial W = parse_polynomial("x^" + std::to_string(n + 1));
        PipelineResult P;
        run_pipeline(P, W, true);
        C.check(P.S.basis.size() == (size_t)n, tag + ": dimension");

        Polynomial WT = transpose_potential(W);
        QuotientRing RT = milnor_ring(WT, solve_weights(WT).q);
        C.check(RT.mu == (size_t)n, tag + ": transpose milnor number");

        FrobeniusAlgebra A =
            build_algebra(P.sys, P.res, sign_assignments(P.sys, P.res, true)[0]);
        FrobeniusAlgebra B = milnor_algebra(RT);
        C.check(A.dim == B.dim, tag + ": dimensions agree");
        nilpotency(A, tag + " A-model");
        nilpotency(B, tag + " B-model");

        MirrorVerdict V = verify_mirror(P.W, P.S, P.sys, P.res);
        C.check(V.status == MirrorStatus::Isomorphic, tag + ": structure constants match");
    }

    for (long n = 4; n <= 9; ++n) {
        std::string tag = "D_" + std::to_string(n);
        Polynomial W = parse_polynomial("x^" + std::to_string(n - 1) + " + x*y^2");
        PipelineResult P;
        run_pipeline(P, W, true);
        Polynomial WT = transpose_potential(W);
        QuotientRing RT = milnor_ring(WT, solve_weights(WT).q);
        C.check(P.S.basis.size() == RT.mu, tag + ": dimension matches the oracle");
        MirrorVerdict V = verify_mirror(P.W, P.S, P.sys, P.res);
        C.check(V.status == MirrorStatus::Isomorphic && V.dim_B == RT.mu,
                tag + ": structure constants match");
    }
    C.finish();
}
