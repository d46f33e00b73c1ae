#include "fjrw/mirror.hpp"

#include <algorithm>
#include <set>

namespace fjrw {

std::string to_string(MirrorStatus s) {
    switch (s) {
        case MirrorStatus::Isomorphic: return "isomorphic";
        case MirrorStatus::IsomorphicUpToSignChoice: return "isomorphic-up-to-sign-choice";
        case MirrorStatus::Conditional: return "conditional";
        case MirrorStatus::NoMilnorRing: return "no-milnor-ring-exists";
        case MirrorStatus::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

struct Frac {
    SymValue num, den;
};

Frac frac_mul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac frac_inv(const Frac& a) { return {a.den, a.num}; }
Frac frac_pow(Frac a, long e) {
    if (e < 0) {
        a = frac_inv(a);
        e = -e;
    }
    Frac r{SymValue(Rational(1)), SymValue(Rational(1))};
    for (long i = 0; i < e; ++i) r = frac_mul(r, a);
    return r;
}
void collect_hypotheses(const SymValue& v, std::set<std::string>& hyp) {
    if (v.is_rational()) return;
    if (v.terms.size() == 1) {
        for (auto& [n, e] : v.terms.begin()->first) hyp.insert(n + " != 0");
    } else {
        hyp.insert(v.str() + " != 0");
    }
}

} // namespace

RelationCheck check_relations(const FrobeniusAlgebra& A, const std::vector<int>& gens,
                              const std::vector<Polynomial>& relations) {
    RelationCheck out;
    size_t n = gens.size();
    std::set<std::string> hyp;
    auto rd = [&](const SymValue& v) { return A.res ? A.res->reduce(v) : v; };

    // evaluation cache for generator monomials
    std::map<Monomial, SymVec> cache;
    auto eval = [&](const Monomial& m) -> const SymVec& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        SymVec v = A.unit(A.identity);
        for (auto& [var, e] : m.exps)
            for (long i = 0; i < e; ++i) v = A.multiply(v, A.unit(gens[var]));
        return cache.emplace(m, std::move(v)).first->second;
    };

    auto is_zero_vec = [](const SymVec& v) {
        for (auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };

    struct Constraint {
        std::vector<long> k;
        Frac rho;
    };
    std::vector<Constraint> cons;

    for (auto& rel : relations) {
        std::vector<std::pair<Monomial, Rational>> ts(rel.terms.begin(), rel.terms.end());
        if (ts.empty()) continue;
        if (ts.size() == 1) {
            if (!is_zero_vec(eval(ts[0].first))) {
                out.detail = "relation " + rel.str() + " does not vanish";
                return out;
            }
            continue;
        }
        if (ts.size() != 2) {
            out.detail = "relation " + rel.str() + " has more than two terms";
            return out;
        }
        const SymVec& u1 = eval(ts[0].first);
        const SymVec& u2 = eval(ts[1].first);
        bool z1 = is_zero_vec(u1), z2 = is_zero_vec(u2);
        if (z1 && z2) continue;
        if (z1 != z2) {
            out.detail = "relation " + rel.str() + ": only one side vanishes";
            return out;
        }
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t j = i + 1; j < A.dim; ++j)
                if (!rd(u1[i] * u2[j] - u1[j] * u2[i]).is_zero()) {
                    out.detail = "relation " + rel.str() + ": images are not proportional";
                    return out;
                }
        size_t i0 = A.dim;
        for (size_t i = 0; i < A.dim; ++i) {
            if (u1[i].is_zero()) continue;
            if (i0 == A.dim || (u1[i].terms.size() == 1 && u2[i].terms.size() == 1 &&
                                u1[i0].terms.size() > 1))
                i0 = i;
            if (u1[i].terms.size() == 1 && u2[i].terms.size() == 1) {
                i0 = i;
                break;
            }
        }
        Constraint c;
        c.k.assign(n, 0);
        for (auto& [v, e] : ts[0].first.exps) c.k[v] += e;
        for (auto& [v, e] : ts[1].first.exps) c.k[v] -= e;
        c.rho = {SymValue(-ts[1].second) * u2[i0], SymValue(ts[0].second) * u1[i0]};
        cons.push_back(c);
    }

    // integer elimination on the exponent vectors
    size_t row = 0;
    for (size_t col = 0; col < n && row < cons.size(); ++col) {
        while (true) {
            size_t nz = 0, last = 0;
            long best = 0;
            for (size_t i = row; i < cons.size(); ++i) {
                if (cons[i].k[col] != 0) {
                    ++nz;
                    last = i;
                    if (best == 0 || std::abs(cons[i].k[col]) < std::abs(best)) {
                        best = cons[i].k[col];
                        std::swap(cons[i], cons[row]);
                        last = row;
                    }
                }
            }
            if (nz == 0) break;
            if (nz == 1 && cons[row].k[col] != 0) {
                ++row;
                break;
            }
            // reduce all others against the smallest entry at cons[row]
            for (size_t i = row + 1; i < cons.size(); ++i) {
                if (cons[i].k[col] == 0) continue;
                long q = cons[i].k[col] / cons[row].k[col];
                for (size_t j = 0; j < n; ++j) cons[i].k[j] -= q * cons[row].k[j];
                cons[i].rho = frac_mul(cons[i].rho, frac_pow(frac_inv(cons[row].rho), q));
            }
            (void)last;
        }
    }
    // zero rows must carry rho == 1
    for (auto& c : cons) {
        bool zero = std::all_of(c.k.begin(), c.k.end(), [](long v) { return v == 0; });
        if (zero && !rd(c.rho.num - c.rho.den).is_zero()) {
            out.detail = "scale constraints are inconsistent: " + c.rho.num.str() +
                         " != " + c.rho.den.str();
            return out;
        }
    }
    for (auto& c : cons) {
        SymValue num = rd(c.rho.num), den = rd(c.rho.den);
        if (A.res && !num.is_rational() && A.res->nonvanishing(num)) num = SymValue(Rational(1));
        if (A.res && !den.is_rational() && A.res->nonvanishing(den)) den = SymValue(Rational(1));
        collect_hypotheses(num, hyp);
        collect_hypotheses(den, hyp);
    }
    out.ok = true;
    out.hypotheses.assign(hyp.begin(), hyp.end());
    return out;
}

std::optional<bool> check_spanning(const FrobeniusAlgebra& A, const std::vector<int>& gens,
                                   const QuotientRing& R, std::set<std::string>& hypotheses) {
    std::vector<SymVec> rows;
    for (auto& m : R.monomial_basis) {
        SymVec v = A.unit(A.identity);
        for (auto& [var, e] : m.exps)
            for (long i = 0; i < e; ++i) v = A.multiply(v, A.unit(gens[var]));
        rows.push_back(v);
    }
    auto rk = symbolic_rank(rows, hypotheses);
    if (rk) return *rk == A.dim;
    return full_rank_modulo(A, rows);
}

MirrorVerdict verify_mirror(const Polynomial& W, const StateSpace& S, CorrelatorSystem& sys,
                            const Resolution& res,
                            const std::vector<std::string>& pinned_generator_labels,
                            bool all_signs) {
    MirrorVerdict V;
    Polynomial WT = transpose_potential(W);
    WeightSystem wsT = solve_weights(WT);
    QuotientRing RT = milnor_ring(WT, wsT.q);
    V.dim_A = S.basis.size();
    V.dim_B = RT.mu;
    if (V.dim_A != V.dim_B) {
        V.status = MirrorStatus::Undetermined;
        V.detail = "dimension mismatch";
        return V;
    }

    auto relations = jacobian(WT);
    auto assignments = sign_assignments(sys, res, !all_signs);
    V.sign_assignments_tested = assignments.size();

    // pinned generators: an unordered candidate set of basis labels
    std::vector<int> pinned;
    for (auto& lbl : pinned_generator_labels) {
        int found = -1;
        for (size_t i = 0; i < S.basis.size(); ++i)
            if (S.basis[i].label == lbl) found = (int)i;
        if (found < 0) throw std::runtime_error("pinned generator '" + lbl + "' not found");
        pinned.push_back(found);
    }

    size_t ok_count = 0, fail_count = 0;
    std::set<std::string> hyp_all;
    std::string first_fail;

    for (auto& asg : assignments) {
        FrobeniusAlgebra A = build_algebra(sys, res, asg);

        // candidate generator tuples, one basis element per variable of WT,
        // matched to the variables by degree
        auto map_by_degree = [&](const std::vector<int>& set) {
            std::vector<int> g(WT.nvars(), -1);
            std::vector<bool> used(set.size(), false);
            for (int vi = 0; vi < WT.nvars(); ++vi)
                for (size_t t = 0; t < set.size(); ++t)
                    if (!used[t] && A.degrees[set[t]] == 2 * wsT.q[vi]) {
                        g[vi] = set[t];
                        used[t] = true;
                        break;
                    }
            return g;
        };
        std::vector<std::vector<int>> tuples;
        if (!pinned.empty()) {
            auto g = map_by_degree(pinned);
            if (std::find(g.begin(), g.end(), -1) == g.end()) tuples.push_back(g);
        } else {
            std::vector<Rational> target;
            for (auto& q : wsT.q) target.push_back(2 * q);
            auto found = find_generators(A, WT.nvars(), target, false);
            for (auto& set : found) {
                auto g = map_by_degree(set);
                if (std::find(g.begin(), g.end(), -1) == g.end()) tuples.push_back(g);
            }
        }
        if (tuples.empty()) {
            ++fail_count;
            if (first_fail.empty()) first_fail = "no generating set found";
            continue;
        }

        bool verified = false;
        std::set<std::string> hyp_best;
        for (auto& g : tuples) {
            bool deg_ok = true;
            for (int vi = 0; vi < WT.nvars(); ++vi)
                if (A.degrees[g[vi]] != 2 * wsT.q[vi]) deg_ok = false;
            if (!deg_ok) {
                if (first_fail.empty()) first_fail = "generator degree mismatch";
                continue;
            }
            RelationCheck rc = check_relations(A, g, relations);
            if (!rc.ok) {
                if (first_fail.empty()) first_fail = rc.detail;
                continue;
            }
            std::set<std::string> hyp(rc.hypotheses.begin(), rc.hypotheses.end());
            auto sp = check_spanning(A, g, RT, hyp);
            if (!sp || !*sp) {
                if (first_fail.empty()) first_fail = "generated subalgebra does not span";
                continue;
            }
            if (!verified || hyp.size() < hyp_best.size()) hyp_best = hyp;
            verified = true;
            if (hyp_best.empty()) break;
        }
        if (!verified) {
            ++fail_count;
            continue;
        }
        ++ok_count;
        hyp_all.insert(hyp_best.begin(), hyp_best.end());
    }

    if (ok_count == 0) {
        V.status = MirrorStatus::Undetermined;
        V.detail = first_fail;
        return V;
    }
    V.hypotheses.assign(hyp_all.begin(), hyp_all.end());
    if (fail_count > 0) {
        V.status = MirrorStatus::IsomorphicUpToSignChoice;
        V.detail = std::to_string(ok_count) + "/" + std::to_string(assignments.size()) +
                   " sign assignments verify";
    } else if (!V.hypotheses.empty()) {
        V.status = MirrorStatus::Conditional;
    } else {
        V.status = MirrorStatus::Isomorphic;
    }
    return V;
}

MirrorVerdict milnor_nonexistence_check(size_t dim, const std::vector<Rational>& scaled_degrees,
                                        const Rational& D) {
    MirrorVerdict V;
    V.dim_A = dim;
    size_t n = scaled_degrees.size();
    Rational sum = 0;
    for (auto& d : scaled_degrees) sum += d;
    Rational denom = D + 2 * sum;
    if (denom == 0) {
        V.status = MirrorStatus::Undetermined;
        V.detail = "alpha undefined";
        return V;
    }
    Rational alpha = Rational((long)n) / denom;
    V.alpha = alpha;
    if (alpha <= 0) {
        V.status = MirrorStatus::NoMilnorRing;
        V.detail = "alpha not positive";
        return V;
    }
    Rational mu = 1;
    for (auto& d : scaled_degrees) {
        Rational q = d * alpha;
        if (q <= 0 || q >= 1) {
            V.status = MirrorStatus::NoMilnorRing;
            V.detail = "candidate weight outside (0,1)";
            return V;
        }
        mu *= Rational(1) / q - 1;
    }
    V.mu = mu;
    if (!is_integer(mu) || mu != Rational((long)dim)) {
        V.status = MirrorStatus::NoMilnorRing;
        V.detail = is_integer(mu) ? "mu does not match the dimension" : "mu is not an integer";
        return V;
    }
    V.status = MirrorStatus::Undetermined;
    V.detail = "no obstruction found";
    return V;
}

} // namespace fjrw
