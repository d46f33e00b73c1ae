#include "fjrw/correlators.hpp"
#include "fjrw/linalg.hpp"
#include "fjrw/milnor.hpp"

#include <algorithm>
#include <set>

namespace fjrw {

namespace {

std::array<int, 3> sorted3(std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

bool point_sector(const StateSpace& S, int i) {
    return S.sectors[S.basis[i].sector].fix.dimension() == 0;
}

std::string next_symbol_name(size_t n) {
    if (n < 26) return std::string(1, (char)('a' + n));
    return "u" + std::to_string(n + 1);
}

} // namespace

LineBundleData selection_rules(const StateSpace& S, const std::vector<int>& insertions) {
    LineBundleData out;
    int k = (int)insertions.size();
    Rational degsum = 0;
    for (int i : insertions) degsum += S.deg(i);
    out.degree_admissible = (degsum == 2 * S.chat);

    size_t n = S.ws.q.size();
    out.l.resize(n);
    out.integral = true;
    for (size_t j = 0; j < n; ++j) {
        Rational lj = S.ws.q[j] * (k - 2);
        for (int i : insertions) lj -= S.elem_h(i).theta[j];
        out.l[j] = lj;
        if (!is_integer(lj)) out.integral = false;
    }
    if (out.integral) {
        out.li.resize(n);
        out.h0.resize(n);
        out.h1.resize(n);
        for (size_t j = 0; j < n; ++j) {
            long lj = (long)num(out.l[j]);
            out.li[j] = lj;
            if (lj >= 0) {
                out.h0[j] = lj + 1;
                out.h1[j] = 0;
            } else {
                out.h0[j] = 0;
                out.h1[j] = -lj - 1;
            }
        }
    }
    return out;
}

std::optional<long> witten_map_degree(const StateSpace& S, const LineBundleData& lbd) {
    if (!lbd.integral) return std::nullopt;
    size_t n = S.ws.q.size();
    std::vector<int> in, out;
    for (size_t j = 0; j < n; ++j) {
        if (lbd.h0[j] > 1 || lbd.h1[j] > 1) return std::nullopt;
        if (lbd.h0[j] == 1) in.push_back((int)j);
        if (lbd.h1[j] == 1) out.push_back((int)j);
    }
    if (in.size() != out.size()) return std::nullopt;
    size_t m = in.size();
    if (m == 0) return 1;

    // substitute 0 for all variables outside the input set into the gradient
    // components indexed by the output set; each must be a single monomial
    std::vector<int> kill;
    for (size_t j = 0; j < n; ++j)
        if (std::find(in.begin(), in.end(), (int)j) == in.end()) kill.push_back((int)j);

    Matrix A(m, Vector(m, 0));
    for (size_t r = 0; r < m; ++r) {
        Polynomial comp = S.W.derivative(out[r]).substitute_zero(kill);
        if (comp.nterms() != 1) return std::nullopt;
        const Monomial& mono = comp.terms.begin()->first;
        for (auto& [v, e] : mono.exps) {
            auto it = std::find(in.begin(), in.end(), v);
            if (it == in.end()) return std::nullopt;
            A[r][(size_t)(it - in.begin())] = e;
        }
    }
    Rational d = determinant(A);
    if (m % 2 == 1) d = -d;
    return (long)num(d);
}

SymValue CorrelatorSystem::value(std::array<int, 3> t) const {
    t = sorted3(t);
    auto it = table.find(t);
    if (it == table.end()) return SymValue(Rational(0));
    const CorrelatorValue& v = it->second.value;
    switch (v.kind) {
        case CorrelatorValue::Known: return SymValue(v.value);
        default: return SymValue::symbol(v.name);
    }
}

const CorrelatorEntry* CorrelatorSystem::find(std::array<int, 3> t) const {
    auto it = table.find(sorted3(t));
    return it == table.end() ? nullptr : &it->second;
}

CorrelatorSystem compute_correlators(const StateSpace& S) {
    CorrelatorSystem sys;
    sys.S = &S;
    int n = (int)S.basis.size();

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                if (S.deg(i) + S.deg(j) + S.deg(k) != 2 * S.chat) continue;
                std::array<int, 3> t{i, j, k};
                CorrelatorEntry e;
                e.triple = t;

                if (i == S.identity || j == S.identity || k == S.identity) {
                    int a, b;
                    if (i == S.identity) { a = j; b = k; }
                    else if (j == S.identity) { a = i; b = k; }
                    else { a = i; b = j; }
                    e.value = CorrelatorValue::known(S.eta[a][b]);
                    e.axiom = Axiom::Pairing;
                    sys.table[t] = e;
                    continue;
                }

                auto lbd = selection_rules(S, {i, j, k});
                if (!lbd.integral) {
                    e.value = CorrelatorValue::known(0);
                    e.axiom = Axiom::IntegerDegrees;
                    sys.table[t] = e;
                    continue;
                }
                bool concave = true;
                for (auto& lj : lbd.li)
                    if (lj >= 0) { concave = false; break; }
                if (concave) {
                    e.value = CorrelatorValue::known(1);
                    e.axiom = Axiom::Concavity;
                    sys.table[t] = e;
                    continue;
                }
                if (point_sector(S, i) && point_sector(S, j) && point_sector(S, k)) {
                    long index = 0;
                    for (size_t v = 0; v < lbd.h0.size(); ++v) index += lbd.h0[v] - lbd.h1[v];
                    if (index == 0) {
                        auto d = witten_map_degree(S, lbd);
                        if (d) {
                            e.value = CorrelatorValue::known(*d);
                            e.axiom = Axiom::IndexZero;
                            sys.table[t] = e;
                            continue;
                        }
                    }
                }
                CorrelatorValue v;
                v.kind = CorrelatorValue::Unknown;
                v.name = next_symbol_name(sys.unknown_names.size());
                sys.unknown_names.push_back(v.name);
                e.value = v;
                e.axiom = Axiom::None;
                sys.table[t] = e;
            }
        }
    }

    // composition relations from computable codimension-zero four-point classes
    std::set<std::pair<std::array<int, 4>, int>> seen;
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int c = b; c < n; ++c) {
                for (int d = c; d < n; ++d) {
                    if (S.deg(a) + S.deg(b) + S.deg(c) + S.deg(d) != 2 * S.chat) continue;
                    if (!(point_sector(S, a) && point_sector(S, b) && point_sector(S, c) &&
                          point_sector(S, d)))
                        continue;
                    auto lbd = selection_rules(S, {a, b, c, d});
                    if (!lbd.integral) continue;
                    long index = 0;
                    for (size_t v = 0; v < lbd.h0.size(); ++v) index += lbd.h0[v] - lbd.h1[v];
                    if (index != 0) continue;
                    auto dd = witten_map_degree(S, lbd);
                    if (!dd) continue;
                    long lambda = *dd;

                    std::array<int, 4> ins{a, b, c, d};
                    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (int sp = 0; sp < 3; ++sp) {
                        int p1 = ins[splits[sp][0]], p2 = ins[splits[sp][1]];
                        int p3 = ins[splits[sp][2]], p4 = ins[splits[sp][3]];
                        SymValue rhs;
                        for (int bi = 0; bi < n; ++bi) {
                            for (int di = 0; di < n; ++di) {
                                if (S.eta_inv[bi][di] == 0) continue;
                                SymValue left = sys.value({p1, p2, bi});
                                if (left.is_zero()) continue;
                                SymValue right = sys.value({di, p3, p4});
                                if (right.is_zero()) continue;
                                rhs = rhs + left * SymValue(S.eta_inv[bi][di]) * right;
                            }
                        }
                        SymValue eq = SymValue(Rational(lambda)) - rhs;
                        if (eq.is_zero()) continue;
                        if (eq.is_rational())
                            throw std::runtime_error(
                                "composition relation inconsistent: " + eq.str());
                        if (seen.insert({ins, sp}).second)
                            sys.relations.push_back({ins, lambda, sp, eq});
                    }
                }
            }
        }
    }
    return sys;
}

namespace {

// reduce powers of sign symbols using s^2 = square
SymValue normalize_signs(const SymValue& v, const std::map<std::string, Rational>& squares) {
    SymValue r;
    for (auto& [m, c] : v.terms) {
        SymValue t(c);
        for (auto& [name, e] : m) {
            auto it = squares.find(name);
            int rem = e;
            Rational factor = 1;
            if (it != squares.end()) {
                while (rem >= 2) {
                    factor *= it->second;
                    rem -= 2;
                }
            }
            SymValue s(factor);
            if (rem > 0) {
                SymValue sym;
                SymValue::Mono mm;
                mm[name] = rem;
                sym.terms[mm] = 1;
                s = s * sym;
            }
            t = t * s;
        }
        r = r + t;
    }
    return r;
}

Polynomial sym_to_poly(const SymValue& v, const std::vector<std::string>& vars) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = (int)i;
    Polynomial p(vars);
    for (auto& [m, c] : v.terms) {
        Monomial mono;
        for (auto& [s, e] : m) mono.set(index.at(s), e);
        p.add_term(mono, c);
    }
    return p;
}

SymValue poly_to_sym(const Polynomial& p, const std::vector<std::string>& vars) {
    SymValue v;
    for (auto& [m, c] : p.terms) {
        SymValue::Mono mm;
        for (auto& [var, e] : m.exps)
            if (e != 0) mm[vars[var]] = (int)e;
        v = v + [&] {
            SymValue t;
            t.terms[mm] = c;
            return t;
        }();
    }
    return v;
}

} // namespace

SymValue Resolution::reduce(const SymValue& v) const {
    if (residual_gb.empty() || v.is_rational()) return v;
    std::vector<std::string> vars = residual_vars;
    for (auto& s : v.symbols())
        if (std::find(vars.begin(), vars.end(), s) == vars.end()) vars.push_back(s);
    MonomialOrder ord{std::vector<Rational>(vars.size(), 1)};
    Polynomial r = fjrw::reduce(sym_to_poly(v, vars), residual_gb, ord);
    return poly_to_sym(r, vars);
}

bool Resolution::nonvanishing(const SymValue& v) const {
    SymValue r = reduce(v);
    if (r.is_rational()) return r.rational() != 0;
    if (residual_gb.empty()) return false;
    // v has no zero on the solution set iff the extended ideal is the unit
    // ideal, i.e. 1 lies in the ideal generated by the relations and v
    std::vector<std::string> vars = residual_vars;
    for (auto& s : r.symbols())
        if (std::find(vars.begin(), vars.end(), s) == vars.end()) vars.push_back(s);
    MonomialOrder ord{std::vector<Rational>(vars.size(), 1)};
    std::vector<Polynomial> gens = residual_gb;
    gens.push_back(sym_to_poly(r, vars));
    try {
        auto gb = groebner(gens, ord);
        for (auto& g : gb)
            if (!g.is_zero() && g.nterms() == 1 && g.terms.begin()->first.is_one()) return true;
    } catch (const std::runtime_error&) {
        return false;
    }
    return false;
}

Resolution resolve_unknowns(CorrelatorSystem& sys) {
    Resolution res;
    std::vector<SymValue> rels;
    for (auto& r : sys.relations) rels.push_back(r.equation);

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& rel : rels) {
            SymValue r = normalize_signs(rel.substitute_all(res.derived), res.sign_square);
            if (r.is_zero()) continue;
            if (r.is_rational())
                throw std::runtime_error("relation system inconsistent: " + r.str());

            // symbols that are not sign symbols
            std::vector<std::string> syms;
            for (auto& s : r.symbols())
                if (!res.sign_square.count(s)) syms.push_back(s);
            if (syms.empty()) continue; // pure sign-symbol relation, handled by enumeration

            // try to isolate one symbol that appears linearly in a single term
            // with a rational coefficient
            bool solved = false;
            for (auto it = syms.rbegin(); it != syms.rend() && !solved; ++it) {
                const std::string& u = *it;
                Rational coeff = 0;
                SymValue rest;
                bool ok = true;
                for (auto& [m, c] : r.terms) {
                    auto mit = m.find(u);
                    if (mit == m.end()) {
                        SymValue t;
                        t.terms[m] = c;
                        rest = rest + t;
                    } else if (mit->second == 1 && m.size() == 1) {
                        coeff += c;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if (!ok || coeff == 0) continue;
                res.derived[u] = rest * SymValue(Rational(-1) / coeff);
                solved = true;
                changed = true;
            }
            if (solved) continue;

            // pure quadratic in one symbol: c*u^2 + d = 0 with d rational
            if (syms.size() == 1) {
                const std::string& u = syms[0];
                Rational coeff = 0, rest = 0;
                bool ok = true;
                for (auto& [m, c] : r.terms) {
                    if (m.empty()) rest += c;
                    else if (m.size() == 1 && m.count(u) && m.at(u) == 2) coeff += c;
                    else ok = false;
                }
                if (ok && coeff != 0) {
                    res.sign_square[u] = -rest / coeff;
                    changed = true;
                }
            }
        }
    }

    // leftovers: free symbols and residual constraints among them
    std::set<std::string> free;
    for (auto& name : sys.unknown_names)
        if (!res.derived.count(name) && !res.sign_square.count(name)) free.insert(name);
    res.free_symbols.assign(free.begin(), free.end());
    for (auto& rel : rels) {
        SymValue r = normalize_signs(rel.substitute_all(res.derived), res.sign_square);
        if (r.is_zero()) continue;
        bool pure_sign = true;
        for (auto& s : r.symbols())
            if (!res.sign_square.count(s)) pure_sign = false;
        if (!pure_sign) res.residual.push_back(r);
    }

    // Groebner basis for the ideal of residual relations that involve only
    // free symbols; sign-symbol mixtures are left out
    std::set<std::string> vars;
    std::vector<const SymValue*> ideal;
    for (auto& r : res.residual) {
        bool pure_free = true;
        for (auto& s : r.symbols())
            if (!free.count(s)) pure_free = false;
        if (!pure_free) continue;
        ideal.push_back(&r);
        for (auto& s : r.symbols()) vars.insert(s);
    }
    if (!ideal.empty()) {
        res.residual_vars.assign(vars.begin(), vars.end());
        MonomialOrder ord{std::vector<Rational>(res.residual_vars.size(), 1)};
        std::vector<Polynomial> gens;
        for (auto* r : ideal) gens.push_back(sym_to_poly(*r, res.residual_vars));
        try {
            res.residual_gb = groebner(gens, ord);
        } catch (const std::runtime_error&) {
            res.residual_gb.clear();
        }
    }
    return res;
}

std::vector<std::map<std::string, Rational>> sign_assignments(const CorrelatorSystem& sys,
                                                              const Resolution& res,
                                                              bool first_only) {
    std::vector<std::string> names;
    std::vector<Rational> roots;
    for (auto& [name, sq] : res.sign_square) {
        auto r = rational_root(sq, 2);
        if (!r) throw std::runtime_error("sign symbol " + name + " has irrational square " +
                                         to_string(sq));
        names.push_back(name);
        roots.push_back(*r);
    }
    std::vector<std::map<std::string, Rational>> out;
    size_t count = (size_t)1 << names.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::map<std::string, Rational> asg;
        for (size_t i = 0; i < names.size(); ++i)
            asg[names[i]] = (mask >> i) & 1 ? -roots[i] : roots[i];
        // consistency: every relation without free symbols must vanish
        std::set<std::string> free(res.free_symbols.begin(), res.free_symbols.end());
        bool ok = true;
        for (auto& rel : sys.relations) {
            SymValue r = rel.equation.substitute_all(res.derived);
            for (auto& [n2, v2] : asg) r = r.substitute(n2, SymValue(v2));
            if (r.is_zero()) continue;
            bool has_free = false;
            for (auto& s : r.symbols())
                if (free.count(s)) has_free = true;
            if (!has_free) { ok = false; break; }
        }
        if (!ok) continue;
        out.push_back(asg);
        if (first_only) break;
    }
    if (out.empty() && count > 0 && !names.empty())
        throw std::runtime_error("no consistent sign assignment");
    if (out.empty()) out.push_back({});
    return out;
}

SymValue resolved_value(const CorrelatorSystem& sys, const Resolution& res,
                        const std::map<std::string, Rational>& assignment,
                        std::array<int, 3> t) {
    SymValue v = sys.value(t).substitute_all(res.derived);
    for (auto& [n, r] : assignment) v = v.substitute(n, SymValue(r));
    return v;
}

} // namespace fjrw
