#include "fjrw/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fjrw {

bool FrobeniusAlgebra::all_known() const {
    for (auto& row : prod)
        for (auto& v : row)
            for (auto& c : v)
                if (!c.is_rational()) return false;
    return true;
}

SymVec FrobeniusAlgebra::unit(int i) const {
    SymVec v(dim);
    v[i] = SymValue(Rational(1));
    return v;
}

SymVec FrobeniusAlgebra::multiply(const SymVec& a, const SymVec& b) const {
    SymVec out(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            SymValue c = a[i] * b[j];
            for (size_t t = 0; t < dim; ++t) {
                if (prod[i][j][t].is_zero()) continue;
                out[t] = out[t] + c * prod[i][j][t];
            }
        }
    }
    if (res && res->has_residual())
        for (auto& c : out) c = res->reduce(c);
    return out;
}

SymVec FrobeniusAlgebra::power(int gen, long e) const {
    SymVec acc = unit(identity);
    for (long i = 0; i < e; ++i) acc = multiply(acc, unit(gen));
    return acc;
}

FrobeniusAlgebra build_algebra(const CorrelatorSystem& sys, const Resolution& res,
                               const std::map<std::string, Rational>& assignment) {
    const StateSpace& S = *sys.S;
    FrobeniusAlgebra A;
    A.dim = S.basis.size();
    A.identity = S.identity;
    A.eta = S.eta;
    A.eta_inv = S.eta_inv;
    for (auto& e : S.basis) {
        A.degrees.push_back(e.degree);
        A.labels.push_back(e.label);
    }
    size_t n = A.dim;
    A.prod.assign(n, std::vector<SymVec>(n, SymVec(n)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            SymVec v(n);
            for (size_t a = 0; a < n; ++a) {
                SymValue c = resolved_value(sys, res, assignment, {(int)i, (int)j, (int)a});
                if (c.is_zero()) continue;
                for (size_t b = 0; b < n; ++b) {
                    if (S.eta_inv[a][b] == 0) continue;
                    v[b] = v[b] + c * SymValue(S.eta_inv[a][b]);
                }
            }
            if (res.has_residual())
                for (auto& c : v) c = res.reduce(c);
            A.prod[i][j] = v;
            A.prod[j][i] = v;
        }
    }
    if (res.has_residual()) A.res = &res;
    return A;
}

FrobeniusAlgebra milnor_algebra(const QuotientRing& R) {
    FrobeniusAlgebra A;
    size_t n = R.mu;
    A.dim = n;
    for (size_t i = 0; i < n; ++i) {
        A.degrees.push_back(2 * R.order.wdeg(R.monomial_basis[i]));
        Polynomial p(R.vars);
        p.add_term(R.monomial_basis[i], 1);
        A.labels.push_back(p.monomial_str(R.monomial_basis[i]));
        if (R.monomial_basis[i].is_one()) A.identity = (int)i;
    }
    A.eta.assign(n, Vector(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            Polynomial f(R.vars), g(R.vars);
            f.add_term(R.monomial_basis[i], 1);
            g.add_term(R.monomial_basis[j], 1);
            Rational v = residue_pairing(f, g, R);
            A.eta[i][j] = v;
            A.eta[j][i] = v;
        }
    }
    auto inv = inverse(A.eta);
    if (!inv) throw std::runtime_error("milnor_algebra: degenerate pairing");
    A.eta_inv = *inv;
    A.prod.assign(n, std::vector<SymVec>(n, SymVec(n)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            Polynomial f(R.vars);
            Monomial m = R.monomial_basis[i] * R.monomial_basis[j];
            f.add_term(m, 1);
            auto coords = R.coords(R.nf(f));
            SymVec v(n);
            for (size_t t = 0; t < n; ++t)
                if (coords[t] != 0) v[t] = SymValue(coords[t]);
            A.prod[i][j] = v;
            A.prod[j][i] = v;
        }
    }
    return A;
}

FrobeniusReport check_frobenius(const FrobeniusAlgebra& A) {
    FrobeniusReport rep;
    size_t n = A.dim;
    // identity
    for (size_t i = 0; i < n; ++i) {
        SymVec v = A.multiply(A.unit(A.identity), A.unit((int)i));
        for (size_t t = 0; t < n; ++t) {
            SymValue want = t == i ? SymValue(Rational(1)) : SymValue();
            if (!(v[t] == want)) {
                rep.ok = false;
                rep.witness = "identity fails on " + A.labels[i];
                return rep;
            }
        }
    }
    auto pair_with = [&](const SymVec& v, size_t k) {
        SymValue s;
        for (size_t t = 0; t < n; ++t) {
            if (v[t].is_zero() || A.eta[t][k] == 0) continue;
            s = s + v[t] * SymValue(A.eta[t][k]);
        }
        return s;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            SymVec ij = A.prod[i][j];
            for (size_t k = j; k < n; ++k) {
                SymVec left = A.multiply(ij, A.unit((int)k));
                SymVec right = A.multiply(A.unit((int)i), A.prod[j][k]);
                for (size_t t = 0; t < n; ++t) {
                    if (!(left[t] == right[t])) {
                        rep.ok = false;
                        rep.witness = "associativity fails at (" + A.labels[i] + ", " +
                                      A.labels[j] + ", " + A.labels[k] + ")";
                        return rep;
                    }
                }
                if (!(pair_with(ij, k) == pair_with(A.prod[j][k], i))) {
                    rep.ok = false;
                    rep.witness = "invariance fails at (" + A.labels[i] + ", " + A.labels[j] +
                                  ", " + A.labels[k] + ")";
                    return rep;
                }
            }
        }
    }
    return rep;
}

FrobeniusAlgebra tensor_product(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B) {
    FrobeniusAlgebra T;
    T.res = A.res ? A.res : B.res;
    size_t na = A.dim, nb = B.dim, n = na * nb;
    T.dim = n;
    auto idx = [&](size_t i, size_t j) { return i * nb + j; };
    T.identity = (int)idx(A.identity, B.identity);
    T.degrees.resize(n);
    T.labels.resize(n);
    for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) {
            T.degrees[idx(i, j)] = A.degrees[i] + B.degrees[j];
            T.labels[idx(i, j)] = A.labels[i] + " (x) " + B.labels[j];
        }
    }
    T.eta.assign(n, Vector(n, 0));
    T.eta_inv.assign(n, Vector(n, 0));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t k = 0; k < na; ++k)
                for (size_t l = 0; l < nb; ++l) {
                    T.eta[idx(i, j)][idx(k, l)] = A.eta[i][k] * B.eta[j][l];
                    T.eta_inv[idx(i, j)][idx(k, l)] = A.eta_inv[i][k] * B.eta_inv[j][l];
                }
    T.prod.assign(n, std::vector<SymVec>(n, SymVec(n)));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t k = 0; k < na; ++k)
                for (size_t l = 0; l < nb; ++l) {
                    SymVec v(n);
                    for (size_t s = 0; s < na; ++s) {
                        if (A.prod[i][k][s].is_zero()) continue;
                        for (size_t t = 0; t < nb; ++t) {
                            if (B.prod[j][l][t].is_zero()) continue;
                            v[idx(s, t)] = A.prod[i][k][s] * B.prod[j][l][t];
                        }
                    }
                    T.prod[idx(i, j)][idx(k, l)] = v;
                }
    return T;
}

std::optional<size_t> symbolic_rank(std::vector<SymVec> rows, std::set<std::string>& hypotheses) {
    if (rows.empty()) return 0;
    size_t m = rows.size(), n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        // choose a pivot: single-term entry, rational preferred
        size_t best = m;
        int best_quality = -1;
        for (size_t i = r; i < m; ++i) {
            const SymValue& e = rows[i][col];
            if (e.is_zero()) continue;
            int quality;
            if (e.is_rational()) quality = 2;
            else if (e.terms.size() == 1) quality = 1;
            else quality = 0;
            if (quality > best_quality) {
                best_quality = quality;
                best = i;
            }
        }
        if (best == m) continue;
        if (best_quality == 0) return std::nullopt; // only multi-term candidates
        std::swap(rows[best], rows[r]);
        const SymValue pivot = rows[r][col];
        if (!pivot.is_rational())
            for (auto& [mono, c] : pivot.terms)
                for (auto& [s, e] : mono) hypotheses.insert(s + " != 0");
        for (size_t i = r + 1; i < m; ++i) {
            if (rows[i][col].is_zero()) continue;
            SymValue f = rows[i][col];
            for (size_t j = col; j < n; ++j)
                rows[i][j] = pivot * rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    return r;
}

size_t rank_lower_bound(std::vector<SymVec> rows) {
    if (rows.empty()) return 0;
    size_t m = rows.size(), n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        size_t best = m;
        int best_quality = -1;
        for (size_t i = r; i < m; ++i) {
            const SymValue& e = rows[i][col];
            if (e.is_zero()) continue;
            int quality = e.is_rational() ? 2 : e.terms.size() == 1 ? 1 : 0;
            if (quality > best_quality) {
                best_quality = quality;
                best = i;
            }
        }
        // columns with only multi-term candidates are skipped: the result is a
        // lower bound for the rank
        if (best == m || best_quality == 0) continue;
        std::swap(rows[best], rows[r]);
        const SymValue pivot = rows[r][col];
        for (size_t i = r + 1; i < m; ++i) {
            if (rows[i][col].is_zero()) continue;
            SymValue f = rows[i][col];
            for (size_t j = col; j < n; ++j) rows[i][j] = pivot * rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

// determinant by Laplace expansion, reduced modulo the residual ideal
SymValue small_det(const FrobeniusAlgebra& A, const std::vector<SymVec>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    SymValue d;
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<SymVec> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.push_back(SymVec(m[r].begin() + 1, m[r].end()));
        }
        SymValue t = m[i][0] * small_det(A, minor);
        d = i % 2 == 0 ? d + t : d - t;
    }
    return A.res ? A.res->reduce(d) : d;
}

} // namespace

std::optional<bool> full_rank_modulo(const FrobeniusAlgebra& A, std::vector<SymVec> rows) {
    if (!A.res) return std::nullopt;
    size_t m = rows.size();
    size_t n = m == 0 ? 0 : rows[0].size();
    if (m < n) return false;
    std::vector<bool> used_col(n, false);
    size_t r = 0;
    bool progress = true;
    while (progress && r < m) {
        progress = false;
        for (size_t col = 0; col < n && !progress; ++col) {
            if (used_col[col]) continue;
            size_t pick = m;
            for (size_t i = r; i < m; ++i)
                if (!rows[i][col].is_zero() && rows[i][col].is_rational()) {
                    pick = i;
                    break;
                }
            if (pick == m) continue;
            std::swap(rows[pick], rows[r]);
            const SymValue pivot = rows[r][col];
            for (size_t i = r + 1; i < m; ++i) {
                if (rows[i][col].is_zero()) continue;
                SymValue f = rows[i][col];
                for (size_t j = 0; j < n; ++j) {
                    if (used_col[j] || j == col) continue;
                    rows[i][j] = A.res->reduce(pivot * rows[i][j] - f * rows[r][j]);
                }
                rows[i][col] = SymValue();
            }
            used_col[col] = true;
            ++r;
            progress = true;
        }
    }
    size_t pc = 0;
    for (size_t j = 0; j < n; ++j)
        if (used_col[j]) ++pc;
    if (pc == n) return true;
    size_t k = n - pc;
    if (k > 4) return std::nullopt;
    std::vector<size_t> cols;
    for (size_t j = 0; j < n; ++j)
        if (!used_col[j]) cols.push_back(j);
    // stuck rows with a nonzero entry in the leftover columns
    std::vector<size_t> live;
    for (size_t i = r; i < m; ++i) {
        bool nz = false;
        for (size_t j : cols)
            if (!rows[i][j].is_zero()) nz = true;
        if (nz) live.push_back(i);
    }
    if (live.size() < k) return false;
    // a provably nonvanishing k x k minor certifies full rank on the whole
    // solution set
    std::vector<size_t> pick(k);
    std::function<std::optional<bool>(size_t, size_t, size_t&)> rec =
        [&](size_t pos, size_t start, size_t& budget) -> std::optional<bool> {
        if (pos == k) {
            std::vector<SymVec> block(k, SymVec(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) block[i][j] = rows[pick[i]][cols[j]];
            SymValue d = small_det(A, block);
            if (d.is_rational()) return d.rational() != 0 ? std::optional<bool>(true)
                                                          : std::optional<bool>();
            if (A.res->nonvanishing(d)) return true;
            return std::nullopt;
        }
        for (size_t i = start; i < live.size(); ++i) {
            if (budget == 0) return std::nullopt;
            --budget;
            pick[pos] = live[i];
            auto got = rec(pos + 1, i + 1, budget);
            if (got && *got) return got;
        }
        return std::nullopt;
    };
    size_t budget = 200;
    auto got = rec(0, 0, budget);
    if (got && *got) return true;
    if (live.size() == k && m == n) {
        // square case: the single minor is the determinant up to pivots
        std::vector<SymVec> block(k, SymVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) block[i][j] = rows[live[i]][cols[j]];
        if (small_det(A, block).is_zero()) return false;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> find_generators(
    const FrobeniusAlgebra& A, size_t max_cardinality,
    const std::optional<std::vector<Rational>>& target_degrees, bool first_only) {
    // candidates: non-identity basis elements, ordered by (degree, index)
    std::vector<int> cands;
    for (size_t i = 0; i < A.dim; ++i)
        if ((int)i != A.identity) cands.push_back((int)i);
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
        if (A.degrees[a] != A.degrees[b]) return A.degrees[a] < A.degrees[b];
        return a < b;
    });

    auto row_key = [](const SymVec& v) {
        std::string k;
        for (auto& c : v) {
            k += c.str();
            k += '|';
        }
        return k;
    };
    auto spans = [&](const std::vector<int>& gens) {
        std::vector<SymVec> vecs = {A.unit(A.identity)};
        std::set<std::string> seen = {row_key(vecs[0])};
        size_t old_rank = 0;
        int stall = 0;
        for (size_t round = 0; round < A.dim; ++round) {
            std::vector<SymVec> next = vecs;
            for (auto& v : vecs) {
                for (int g : gens) {
                    SymVec p = A.multiply(v, A.unit(g));
                    bool zero = true;
                    for (auto& c : p)
                        if (!c.is_zero()) zero = false;
                    if (zero) continue;
                    if (seen.insert(row_key(p)).second) next.push_back(std::move(p));
                }
            }
            size_t rk = rank_lower_bound(next);
            if (rk == A.dim) return true;
            if (rk == old_rank) {
                auto full = full_rank_modulo(A, next);
                if (full && *full) return true;
                if (++stall >= 2) return false;
            } else {
                stall = 0;
            }
            old_rank = rk;
            vecs = std::move(next);
        }
        return false;
    };

    std::vector<std::vector<int>> out;
    for (size_t card = 1; card <= max_cardinality; ++card) {
        std::vector<int> pick(card);
        std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
            if (first_only && !out.empty()) return;
            if (pos == card) {
                if (target_degrees) {
                    std::vector<Rational> ds;
                    for (int g : pick) ds.push_back(A.degrees[g]);
                    std::vector<Rational> want = *target_degrees;
                    std::sort(ds.begin(), ds.end());
                    std::sort(want.begin(), want.end());
                    if (ds != want) return;
                }
                if (spans(pick)) out.push_back(pick);
                return;
            }
            for (size_t i = start; i < cands.size(); ++i) {
                pick[pos] = cands[i];
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
        if (!out.empty()) break;
    }
    return out;
}

} // namespace fjrw
