#include "fjrw/milnor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace fjrw {

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    Rational da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    // tie-break: scan from the last variable; the larger exponent there wins
    size_t n = weights.size();
    for (size_t v = n; v-- > 0;) {
        long ea = a.exp((int)v), eb = b.exp((int)v);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero");
    const Monomial* best = nullptr;
    for (auto& [m, c] : f.terms)
        if (!best || ord.less(*best, m)) best = &m;
    return *best;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord) {
    struct LB {
        Monomial lm;
        Rational lc;
        const Polynomial* p;
    };
    std::vector<LB> lead;
    for (auto& g : basis) {
        if (g.is_zero()) continue;
        Monomial lm = leading_monomial(g, ord);
        lead.push_back({lm, g.coeff(lm), &g});
    }
    Polynomial rem(f.vars);
    Polynomial work = f;
    while (!work.is_zero()) {
        Monomial m = leading_monomial(work, ord);
        Rational c = work.coeff(m);
        bool reduced = false;
        for (auto& lb : lead) {
            if (!lb.lm.divides(m)) continue;
            Monomial q = lb.lm.divide_into(m);
            Polynomial qp(work.vars);
            qp.add_term(q, c / lb.lc);
            work = work - qp * (*lb.p);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            Polynomial mp(work.vars);
            mp.add_term(m, c);
            work = work - mp;
        }
    }
    return rem;
}

std::vector<Polynomial> groebner(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                 size_t basis_guard) {
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Monomial lm = leading_monomial(g, ord);
        basis.push_back(g * (Rational(1) / g.coeff(lm)));
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a, ord), leading_monomial(b, ord));
    });

    auto spoly = [&](const Polynomial& a, const Polynomial& b) {
        Monomial la = leading_monomial(a, ord), lb = leading_monomial(b, ord);
        Monomial l = la.lcm(lb);
        Polynomial ma(a.vars), mb(b.vars);
        ma.add_term(la.divide_into(l), Rational(1) / a.coeff(la));
        mb.add_term(lb.divide_into(l), Rational(1) / b.coeff(lb));
        return ma * a - mb * b;
    };

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Polynomial s = spoly(basis[i], basis[j]);
        Polynomial r = reduce(s, basis, ord);
        if (r.is_zero()) continue;
        Monomial lm = leading_monomial(r, ord);
        r = r * (Rational(1) / r.coeff(lm));
        for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(r);
        if (basis.size() > basis_guard)
            throw std::runtime_error("groebner: basis size guard exceeded");
    }

    // interreduce to the reduced basis
    std::vector<Polynomial> out;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial lmi = leading_monomial(basis[i], ord);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Monomial lmj = leading_monomial(basis[j], ord);
            if (lmj.divides(lmi) && !(lmi == lmj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(basis[i]);
    }
    for (size_t i = 0; i < out.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        out[i] = reduce(out[i], others, ord);
        Monomial lm = leading_monomial(out[i], ord);
        out[i] = out[i] * (Rational(1) / out[i].coeff(lm));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a, ord), leading_monomial(b, ord));
    });
    return out;
}

std::vector<Rational> QuotientRing::coords(const Polynomial& reduced) const {
    std::vector<Rational> v(monomial_basis.size(), 0);
    for (auto& [m, c] : reduced.terms) {
        int idx = basis_index(m);
        if (idx < 0) throw std::runtime_error("coords: monomial not in basis");
        v[idx] = c;
    }
    return v;
}

int QuotientRing::basis_index(const Monomial& m) const {
    for (size_t i = 0; i < monomial_basis.size(); ++i)
        if (monomial_basis[i] == m) return (int)i;
    return -1;
}

Polynomial hessian(const Polynomial& W) {
    int n = W.nvars();
    std::vector<std::vector<Polynomial>> H(n, std::vector<Polynomial>(n, Polynomial(W.vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H[i][j] = W.derivative(i).derivative(j);

    // Laplace expansion; n <= 5 in practice
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    std::function<Polynomial(int, std::vector<int>&)> det =
        [&](int row, std::vector<int>& cs) -> Polynomial {
        if (cs.empty()) {
            Polynomial one(W.vars);
            one.add_term(Monomial{}, 1);
            return one;
        }
        Polynomial acc(W.vars);
        for (size_t k = 0; k < cs.size(); ++k) {
            int c = cs[k];
            if (H[row][c].is_zero()) continue;
            std::vector<int> rest;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != k) rest.push_back(cs[t]);
            Polynomial sub = det(row + 1, rest);
            Polynomial contrib = H[row][c] * sub;
            if (k % 2 == 1) contrib = -contrib;
            acc = acc + contrib;
        }
        return acc;
    };
    return det(0, cols);
}

QuotientRing milnor_ring(const Polynomial& W, const std::vector<Rational>& weights) {
    QuotientRing R;
    R.vars = W.vars;
    R.weights = weights;
    R.order.weights = weights;
    int n = W.nvars();

    std::vector<Polynomial> gens;
    for (auto& d : jacobian(W))
        if (!d.is_zero()) gens.push_back(d);
    if (gens.empty()) {
        // quotient of the whole polynomial ring; infinite unless no variables
        if (n > 0) throw InfiniteQuotient(W.vars[0]);
    }
    R.gb = groebner(gens, R.order);

    std::vector<Monomial> lms;
    for (auto& g : R.gb) lms.push_back(leading_monomial(g, R.order));

    // finiteness: each variable needs a pure power among the leading monomials
    std::vector<long> bound(n, -1);
    for (auto& lm : lms) {
        if (lm.exps.size() == 1) {
            auto [v, e] = *lm.exps.begin();
            if (bound[v] < 0 || e < bound[v]) bound[v] = e;
        }
    }
    for (int v = 0; v < n; ++v)
        if (bound[v] < 0) throw InfiniteQuotient(W.vars[v]);

    // enumerate standard monomials
    std::vector<Monomial> basis;
    std::function<void(int, Monomial&)> rec = [&](int v, Monomial& cur) {
        if (v == n) {
            for (auto& lm : lms)
                if (lm.divides(cur)) return;
            basis.push_back(cur);
            return;
        }
        for (long e = 0; e < bound[v]; ++e) {
            cur.set(v, e);
            rec(v + 1, cur);
        }
        cur.set(v, 0);
    };
    Monomial cur;
    rec(0, cur);
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return R.order.less(a, b); });
    R.monomial_basis = basis;
    R.mu = basis.size();
    R.top_degree = basis.empty() ? Rational(0) : R.order.wdeg(basis.back());

    // mu formula check when every variable appears in W
    bool all_vars = true;
    for (int v = 0; v < n; ++v) {
        bool seen = false;
        for (auto& [m, c] : W.terms)
            if (m.exp(v) > 0) { seen = true; break; }
        if (!seen) all_vars = false;
    }
    if (all_vars) {
        Rational expect = 1;
        for (auto& q : weights) expect *= (Rational(1) / q - 1);
        if (expect != Rational((long)R.mu))
            throw std::runtime_error("milnor_ring: dimension " + std::to_string(R.mu) +
                                     " does not match the weight formula " + to_string(expect));
    }

    R.hessian_poly = hessian(W);
    R.hessian_nf = R.coords(R.nf(R.hessian_poly));
    return R;
}

Rational residue_pairing(const Polynomial& f, const Polynomial& g, const QuotientRing& R) {
    if (R.mu == 0) throw std::runtime_error("residue_pairing: empty ring");
    // top graded piece must be 1-dimensional
    size_t top_count = 0;
    for (auto& m : R.monomial_basis)
        if (R.order.wdeg(m) == R.top_degree) ++top_count;
    if (top_count != 1)
        throw std::runtime_error("residue_pairing: top graded piece not 1-dimensional");
    const Monomial& top = R.monomial_basis.back();
    Rational hc = R.hessian_nf[R.monomial_basis.size() - 1];
    if (hc == 0) throw std::runtime_error("residue_pairing: hessian reduces to zero");
    Polynomial p = R.nf(f * g);
    Rational c = p.coeff(top) / hc;
    return Rational((long)R.mu) * c;
}

} // namespace fjrw
