#include "fjrw/state_space.hpp"

#include <algorithm>

namespace fjrw {

std::vector<Monomial> sector_invariants(const Polynomial& W, const WeightSystem& ws,
                                        const DiagonalGroup& G, const PhaseVector& h,
                                        const QuotientRing& ring, const FixedLocus& fix) {
    (void)W;
    (void)ws;
    std::vector<Monomial> out;
    for (auto& m : ring.monomial_basis) {
        bool inv = true;
        for (auto& g : G.generators) {
            Rational phase = 0;
            for (size_t t = 0; t < fix.fixed.size(); ++t) {
                long mj = m.exp((int)t); // restricted index t <-> ambient fix.fixed[t]
                phase += Rational(mj + 1) * g.theta[fix.fixed[t]];
            }
            if (mod1(phase) != 0) {
                inv = false;
                break;
            }
        }
        if (inv) out.push_back(m);
    }
    return out;
}

Rational w_degree(const PhaseVector& h, const WeightSystem& ws) {
    FixedLocus F = fixed_locus(h);
    Rational d = F.dimension();
    for (size_t j = 0; j < ws.q.size(); ++j) d += 2 * (h.theta[j] - ws.q[j]);
    return d;
}

namespace {

std::string element_label(const Polynomial& restricted, const Monomial& m,
                          const std::string& sector_label) {
    if (m.is_one()) return sector_label;
    return restricted.monomial_str(m) + " " + sector_label;
}

} // namespace

StateSpace build_state_space(const Polynomial& W, const WeightSystem& ws,
                             const DiagonalGroup& G,
                             const std::optional<PhaseVector>& pinned_generator) {
    StateSpace S;
    S.W = W;
    S.ws = ws;
    S.G = G;
    S.J = grading_element(ws);
    S.chat = ws.central_charge;
    S.gen = find_cyclic_generator(G, S.J, pinned_generator);

    // sector order: powers of the generator for cyclic G, element order otherwise
    std::vector<PhaseVector> sector_order;
    if (S.gen) {
        for (long k = 0; k < (long)G.order(); ++k) sector_order.push_back(S.gen->times(k));
    } else {
        sector_order = G.elements;
    }

    for (size_t si = 0; si < sector_order.size(); ++si) {
        Sector sec;
        sec.h = sector_order[si];
        sec.k = S.gen ? (long)si : -1;
        sec.fix = fixed_locus(sec.h);
        sec.label = S.gen ? ("e_" + std::to_string(si)) : ("e_" + sec.h.str());

        std::vector<int> kill;
        for (int j = 0; j < W.nvars(); ++j)
            if (std::find(sec.fix.fixed.begin(), sec.fix.fixed.end(), j) == sec.fix.fixed.end())
                kill.push_back(j);
        Polynomial Wres = W.substitute_zero(kill).restrict_vars(sec.fix.fixed);
        sec.restricted = Wres;
        std::vector<Rational> wts;
        for (int j : sec.fix.fixed) wts.push_back(ws.q[j]);
        sec.ring = milnor_ring(Wres, wts);

        auto invs = sector_invariants(W, ws, G, sec.h, sec.ring, sec.fix);
        Rational d = w_degree(sec.h, ws);

        int sector_index = (int)S.sectors.size();
        S.sectors.push_back(sec);
        S.sector_elements.emplace_back();
        for (auto& m : invs) {
            StateBasisElement e;
            e.sector = sector_index;
            e.m = m;
            e.label = element_label(sec.restricted, m, sec.label);
            e.degree = d;
            S.sector_elements[sector_index].push_back((int)S.basis.size());
            S.basis.push_back(e);
        }
    }

    // identity: the invariant 1 in sector J
    for (size_t i = 0; i < S.basis.size(); ++i)
        if (S.basis[i].m.is_one() && S.sectors[S.basis[i].sector].h == S.J)
            S.identity = (int)i;
    if (S.identity < 0)
        throw std::runtime_error("build_state_space: identity element missing in sector J");

    // pairing
    size_t n = S.basis.size();
    S.eta.assign(n, Vector(n, 0));
    for (size_t i = 0; i < n; ++i) {
        const auto& ei = S.basis[i];
        const auto& hi = S.sectors[ei.sector].h;
        for (size_t j = i; j < n; ++j) {
            const auto& ej = S.basis[j];
            const auto& hj = S.sectors[ej.sector].h;
            if (!((hi + hj).is_identity())) continue;
            // Fix(h) = Fix(h^{-1}): both sectors share one restricted ring
            const QuotientRing& R = S.sectors[ei.sector].ring;
            Polynomial f(R.vars), g(R.vars);
            f.add_term(ei.m, 1);
            g.add_term(ej.m, 1);
            Rational v = residue_pairing(f, g, R);
            S.eta[i][j] = v;
            S.eta[j][i] = v;
        }
    }
    auto inv = inverse(S.eta);
    if (!inv) throw std::runtime_error("build_state_space: pairing is degenerate");
    S.eta_inv = *inv;
    return S;
}

std::vector<DegreeTableRow> degree_table(const StateSpace& S) {
    std::vector<DegreeTableRow> rows;
    Rational scale = (long)S.G.order();
    for (size_t si = 0; si < S.sectors.size(); ++si) {
        if (S.sector_elements[si].empty()) continue;
        DegreeTableRow row;
        row.sector_label = S.sectors[si].label;
        row.scaled_degree = S.basis[S.sector_elements[si][0]].degree * scale;
        for (int ei : S.sector_elements[si]) row.invariants.push_back(S.basis[ei].label);
        rows.push_back(row);
    }
    return rows;
}

} // namespace fjrw
