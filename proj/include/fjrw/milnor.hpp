#ifndef FJRW_MILNOR_HPP
#define FJRW_MILNOR_HPP

#include "fjrw/poly.hpp"

#include <vector>

namespace fjrw {

// Weighted-degree order; ties broken lexicographically with later variables
// dominating, which matches the conventional quotient bases.
struct MonomialOrder {
    std::vector<Rational> weights;

    Rational wdeg(const Monomial& m) const {
        Rational d = 0;
        for (auto& [v, e] : m.exps) d += weights[v] * e;
        return d;
    }
    // -1, 0, +1 for a < b, a == b, a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

// leading monomial/coefficient under the order
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord);

struct InfiniteQuotient : std::runtime_error {
    std::string witness_variable;
    InfiniteQuotient(const std::string& var)
        : std::runtime_error("quotient is infinite dimensional: all powers of " + var +
                             " are standard monomials"),
          witness_variable(var) {}
};

std::vector<Polynomial> groebner(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                 size_t basis_guard = 500);

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord);

struct QuotientRing {
    std::vector<std::string> vars;
    std::vector<Rational> weights;
    MonomialOrder order;
    std::vector<Polynomial> gb;
    std::vector<Monomial> monomial_basis; // sorted by (weighted degree, lex)
    size_t mu = 0;
    Polynomial hessian_poly;       // hess(W), unreduced
    std::vector<Rational> hessian_nf; // coordinates of hess(W) in monomial_basis
    Rational top_degree;           // weighted degree of the last basis monomial

    Polynomial nf(const Polynomial& f) const { return reduce(f, gb, order); }
    std::vector<Rational> coords(const Polynomial& reduced) const;
    int basis_index(const Monomial& m) const;
};

// W in the given variables with the given weights (one per variable).
QuotientRing milnor_ring(const Polynomial& W, const std::vector<Rational>& weights);

Polynomial hessian(const Polynomial& W);

Rational residue_pairing(const Polynomial& f, const Polynomial& g, const QuotientRing& R);

} // namespace fjrw

#endif
