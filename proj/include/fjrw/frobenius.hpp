#ifndef FJRW_FROBENIUS_HPP
#define FJRW_FROBENIUS_HPP

#include "fjrw/correlators.hpp"
#include "fjrw/milnor.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fjrw {

using SymVec = std::vector<SymValue>;

struct FrobeniusAlgebra {
    size_t dim = 0;
    int identity = -1;
    std::vector<Rational> degrees;
    std::vector<std::string> labels;
    Matrix eta, eta_inv;
    // prod[i][j] = coordinates of basis_i * basis_j
    std::vector<std::vector<SymVec>> prod;
    // products are normalized modulo the residual relation ideal when set;
    // the resolution must outlive the algebra
    const Resolution* res = nullptr;

    bool all_known() const;
    SymVec unit(int i) const;
    SymVec multiply(const SymVec& a, const SymVec& b) const;
    SymVec power(int gen, long e) const;
};

FrobeniusAlgebra build_algebra(const CorrelatorSystem& sys, const Resolution& res,
                               const std::map<std::string, Rational>& assignment);

// B-model: Milnor ring with residue pairing; degrees are doubled weights so
// they line up with A-model W-degrees.
FrobeniusAlgebra milnor_algebra(const QuotientRing& R);

struct FrobeniusReport {
    bool ok = true;
    std::string witness;
};

// associativity over all triples and invariance <r*s,t> = <r,s*t>
FrobeniusReport check_frobenius(const FrobeniusAlgebra& A);

FrobeniusAlgebra tensor_product(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B);

// minimal generating sets, searched in increasing cardinality; basis indices.
// target_degrees, when given, restricts candidates to those exact degrees.
std::vector<std::vector<int>> find_generators(
    const FrobeniusAlgebra& A, size_t max_cardinality,
    const std::optional<std::vector<Rational>>& target_degrees = {}, bool first_only = true);

// rank of a SymValue matrix; pivots must be single terms whose symbols are all
// hypothesized nonzero (collected into hypotheses). nullopt when stuck.
std::optional<size_t> symbolic_rank(std::vector<SymVec> rows,
                                    std::set<std::string>& hypotheses);

// rank after discarding columns whose candidate pivots all have several terms
size_t rank_lower_bound(std::vector<SymVec> rows);

// full-column-rank test that holds on the whole solution set of the residual
// relation ideal; requires A.res. nullopt when undecided.
std::optional<bool> full_rank_modulo(const FrobeniusAlgebra& A, std::vector<SymVec> rows);

} // namespace fjrw

#endif
