#ifndef FJRW_STATE_SPACE_HPP
#define FJRW_STATE_SPACE_HPP

#include "fjrw/linalg.hpp"
#include "fjrw/milnor.hpp"
#include "fjrw/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fjrw {

struct Sector {
    PhaseVector h;
    long k = -1; // power of the chosen generator when the group is cyclic
    FixedLocus fix;
    Polynomial restricted; // W|_{Fix h}, in the fixed variables only
    QuotientRing ring;     // Milnor ring of the restriction
    std::string label;     // "e_0", "e_1", ... or phase tuple for non-cyclic groups
};

struct StateBasisElement {
    int sector;
    Monomial m; // in the restricted ring's variables
    std::string label;
    Rational degree;
};

struct StateSpace {
    Polynomial W;
    WeightSystem ws;
    DiagonalGroup G;
    std::optional<PhaseVector> gen; // generator used for e_k labels
    PhaseVector J;
    Rational chat;
    std::vector<Sector> sectors;
    std::vector<StateBasisElement> basis;
    std::vector<std::vector<int>> sector_elements; // basis indices per sector
    Matrix eta, eta_inv;
    int identity = -1;

    Rational deg(int i) const { return basis[i].degree; }
    const PhaseVector& elem_h(int i) const { return sectors[basis[i].sector].h; }
};

// invariant monomial basis of sector h under all generators of G
std::vector<Monomial> sector_invariants(const Polynomial& W, const WeightSystem& ws,
                                        const DiagonalGroup& G, const PhaseVector& h,
                                        const QuotientRing& ring, const FixedLocus& fix);

Rational w_degree(const PhaseVector& h, const WeightSystem& ws);

StateSpace build_state_space(const Polynomial& W, const WeightSystem& ws,
                             const DiagonalGroup& G,
                             const std::optional<PhaseVector>& pinned_generator = {});

struct DegreeTableRow {
    std::string sector_label;
    Rational scaled_degree;
    std::vector<std::string> invariants;
};

// one row per sector that carries invariants, scaled by |G|
std::vector<DegreeTableRow> degree_table(const StateSpace& S);

} // namespace fjrw

#endif
