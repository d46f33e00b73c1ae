#ifndef FJRW_SYMMETRY_HPP
#define FJRW_SYMMETRY_HPP

#include "fjrw/poly.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fjrw {

// Diagonal symmetry as rational phases in [0,1) per variable.
struct PhaseVector {
    std::vector<Rational> theta;

    size_t size() const { return theta.size(); }
    bool is_identity() const {
        for (auto& t : theta)
            if (t != 0) return false;
        return true;
    }
    PhaseVector operator+(const PhaseVector& o) const;
    PhaseVector operator-() const;
    PhaseVector times(long k) const;
    long order() const; // lcm of reduced denominators
    bool operator==(const PhaseVector& o) const { return theta == o.theta; }
    bool operator<(const PhaseVector& o) const { return theta < o.theta; }
    std::string str() const; // "(1/3, 2/21)"
};

struct FixedLocus {
    std::vector<int> fixed; // variable indices with theta = 0
    int dimension() const { return (int)fixed.size(); }
};

struct DiagonalGroup {
    std::vector<PhaseVector> generators;
    std::vector<PhaseVector> elements; // sorted, identity first
    size_t order() const { return elements.size(); }
    bool contains(const PhaseVector& h) const;
    bool is_cyclic() const;
};

DiagonalGroup group_from_generators(const std::vector<PhaseVector>& gens);

// All diagonal symmetries of W; requires square invertible exponent matrix.
DiagonalGroup maximal_symmetry_group(const Polynomial& W);

PhaseVector grading_element(const WeightSystem& ws);

// Returns the pinned generator when supplied (verified to generate G),
// else J when <J> = G, else the lexicographically least generator of a
// cyclic G; nullopt when G is not cyclic.
std::optional<PhaseVector> find_cyclic_generator(const DiagonalGroup& G, const PhaseVector& J,
                                                 const std::optional<PhaseVector>& pinned = {});

FixedLocus fixed_locus(const PhaseVector& h);

// subgroup generated by h
std::vector<PhaseVector> cyclic_subgroup(const PhaseVector& h);

} // namespace fjrw

#endif
