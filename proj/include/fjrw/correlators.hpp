#ifndef FJRW_CORRELATORS_HPP
#define FJRW_CORRELATORS_HPP

#include "fjrw/state_space.hpp"
#include "fjrw/value.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace fjrw {

enum class Axiom { Pairing, Concavity, IndexZero, IntegerDegrees, None };

struct LineBundleData {
    bool degree_admissible = false; // sum of W-degrees equals 2c
    bool integral = false;          // all l_j integers
    std::vector<Rational> l;
    std::vector<long> li;     // valid when integral
    std::vector<long> h0, h1; // valid when integral
};

struct CorrelatorValue {
    enum Kind { Known, Sign, Unknown } kind = Known;
    Rational value;  // Known
    std::string name;   // Sign / Unknown
    Rational square; // Sign: value^2
    static CorrelatorValue known(const Rational& v) {
        CorrelatorValue c;
        c.kind = Known;
        c.value = v;
        return c;
    }
};

struct CorrelatorEntry {
    std::array<int, 3> triple;
    CorrelatorValue value;
    Axiom axiom = Axiom::None;
};

struct FourPointRelation {
    std::array<int, 4> insertions;
    long lambda;  // Witten-map degree of the four-point class
    int splitting; // 0,1,2
    SymValue equation; // == 0
};

struct CorrelatorSystem {
    const StateSpace* S = nullptr;
    std::map<std::array<int, 3>, CorrelatorEntry> table;
    std::vector<FourPointRelation> relations;
    std::vector<std::string> unknown_names; // in discovery order

    // symbolic value of a correlator; zero when inadmissible
    SymValue value(std::array<int, 3> t) const;
    const CorrelatorEntry* find(std::array<int, 3> t) const;
};

LineBundleData selection_rules(const StateSpace& S, const std::vector<int>& insertions);

// Witten-map degree for an index-zero configuration; nullopt when the
// configuration is outside the supported rank-<=1 shape.
std::optional<long> witten_map_degree(const StateSpace& S, const LineBundleData& lbd);

CorrelatorSystem compute_correlators(const StateSpace& S);

struct Resolution {
    std::map<std::string, SymValue> derived;     // symbol -> expression
    std::map<std::string, Rational> sign_square; // sign symbol -> its square
    std::vector<std::string> free_symbols;       // left symbolic
    std::vector<SymValue> residual;              // relations among free symbols (normally empty)

    // Groebner basis of the ideal generated by the residual relations, used to
    // decide identities that hold on the whole solution set
    std::vector<std::string> residual_vars;
    std::vector<Polynomial> residual_gb;

    bool has_residual() const { return !residual_gb.empty(); }
    // normal form modulo the residual ideal
    SymValue reduce(const SymValue& v) const;
    // true when v provably has no zero on the solution set of the residual ideal
    bool nonvanishing(const SymValue& v) const;
};

Resolution resolve_unknowns(CorrelatorSystem& sys);

// all consistent sign assignments, positive branch first
std::vector<std::map<std::string, Rational>> sign_assignments(const CorrelatorSystem& sys,
                                                              const Resolution& res,
                                                              bool first_only = false);

// fully-substituted value of a correlator under a resolution + assignment
SymValue resolved_value(const CorrelatorSystem& sys, const Resolution& res,
                        const std::map<std::string, Rational>& assignment,
                        std::array<int, 3> t);

} // namespace fjrw

#endif
