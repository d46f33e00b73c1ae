#ifndef FJRW_MIRROR_HPP
#define FJRW_MIRROR_HPP

#include "fjrw/frobenius.hpp"
#include "fjrw/state_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fjrw {

enum class MirrorStatus {
    Isomorphic,
    IsomorphicUpToSignChoice,
    Conditional,
    NoMilnorRing,
    Undetermined,
};

std::string to_string(MirrorStatus s);

struct MirrorVerdict {
    MirrorStatus status = MirrorStatus::Undetermined;
    size_t dim_A = 0;
    size_t dim_B = 0;
    size_t sign_assignments_tested = 0;
    std::vector<std::string> hypotheses; // nonzero assumptions, e.g. "a != 0"
    std::optional<Rational> alpha;       // non-existence evidence
    std::optional<Rational> mu;
    std::string detail;
    bool tensor_path = false;
};

// Check that the map sending variable i of the target presentation to
// scale_i * generator_i kills every relation; scales are solved
// multiplicatively and may depend on hypothesized-nonzero unknowns.
struct RelationCheck {
    bool ok = false;
    std::vector<std::string> hypotheses;
    std::string detail;
};

RelationCheck check_relations(const FrobeniusAlgebra& A, const std::vector<int>& gens,
                              const std::vector<Polynomial>& relations);

// surjectivity of the induced map from the monomial basis of R
std::optional<bool> check_spanning(const FrobeniusAlgebra& A, const std::vector<int>& gens,
                                   const QuotientRing& R, std::set<std::string>& hypotheses);

MirrorVerdict verify_mirror(const Polynomial& W, const StateSpace& S, CorrelatorSystem& sys,
                            const Resolution& res,
                            const std::vector<std::string>& pinned_generator_labels = {},
                            bool all_signs = true);

// graded non-existence argument: generator degrees in scale*W-degree units,
// top degree D in the same units
MirrorVerdict milnor_nonexistence_check(size_t dim, const std::vector<Rational>& scaled_degrees,
                                        const Rational& D);

} // namespace fjrw

#endif
