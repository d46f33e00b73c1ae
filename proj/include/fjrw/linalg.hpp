#ifndef FJRW_LINALG_HPP
#define FJRW_LINALG_HPP

#include "fjrw/rational.hpp"

#include <optional>
#include <vector>

namespace fjrw {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
    SolveStatus status;
    Vector solution; // valid only for Unique
};

// Solve A x = b exactly (A need not be square).
SolveResult solve_linear(Matrix A, Vector b);

size_t rank(Matrix A);
Rational determinant(Matrix A);
std::optional<Matrix> inverse(Matrix A);

} // namespace fjrw

#endif
