#include "fjrw/linalg.hpp"

namespace fjrw {

namespace {

// Row-reduce [A|b]; returns pivot columns. b may be empty (treated as homogeneous-free).
std::vector<size_t> rref(Matrix& A, Vector* b) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && A[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(A[sel], A[row]);
        if (b) std::swap((*b)[sel], (*b)[row]);
        Rational p = A[row][col];
        for (size_t j = col; j < n; ++j) A[row][j] /= p;
        if (b) (*b)[row] /= p;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rational f = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] -= f * A[row][j];
            if (b) (*b)[i] -= f * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

SolveResult solve_linear(Matrix A, Vector b) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    auto pivots = rref(A, &b);
    for (size_t i = pivots.size(); i < m; ++i)
        if (b[i] != 0) return {SolveStatus::NoSolution, {}};
    if (pivots.size() < n) return {SolveStatus::Underdetermined, {}};
    Vector x(n);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
    return {SolveStatus::Unique, x};
}

size_t rank(Matrix A) {
    return rref(A, nullptr).size();
}

Rational determinant(Matrix A) {
    size_t n = A.size();
    if (n == 0) return 1;
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && A[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(A[sel], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (A[i][col] == 0) continue;
            Rational f = A[i][col] / A[col][col];
            for (size_t j = col; j < n; ++j) A[i][j] -= f * A[col][j];
        }
    }
    return det;
}

std::optional<Matrix> inverse(Matrix A) {
    size_t n = A.size();
    Matrix aug = A;
    for (size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, 0);
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug, nullptr);
    if (pivots.size() < n) return std::nullopt;
    Matrix inv(n, Vector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace fjrw
