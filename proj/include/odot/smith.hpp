#pragma once

#include <optional>
#include <vector>

#include "odot/matrix.hpp"

namespace odot {

// U * A * V == D with U, V invertible over the ring and D diagonal.
// Over Z the diagonal is nonnegative with d_i | d_{i+1}; over a field the
// nonzero diagonal entries are 1.  Uinv and Vinv are exact inverses.
struct SmithForm {
    Matrix U, Uinv, V, Vinv, D;
    long rank = 0;
    std::vector<Scalar> diag;  // the first `rank` diagonal entries
};

SmithForm smith_normal_form(const Matrix& a);

// Solution of A*X = B, or a certificate that none exists.  The witness is a
// row vector w with w*A integral (zero, over a field) while w*B_j is not, for
// the recorded column j.
struct LinearSolution {
    std::optional<Matrix> solution;
    std::optional<Matrix> witness;
    long witness_col = -1;
};

LinearSolution solve_linear(const Matrix& a, const Matrix& b);
bool certifies_unsolvable(const Matrix& a, const Matrix& b, const Matrix& w, long col);

// Basis of { x : A x = 0 }, as matrix columns; over Z the span is saturated.
Matrix kernel_basis(const Matrix& a);

// Solves A*X ≡ B modulo the column span of R, entrywise per column.
std::optional<Matrix> solve_mod(const Matrix& a, const Matrix& r, const Matrix& b);

}  // namespace odot
