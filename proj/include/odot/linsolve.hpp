#pragma once

#include <optional>
#include <vector>

#include "odot/matrix.hpp"

namespace odot {

// Linear solver for unknown matrices.  Each constraint has the shape
//   sum_t  L_t * X_{v_t} * R_t  ≡  rhs   (mod column span of `modulus`)
// and everything is flattened through vec(A X B) = kron(A, B^T) vec(X) into
// one exact solve.
class MapSolver {
public:
    explicit MapSolver(Ring ring) : ring_(ring) {}

    struct Term {
        Matrix left;
        int var;
        Matrix right;
    };

    int add_var(long rows, long cols);
    void add_constraint(std::vector<Term> terms, const Matrix& rhs, const Matrix& modulus);
    void add_constraint(std::vector<Term> terms, const Matrix& rhs);

    std::optional<std::vector<Matrix>> solve() const;

    // Assembled homogeneous system restricted to the variable columns: the
    // columns of the result span all (vec X_0 | ... | vec X_k) admitting some
    // auxiliary modulus part.  Used for instance-space arguments.
    Matrix variable_solution_space() const;
    long var_offset(int v) const;
    long var_rows(int v) const { return shapes_[static_cast<size_t>(v)].first; }
    long var_cols(int v) const { return shapes_[static_cast<size_t>(v)].second; }
    long total_var_dim() const;

private:
    struct Constraint {
        std::vector<Term> terms;
        Matrix rhs;
        Matrix modulus;  // zero-column matrix when absent
    };
    Matrix assemble_lhs() const;
    Matrix assemble_rhs() const;

    Ring ring_;
    std::vector<std::pair<long, long>> shapes_;
    std::vector<Constraint> constraints_;
};

}  // namespace odot
