#include "odot/linsolve.hpp"

#include "odot/smith.hpp"

namespace odot {

int MapSolver::add_var(long rows, long cols) {
    shapes_.emplace_back(rows, cols);
    return static_cast<int>(shapes_.size()) - 1;
}

void MapSolver::add_constraint(std::vector<Term> terms, const Matrix& rhs, const Matrix& modulus) {
    for (const Term& t : terms) {
        if (t.var < 0 || t.var >= static_cast<int>(shapes_.size())) throw error("map solver: bad var");
        const auto& sh = shapes_[static_cast<size_t>(t.var)];
        if (t.left.cols() != sh.first || t.right.rows() != sh.second)
            throw error("map solver: term shape mismatch");
        if (t.left.rows() != rhs.rows() || t.right.cols() != rhs.cols())
            throw error("map solver: term/rhs shape mismatch");
    }
    if (modulus.cols() > 0 && modulus.rows() != rhs.rows()) throw error("map solver: modulus shape mismatch");
    constraints_.push_back(Constraint{std::move(terms), rhs, modulus});
}

void MapSolver::add_constraint(std::vector<Term> terms, const Matrix& rhs) {
    add_constraint(std::move(terms), rhs, Matrix(ring_, rhs.rows(), 0));
}

long MapSolver::var_offset(int v) const {
    long off = 0;
    for (int i = 0; i < v; ++i) off += shapes_[static_cast<size_t>(i)].first * shapes_[static_cast<size_t>(i)].second;
    return off;
}

long MapSolver::total_var_dim() const {
    long n = 0;
    for (const auto& sh : shapes_) n += sh.first * sh.second;
    return n;
}

Matrix MapSolver::assemble_lhs() const {
    const long nvars = total_var_dim();
    long naux = 0, nrows = 0;
    for (const Constraint& c : constraints_) {
        nrows += c.rhs.rows() * c.rhs.cols();
        naux += c.modulus.cols() * c.rhs.cols();
    }
    Matrix big(ring_, nrows, nvars + naux);
    long row = 0, aux = nvars;
    for (const Constraint& c : constraints_) {
        const long block = c.rhs.rows() * c.rhs.cols();
        for (const Term& t : c.terms) {
            Matrix k = kron(t.left, t.right.transpose());
            // accumulate: several terms may involve the same variable
            for (long i = 0; i < k.rows(); ++i)
                for (long j = 0; j < k.cols(); ++j)
                    if (k.at(i, j) != 0) big.add_at(row + i, var_offset(t.var) + j, k.at(i, j));
        }
        if (c.modulus.cols() > 0) {
            Matrix k = kron(c.modulus, Matrix::identity(ring_, c.rhs.cols()));
            big.set_block(row, aux, k);
            aux += k.cols();
        }
        row += block;
    }
    return big;
}

Matrix MapSolver::assemble_rhs() const {
    long nrows = 0;
    for (const Constraint& c : constraints_) nrows += c.rhs.rows() * c.rhs.cols();
    Matrix rhs(ring_, nrows, 1);
    long row = 0;
    for (const Constraint& c : constraints_) {
        rhs.set_block(row, 0, c.rhs.vec());
        row += c.rhs.rows() * c.rhs.cols();
    }
    return rhs;
}

std::optional<std::vector<Matrix>> MapSolver::solve() const {
    LinearSolution s = solve_linear(assemble_lhs(), assemble_rhs());
    if (!s.solution) return std::nullopt;
    std::vector<Matrix> out;
    out.reserve(shapes_.size());
    for (size_t v = 0; v < shapes_.size(); ++v) {
        const long off = var_offset(static_cast<int>(v));
        const long len = shapes_[v].first * shapes_[v].second;
        out.push_back(Matrix::unvec(s.solution->sub(off, off + len, 0, 1), shapes_[v].first, shapes_[v].second));
    }
    return out;
}

Matrix MapSolver::variable_solution_space() const {
    Matrix k = kernel_basis(assemble_lhs());
    return k.sub(0, total_var_dim(), 0, k.cols());
}

}  // namespace odot
