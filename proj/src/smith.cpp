#include "odot/smith.hpp"

namespace odot {

namespace {

// Carries A together with U, Uinv, V, Vinv through elementary operations,
// preserving U*A0*V == A and U*Uinv == I == V*Vinv.
struct Reduction {
    Matrix A, U, Uinv, V, Vinv;

    explicit Reduction(const Matrix& a)
        : A(a),
          U(Matrix::identity(a.ring(), a.rows())),
          Uinv(Matrix::identity(a.ring(), a.rows())),
          V(Matrix::identity(a.ring(), a.cols())),
          Vinv(Matrix::identity(a.ring(), a.cols())) {}

    const Ring& ring() const { return A.ring(); }

    void row_swap(long i, long j) {
        if (i == j) return;
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void col_swap(long i, long j) {
        if (i == j) return;
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    // row_i *= c with c a unit
    void row_scale(long i, const Scalar& c) {
        Scalar ci = ring().inv(c);
        for (long k = 0; k < A.cols(); ++k) A.set(i, k, ring().mul(A.at(i, k), c));
        for (long k = 0; k < U.cols(); ++k) U.set(i, k, ring().mul(U.at(i, k), c));
        for (long k = 0; k < Uinv.rows(); ++k) Uinv.set(k, i, ring().mul(Uinv.at(k, i), ci));
    }
    // row_i += c * row_j
    void row_add(long i, long j, const Scalar& c) {
        if (c == 0) return;
        for (long k = 0; k < A.cols(); ++k) A.add_at(i, k, ring().mul(c, A.at(j, k)));
        for (long k = 0; k < U.cols(); ++k) U.add_at(i, k, ring().mul(c, U.at(j, k)));
        for (long k = 0; k < Uinv.rows(); ++k) Uinv.add_at(k, j, ring().neg(ring().mul(c, Uinv.at(k, i))));
    }
    // col_i += c * col_j
    void col_add(long i, long j, const Scalar& c) {
        if (c == 0) return;
        for (long k = 0; k < A.rows(); ++k) A.add_at(k, i, ring().mul(c, A.at(k, j)));
        for (long k = 0; k < V.rows(); ++k) V.add_at(k, i, ring().mul(c, V.at(k, j)));
        for (long k = 0; k < Vinv.cols(); ++k) Vinv.add_at(j, k, ring().neg(ring().mul(c, Vinv.at(i, k))));
    }
    // (row_i, row_j) <- (s*row_i + t*row_j, -(b/g)*row_i + (a/g)*row_j)
    // with s*a + t*b = g = gcd(a, b); the 2x2 block is unimodular
    void row_gcd(long i, long j, const Scalar& a, const Scalar& b) {
        mpz_class g, s, t;
        ext_gcd(a.get_num(), b.get_num(), g, s, t);
        Scalar ag(a.get_num() / g), bg(b.get_num() / g), ss(s), tt(t);
        apply_row_pair(i, j, ss, tt, -bg, ag);
    }
    void col_gcd(long i, long j, const Scalar& a, const Scalar& b) {
        mpz_class g, s, t;
        ext_gcd(a.get_num(), b.get_num(), g, s, t);
        Scalar ag(a.get_num() / g), bg(b.get_num() / g), ss(s), tt(t);
        apply_col_pair(i, j, ss, tt, -bg, ag);
    }

private:
    // rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j), ps - qr = 1
    void apply_row_pair(long i, long j, const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s) {
        auto mix_rows = [&](Matrix& m) {
            for (long k = 0; k < m.cols(); ++k) {
                Scalar x = m.at(i, k), y = m.at(j, k);
                m.set(i, k, ring().add(ring().mul(p, x), ring().mul(q, y)));
                m.set(j, k, ring().add(ring().mul(r, x), ring().mul(s, y)));
            }
        };
        mix_rows(A);
        mix_rows(U);
        // inverse block [[s, -q], [-r, p]] applied on the right: mix columns
        for (long k = 0; k < Uinv.rows(); ++k) {
            Scalar x = Uinv.at(k, i), y = Uinv.at(k, j);
            Uinv.set(k, i, ring().add(ring().mul(x, s), ring().mul(y, ring().neg(r))));
            Uinv.set(k, j, ring().add(ring().mul(x, ring().neg(q)), ring().mul(y, p)));
        }
    }
    // cols (i, j) <- (p*col_i + q*col_j, r*col_i + s*col_j), ps - qr = 1
    void apply_col_pair(long i, long j, const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s) {
        auto mix_cols = [&](Matrix& m) {
            for (long k = 0; k < m.rows(); ++k) {
                Scalar x = m.at(k, i), y = m.at(k, j);
                m.set(k, i, ring().add(ring().mul(p, x), ring().mul(q, y)));
                m.set(k, j, ring().add(ring().mul(r, x), ring().mul(s, y)));
            }
        };
        mix_cols(A);
        mix_cols(V);
        for (long k = 0; k < Vinv.cols(); ++k) {
            Scalar x = Vinv.at(i, k), y = Vinv.at(j, k);
            Vinv.set(i, k, ring().add(ring().mul(s, x), ring().mul(ring().neg(r), y)));
            Vinv.set(j, k, ring().add(ring().mul(ring().neg(q), x), ring().mul(p, y)));
        }
    }
};

void reduce_field(Reduction& red) {
    Matrix& A = red.A;
    const Ring& ring = red.ring();
    long t = 0;
    while (t < A.rows() && t < A.cols()) {
        long pi = -1, pj = -1;
        for (long i = t; i < A.rows() && pi < 0; ++i)
            for (long j = t; j < A.cols(); ++j)
                if (A.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        red.row_swap(t, pi);
        red.col_swap(t, pj);
        red.row_scale(t, ring.inv(A.at(t, t)));
        for (long i = 0; i < A.rows(); ++i)
            if (i != t && A.at(i, t) != 0) red.row_add(i, t, ring.neg(A.at(i, t)));
        for (long j = 0; j < A.cols(); ++j)
            if (j != t && A.at(t, j) != 0) red.col_add(j, t, ring.neg(A.at(t, j)));
        ++t;
    }
}

void reduce_integers(Reduction& red) {
    Matrix& A = red.A;
    const Ring& ring = red.ring();
    long t = 0;
    while (t < A.rows() && t < A.cols()) {
        // minimal nonzero |entry| as pivot keeps coefficient growth tame
        long pi = -1, pj = -1;
        mpz_class best;
        for (long i = t; i < A.rows(); ++i)
            for (long j = t; j < A.cols(); ++j) {
                if (A.at(i, j) == 0) continue;
                mpz_class v = abs(A.at(i, j).get_num());
                if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        red.row_swap(t, pi);
        red.col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = t + 1; i < A.rows(); ++i) {
                const Scalar b = A.at(i, t);
                if (b == 0) continue;
                const Scalar a = A.at(t, t);
                if (ring.divides(a, b)) {
                    red.row_add(i, t, ring.neg(ring.exact_div(b, a)));
                } else {
                    red.row_gcd(t, i, a, b);
                    dirty = true;
                }
            }
            for (long j = t + 1; j < A.cols(); ++j) {
                const Scalar b = A.at(t, j);
                if (b == 0) continue;
                const Scalar a = A.at(t, t);
                if (ring.divides(a, b)) {
                    red.col_add(j, t, ring.neg(ring.exact_div(b, a)));
                } else {
                    red.col_gcd(t, j, a, b);
                    dirty = true;
                }
            }
        }

        // pivot must divide the whole remaining block before moving on,
        // otherwise the diagonal would violate the divisibility chain
        bool redo = false;
        for (long i = t + 1; i < A.rows() && !redo; ++i)
            for (long j = t + 1; j < A.cols(); ++j)
                if (!ring.divides(A.at(t, t), A.at(i, j))) {
                    red.row_add(t, i, Scalar(1));
                    redo = true;
                    break;
                }
        if (redo) continue;

        if (A.at(t, t) < 0) red.row_scale(t, Scalar(-1));
        ++t;
    }
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a) {
    Reduction red(a);
    if (a.ring().is_field())
        reduce_field(red);
    else
        reduce_integers(red);
    SmithForm out;
    out.D = red.A;
    out.U = red.U;
    out.Uinv = red.Uinv;
    out.V = red.V;
    out.Vinv = red.Vinv;
    const long n = std::min(out.D.rows(), out.D.cols());
    for (long i = 0; i < n; ++i) {
        if (out.D.at(i, i) == 0) break;
        out.diag.push_back(out.D.at(i, i));
    }
    out.rank = static_cast<long>(out.diag.size());
    return out;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw error("solve_linear: ring mismatch");
    if (a.rows() != b.rows()) throw error("solve_linear: row mismatch");
    const Ring& ring = a.ring();
    const Ring witness_ring = ring.kind() == Ring::Kind::Z ? Ring::rationals() : ring;
    SmithForm s = smith_normal_form(a);
    Matrix ub = s.U * b;
    Matrix y(ring, a.cols(), b.cols());
    for (long c = 0; c < b.cols(); ++c) {
        for (long i = 0; i < a.rows(); ++i) {
            const Scalar rhs = ub.at(i, c);
            const Scalar d = i < s.rank ? s.diag[static_cast<size_t>(i)] : Scalar(0);
            if (i < s.rank && i < a.cols() && ring.divides(d, rhs)) {
                y.set(i, c, ring.exact_div(rhs, d));
                continue;
            }
            if (rhs == 0) continue;
            // row i of U refutes this column: w*A is integral (zero past the
            // rank) while w*b is not
            LinearSolution fail;
            Matrix w = change_ring(s.U.row(i), witness_ring);
            if (i < s.rank)
                w = w.scaled(witness_ring.inv(witness_ring.canon(Scalar(d))));
            else if (ring.kind() == Ring::Kind::Z)
                w = w.scaled(Scalar(1) / (Scalar(2) * rhs));
            fail.witness = w;
            fail.witness_col = c;
            return fail;
        }
    }
    LinearSolution ok;
    ok.solution = s.V * y;
    return ok;
}

bool certifies_unsolvable(const Matrix& a, const Matrix& b, const Matrix& w, long col) {
    if (w.rows() != 1 || w.cols() != a.rows() || col < 0 || col >= b.cols()) return false;
    const bool over_z = a.ring().kind() == Ring::Kind::Z;
    const Ring qr = Ring::rationals();
    Matrix wa = over_z ? w * change_ring(a, qr) : w * a;
    Matrix wb = over_z ? w * change_ring(b.col(col), qr) : w * b.col(col);
    if (over_z) {
        for (long j = 0; j < wa.cols(); ++j)
            if (wa.at(0, j).get_den() != 1) return false;
        return wb.at(0, 0).get_den() != 1;
    }
    return wa.is_zero() && wb.at(0, 0) != 0;
}

Matrix kernel_basis(const Matrix& a) {
    SmithForm s = smith_normal_form(a);
    return s.V.sub(0, a.cols(), s.rank, a.cols());
}

std::optional<Matrix> solve_mod(const Matrix& a, const Matrix& r, const Matrix& b) {
    if (r.cols() == 0) {
        LinearSolution s = solve_linear(a, b);
        return s.solution;
    }
    LinearSolution s = solve_linear(hstack(a, r), b);
    if (!s.solution) return std::nullopt;
    return s.solution->sub(0, a.cols(), 0, b.cols());
}

}  // namespace odot
