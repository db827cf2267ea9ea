#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "odot/ring.hpp"

namespace odot {

// Dense exact matrix over a coefficient ring.  Entries stay canonical;
// every binary operation checks that the rings agree.
class Matrix {
public:
    Matrix() : ring_(Ring::integers()), rows_(0), cols_(0) {}
    Matrix(Ring ring, long rows, long cols);

    static Matrix identity(Ring ring, long n);
    static Matrix zero(Ring ring, long rows, long cols) { return Matrix(ring, rows, cols); }
    // row-major literals, for tests and small fixtures
    static Matrix of(Ring ring, long rows, long cols, std::initializer_list<long> entries);
    static Matrix of(Ring ring, long rows, long cols, const std::vector<Scalar>& entries);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Scalar& at(long i, long j) const;
    void set(long i, long j, const Scalar& v);
    void add_at(long i, long j, const Scalar& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;

    Matrix transpose() const;
    // half-open row/column ranges
    Matrix sub(long r0, long r1, long c0, long c1) const;
    Matrix col(long j) const { return sub(0, rows_, j, j + 1); }
    Matrix row(long i) const { return sub(i, i + 1, 0, cols_); }
    void set_block(long i, long j, const Matrix& b);

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);

    // row-major flattening; vec(A X B) == kron(A, B^T) * vec(X)
    Matrix vec() const;
    static Matrix unvec(const Matrix& column, long rows, long cols);

private:
    Ring ring_;
    long rows_, cols_;
    std::vector<Scalar> a_;
    Scalar& ref(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& ref(long i, long j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void check_index(long i, long j) const;
};

// re-canonicalizes entries into the target ring; Q -> Z demands integrality,
// F_p -> Z lifts the stored representative
Matrix change_ring(const Matrix& m, Ring target);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix diag_cat(const Matrix& a, const Matrix& b);
// determinant of a square matrix, exact
Scalar det(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace odot
