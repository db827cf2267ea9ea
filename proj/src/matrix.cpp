#include "odot/matrix.hpp"

#include <ostream>
#include <sstream>

namespace odot {

Matrix::Matrix(Ring ring, long rows, long cols) : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("matrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Scalar(0));
}

Matrix Matrix::identity(Ring ring, long n) {
    Matrix m(ring, n, n);
    for (long i = 0; i < n; ++i) m.ref(i, i) = 1;
    return m;
}

Matrix Matrix::of(Ring ring, long rows, long cols, std::initializer_list<long> entries) {
    std::vector<Scalar> v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return of(ring, rows, cols, v);
}

Matrix Matrix::of(Ring ring, long rows, long cols, const std::vector<Scalar>& entries) {
    if (static_cast<long>(entries.size()) != rows * cols) throw error("matrix literal: size mismatch");
    Matrix m(ring, rows, cols);
    for (long i = 0; i < rows * cols; ++i) m.a_[i] = ring.canon(entries[i]);
    return m;
}

void Matrix::check_index(long i, long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        std::ostringstream os;
        os << "matrix: index (" << i << "," << j << ") outside " << rows_ << "x" << cols_;
        throw error(os.str());
    }
}

const Scalar& Matrix::at(long i, long j) const {
    check_index(i, j);
    return ref(i, j);
}

void Matrix::set(long i, long j, const Scalar& v) {
    check_index(i, j);
    ref(i, j) = ring_.canon(v);
}

void Matrix::add_at(long i, long j, const Scalar& v) {
    check_index(i, j);
    ref(i, j) = ring_.add(ref(i, j), v);
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (s != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

static void check_same_ring(const Matrix& a, const Matrix& b, const char* op) {
    if (a.ring() != b.ring()) throw error(std::string(op) + ": ring mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_ring(*this, o, "matrix add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix add: shape mismatch");
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.neg(a_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_ring(*this, o, "matrix mul");
    if (cols_ != o.rows_) {
        std::ostringstream os;
        os << "matrix mul: " << rows_ << "x" << cols_ << " times " << o.rows_ << "x" << o.cols_;
        throw error(os.str());
    }
    Matrix r(ring_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Scalar& aik = ref(i, k);
            if (aik == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                if (o.ref(k, j) == 0) continue;
                r.ref(i, j) += aik * o.ref(k, j);
            }
        }
    for (Scalar& s : r.a_) s = ring_.canon(s);
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.mul(a_[i], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.ref(j, i) = ref(i, j);
    return r;
}

Matrix Matrix::sub(long r0, long r1, long c0, long c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw error("matrix sub: bad range");
    Matrix r(ring_, r1 - r0, c1 - c0);
    for (long i = r0; i < r1; ++i)
        for (long j = c0; j < c1; ++j) r.ref(i - r0, j - c0) = ref(i, j);
    return r;
}

void Matrix::set_block(long i, long j, const Matrix& b) {
    check_same_ring(*this, b, "set_block");
    if (i + b.rows_ > rows_ || j + b.cols_ > cols_ || i < 0 || j < 0)
        throw error("set_block: out of range");
    for (long r = 0; r < b.rows_; ++r)
        for (long c = 0; c < b.cols_; ++c) ref(i + r, j + c) = b.ref(r, c);
}

void Matrix::swap_rows(long i, long j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= rows_) throw error("swap_rows: out of range");
    for (long c = 0; c < cols_; ++c) std::swap(ref(i, c), ref(j, c));
}

void Matrix::swap_cols(long i, long j) {
    if (i < 0 || i >= cols_ || j < 0 || j >= cols_) throw error("swap_cols: out of range");
    for (long r = 0; r < rows_; ++r) std::swap(ref(r, i), ref(r, j));
}

Matrix Matrix::vec() const {
    Matrix r(ring_, rows_ * cols_, 1);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.ref(i * cols_ + j, 0) = ref(i, j);
    return r;
}

Matrix Matrix::unvec(const Matrix& column, long rows, long cols) {
    if (column.cols() != 1 || column.rows() != rows * cols) throw error("unvec: shape mismatch");
    Matrix r(column.ring(), rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) r.ref(i, j) = column.at(i * cols + j, 0);
    return r;
}

Matrix change_ring(const Matrix& m, Ring target) {
    Matrix r(target, m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j));
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b, "hstack");
    if (a.rows() != b.rows()) throw error("hstack: row mismatch");
    Matrix r(a.ring(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b, "vstack");
    if (a.cols() != b.cols()) throw error("vstack: col mismatch");
    Matrix r(a.ring(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b, "kron");
    Matrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, a.ring().mul(a.at(i, j), b.at(k, l)));
        }
    return r;
}

Matrix diag_cat(const Matrix& a, const Matrix& b) {
    check_same_ring(a, b, "diag_cat");
    Matrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

Scalar det(const Matrix& a) {
    if (a.rows() != a.cols()) throw error("det: not square");
    const long n = a.rows();
    // fraction-valued Gaussian elimination; exact over every supported ring
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    Scalar d(1);
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) return Scalar(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Scalar p = m[c][c];
        for (long r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Scalar f = m[r][c] / p;
            for (long j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    // determinant of an integral representative matrix is integral, so the
    // final reduction into F_p is legitimate
    if (a.ring().kind() == Ring::Kind::Fp) return a.ring().canon(d);
    return d;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (long i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (long j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j).get_str();
        }
    }
    return os << "]";
}

}  // namespace odot
