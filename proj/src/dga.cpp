#include "odot/dga.hpp"

#include <sstream>

#include "odot/linsolve.hpp"

namespace odot {

namespace {

Scalar parity_sign(long k) { return (((k % 2) + 2) % 2 == 0) ? Scalar(1) : Scalar(-1); }

Matrix unit_column(const Ring& ring, long n, long i) {
    Matrix e(ring, n, 1);
    e.set(i, 0, Scalar(1));
    return e;
}

// equality of column collections in the given piece; plain matrix equality
// on free pieces, class equality otherwise
bool eq_in(const FPModule& piece, const Matrix& x, const Matrix& y) {
    if (piece.is_free_piece()) return x == y;
    return piece.is_zero_class(x - y);
}

}  // namespace

DGAlgebra::DGAlgebra(Ring ring, std::map<int, long> dims, std::map<int, Matrix> diffs,
                     std::map<std::pair<int, int>, Matrix> mult, Matrix unit)
    : DGAlgebra(ring, std::move(dims), std::move(diffs), std::move(mult), unit,
                Matrix(ring, unit.rows(), 0)) {}

DGAlgebra::DGAlgebra(Ring ring, std::map<int, long> dims, std::map<int, Matrix> diffs,
                     std::map<std::pair<int, int>, Matrix> mult, Matrix unit, Matrix rel0)
    : ring_(ring), unit_(std::move(unit)), rel0_(std::move(rel0)) {
    for (auto& [n, d] : dims) {
        if (d < 0) throw error("algebra: negative dimension in degree " + std::to_string(n));
        if (d > 0) dims_[n] = d;
    }
    if (dim(0) == 0) throw error("algebra: the unit needs a degree 0 component");
    if (unit_.rows() != dim(0) || unit_.cols() != 1)
        throw error("algebra: unit must be a degree 0 column");
    if (rel0_.rows() != dim(0))
        throw error("algebra: relation rows disagree with the degree 0 dimension");
    if (rel0_.cols() > 0 && !concentrated0())
        throw error("algebra: relations are only supported in a degree 0 concentrated algebra");
    for (auto& [n, m] : diffs) {
        if (m.rows() != dim(n - 1) || m.cols() != dim(n)) {
            std::ostringstream os;
            os << "algebra: differential at degree " << n << " has shape " << m.rows() << "x"
               << m.cols() << ", expected " << dim(n - 1) << "x" << dim(n);
            throw error(os.str());
        }
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) diff_[n] = m;
    }
    if (rel0_.cols() > 0 && !diff_.empty())
        throw error("algebra: a presented degree 0 algebra has no differential");
    for (auto& [ij, m] : mult) {
        auto [i, j] = ij;
        if (m.rows() != dim(i + j) || m.cols() != dim(i) * dim(j)) {
            std::ostringstream os;
            os << "algebra: table at degrees (" << i << "," << j << ") has shape " << m.rows()
               << "x" << m.cols() << ", expected " << dim(i + j) << "x" << dim(i) * dim(j);
            throw error(os.str());
        }
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) mult_[ij] = m;
    }
}

long DGAlgebra::dim(int n) const {
    auto it = dims_.find(n);
    return it == dims_.end() ? 0 : it->second;
}

int DGAlgebra::lo() const { return dims_.begin()->first; }
int DGAlgebra::hi() const { return dims_.rbegin()->first; }

bool DGAlgebra::concentrated0() const { return dims_.size() == 1 && dims_.count(0) == 1; }

Matrix DGAlgebra::diff(int n) const {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    return Matrix(ring_, dim(n - 1), dim(n));
}

Matrix DGAlgebra::mult(int i, int j) const {
    auto it = mult_.find({i, j});
    if (it != mult_.end()) return it->second;
    return Matrix(ring_, dim(i + j), dim(i) * dim(j));
}

FPModule DGAlgebra::piece(int n) const {
    if (n == 0 && presented()) return FPModule(ring_, dim(0), rel0_);
    return FPModule::free(ring_, dim(n));
}

ChainComplex DGAlgebra::carrier() const {
    std::map<int, FPModule> pieces;
    for (auto& [n, d] : dims_) pieces.emplace(n, piece(n));
    std::map<int, Matrix> diffs;
    for (auto& [n, m] : diff_) diffs.emplace(n, m);
    return ChainComplex(ring_, std::move(pieces), std::move(diffs));
}

std::string DGAlgebra::describe() const {
    std::ostringstream os;
    os << ring_.name() << "-algebra, dims";
    for (auto& [n, d] : dims_) os << " " << n << ":" << d;
    if (presented()) os << ", " << rel0_.cols() << " relations";
    return os.str();
}

bool DGAlgebra::operator==(const DGAlgebra& o) const {
    return ring_ == o.ring_ && dims_ == o.dims_ && diff_ == o.diff_ && mult_ == o.mult_ &&
           unit_ == o.unit_ && rel0_ == o.rel0_;
}

DgaReport validate_dga(const DGAlgebra& a) {
    DgaReport r;
    auto fail = [&](bool DgaReport::* flag, const std::string& msg) {
        r.*flag = false;
        if (r.detail.empty()) r.detail = msg;
    };
    const auto& dims = a.dims();

    for (auto& [n, dn] : dims) {
        Matrix dd = a.diff(n - 1) * a.diff(n);
        if (!dd.is_zero()) {
            long col = 0;
            for (; col < dd.cols(); ++col)
                if (!dd.col(col).is_zero()) break;
            std::ostringstream os;
            os << "d∘d is nonzero at degree " << n << ", basis element " << col;
            fail(&DgaReport::d2_ok, os.str());
            break;
        }
    }

    for (auto& [i, di] : dims) {
        for (auto& [j, dj] : dims) {
            if (a.dim(i + j - 1) == 0) continue;
            Matrix lhs = a.diff(i + j) * a.mult(i, j);
            Matrix rhs = a.mult(i - 1, j) * kron(a.diff(i), Matrix::identity(a.ring(), dj)) +
                         a.mult(i, j - 1).scaled(parity_sign(i)) *
                             kron(Matrix::identity(a.ring(), di), a.diff(j));
            Matrix gap = lhs - rhs;
            if (gap.is_zero()) continue;
            long col = 0;
            for (; col < gap.cols(); ++col)
                if (!gap.col(col).is_zero()) break;
            std::ostringstream os;
            os << "Leibniz fails at degrees (" << i << "," << j << "), basis pair (" << col / dj
               << "," << col % dj << ")";
            fail(&DgaReport::leibniz_ok, os.str());
            goto leibniz_done;
        }
    }
leibniz_done:

    for (auto& [i, di] : dims) {
        for (auto& [j, dj] : dims) {
            for (auto& [l, dl] : dims) {
                if (a.dim(i + j + l) == 0) continue;
                Matrix lhs = a.mult(i + j, l) * kron(a.mult(i, j), Matrix::identity(a.ring(), dl));
                Matrix rhs = a.mult(i, j + l) * kron(Matrix::identity(a.ring(), di), a.mult(j, l));
                FPModule piece = a.piece(i + j + l);
                if (eq_in(piece, lhs, rhs)) continue;
                Matrix gap = lhs - rhs;
                long col = 0;
                for (; col < gap.cols(); ++col) {
                    bool bad = piece.is_free_piece() ? !gap.col(col).is_zero()
                                                     : !piece.is_zero_class(gap.col(col));
                    if (bad) break;
                }
                std::ostringstream os;
                os << "associativity fails at degrees (" << i << "," << j << "," << l
                   << "), basis triple (" << col / (dj * dl) << "," << (col / dl) % dj << ","
                   << col % dl << ")";
                fail(&DgaReport::assoc_ok, os.str());
                goto assoc_done;
            }
        }
    }
assoc_done:

    for (auto& [j, dj] : dims) {
        Matrix id = Matrix::identity(a.ring(), dj);
        Matrix left = a.mult(0, j) * kron(a.unit(), id);
        Matrix right = a.mult(j, 0) * kron(id, a.unit());
        if (!eq_in(a.piece(j), left, id)) {
            std::ostringstream os;
            os << "left unit law fails at degree " << j;
            fail(&DgaReport::unit_ok, os.str());
            break;
        }
        if (!eq_in(a.piece(j), right, id)) {
            std::ostringstream os;
            os << "right unit law fails at degree " << j;
            fail(&DgaReport::unit_ok, os.str());
            break;
        }
    }
    if (r.unit_ok && !(a.diff(0) * a.unit()).is_zero())
        fail(&DgaReport::unit_ok, "the unit is not a cycle");

    if (a.presented()) {
        FPModule p0 = a.piece(0);
        Matrix id = Matrix::identity(a.ring(), a.dim(0));
        if (!p0.is_zero_class(a.mult(0, 0) * kron(a.relations0(), id)) ||
            !p0.is_zero_class(a.mult(0, 0) * kron(id, a.relations0())))
            fail(&DgaReport::presented_ok,
                 "multiplication is not well defined modulo the relations");
    }
    return r;
}

DGAlgebra ring_as_dga(Ring ring, long n, const Matrix& table, const Matrix& unit) {
    return ring_as_dga(ring, n, table, unit, Matrix(ring, n, 0));
}

DGAlgebra ring_as_dga(Ring ring, long n, const Matrix& table, const Matrix& unit,
                      const Matrix& relations) {
    DGAlgebra a(ring, {{0, n}}, {}, {{{0, 0}, table}}, unit, relations);
    DgaReport r = validate_dga(a);
    if (!r.pass()) throw error("ring table rejected: " + r.detail);
    return a;
}

DGAlgebra ground_dga(Ring ring) {
    return ring_as_dga(ring, 1, Matrix::of(ring, 1, 1, {1}), Matrix::of(ring, 1, 1, {1}));
}

DGAlgebra opposite(const DGAlgebra& a) {
    std::map<std::pair<int, int>, Matrix> mult;
    for (auto& [i, di] : a.dims()) {
        for (auto& [j, dj] : a.dims()) {
            if (a.dim(i + j) == 0) continue;
            Matrix src = a.mult(j, i);
            Matrix m(a.ring(), a.dim(i + j), di * dj);
            Scalar sign = parity_sign(static_cast<long>(i) * j);
            for (long x = 0; x < di; ++x)
                for (long y = 0; y < dj; ++y)
                    for (long s = 0; s < m.rows(); ++s)
                        m.set(s, x * dj + y, a.ring().mul(sign, src.at(s, y * di + x)));
            mult.emplace(std::make_pair(i, j), std::move(m));
        }
    }
    std::map<int, Matrix> diffs;
    for (auto& [n, d] : a.dims())
        if (a.dim(n - 1) > 0) diffs.emplace(n, a.diff(n));
    return DGAlgebra(a.ring(), a.dims(), std::move(diffs), std::move(mult), a.unit(),
                     a.relations0());
}

TensorLayout tensor_dga_layout(const DGAlgebra& a, const DGAlgebra& b) {
    TensorLayout lay;
    for (int n = a.lo() + b.lo(); n <= a.hi() + b.hi(); ++n) {
        long off = 0;
        std::vector<std::pair<int, long>> blocks;
        for (auto& [i, di] : a.dims()) {
            long dj = b.dim(n - i);
            if (dj == 0) continue;
            blocks.emplace_back(i, off);
            off += di * dj;
        }
        if (!blocks.empty()) lay.blocks[n] = std::move(blocks);
    }
    return lay;
}

DGAlgebra tensor_dga(const DGAlgebra& a, const DGAlgebra& b) {
    if (a.ring() != b.ring()) throw error("tensor of algebras over different rings");
    if (a.presented() || b.presented())
        throw error("tensor of a presented degree 0 algebra is not supported");
    const Ring& ring = a.ring();
    TensorLayout lay = tensor_dga_layout(a, b);

    std::map<int, long> dims;
    for (auto& [n, blocks] : lay.blocks) {
        auto [i, off] = blocks.back();
        dims[n] = off + a.dim(i) * b.dim(n - i);
    }
    auto dim_of = [&](int n) {
        auto it = dims.find(n);
        return it == dims.end() ? 0L : it->second;
    };

    std::map<std::pair<int, int>, Matrix> mult;
    for (auto& [m1, blocks1] : lay.blocks) {
        for (auto& [m2, blocks2] : lay.blocks) {
            if (dim_of(m1 + m2) == 0) continue;
            Matrix t(ring, dim_of(m1 + m2), dim_of(m1) * dim_of(m2));
            for (auto& [i1, o1] : blocks1) {
                int j1 = m1 - i1;
                long p1 = a.dim(i1), q1 = b.dim(j1);
                for (auto& [i2, o2] : blocks2) {
                    int j2 = m2 - i2;
                    long p2 = a.dim(i2), q2 = b.dim(j2);
                    if (a.dim(i1 + i2) == 0 || b.dim(j1 + j2) == 0) continue;
                    Matrix ma = a.mult(i1, i2);
                    Matrix mb = b.mult(j1, j2);
                    long qt = b.dim(j1 + j2);
                    long base = lay.offset(m1 + m2, i1 + i2);
                    Scalar sign = parity_sign(static_cast<long>(j1) * i2);
                    for (long a1 = 0; a1 < p1; ++a1)
                        for (long b1 = 0; b1 < q1; ++b1)
                            for (long a2 = 0; a2 < p2; ++a2)
                                for (long b2 = 0; b2 < q2; ++b2) {
                                    long col = (o1 + a1 * q1 + b1) * dim_of(m2) +
                                               (o2 + a2 * q2 + b2);
                                    for (long s = 0; s < ma.rows(); ++s) {
                                        Scalar u = ma.at(s, a1 * p2 + a2);
                                        if (u == 0) continue;
                                        for (long v = 0; v < qt; ++v) {
                                            Scalar w = mb.at(v, b1 * q2 + b2);
                                            if (w == 0) continue;
                                            t.add_at(base + s * qt + v, col,
                                                     ring.mul(sign, u * w));
                                        }
                                    }
                                }
                }
            }
            mult.emplace(std::make_pair(m1, m2), std::move(t));
        }
    }

    std::map<int, Matrix> diffs;
    for (auto& [n, blocks] : lay.blocks) {
        if (dim_of(n - 1) == 0) continue;
        Matrix d(ring, dim_of(n - 1), dim_of(n));
        for (auto& [i, off] : blocks) {
            int j = n - i;
            long di = a.dim(i), dj = b.dim(j);
            if (a.dim(i - 1) > 0 && b.dim(j) > 0) {
                Matrix da = a.diff(i);
                long base = lay.offset(n - 1, i - 1);
                for (long x = 0; x < di; ++x)
                    for (long y = 0; y < dj; ++y)
                        for (long s = 0; s < da.rows(); ++s)
                            d.add_at(base + s * dj + y, off + x * dj + y, da.at(s, x));
            }
            if (b.dim(j - 1) > 0) {
                Matrix db = b.diff(j);
                long base = lay.offset(n - 1, i);
                Scalar sign = parity_sign(i);
                for (long x = 0; x < di; ++x)
                    for (long y = 0; y < dj; ++y)
                        for (long t2 = 0; t2 < db.rows(); ++t2)
                            d.add_at(base + x * db.rows() + t2, off + x * dj + y,
                                     ring.mul(sign, db.at(t2, y)));
            }
        }
        diffs.emplace(n, std::move(d));
    }

    Matrix unit(ring, dim_of(0), 1);
    {
        long base = lay.offset(0, 0);
        long q = b.dim(0);
        for (long s = 0; s < a.dim(0); ++s)
            for (long t = 0; t < q; ++t)
                unit.add_at(base + s * q + t, 0, a.unit().at(s, 0) * b.unit().at(t, 0));
    }
    return DGAlgebra(ring, std::move(dims), std::move(diffs), std::move(mult), std::move(unit));
}

DGAlgebra enveloping(const DGAlgebra& a, const DGAlgebra& b) {
    return tensor_dga(a, opposite(b));
}

DGAlgebra homology_dga(const DGAlgebra& a) {
    DgaReport rep = validate_dga(a);
    if (!rep.pass()) throw error("homology_dga: " + rep.detail);
    if (a.presented()) return a;  // zero differential, already its own homology

    HomologyResult h = homology(a.carrier());

    bool any = false, all_free = true, uniform = true;
    Scalar p(0);
    for (auto& [n, g] : h.groups()) {
        if (g.is_trivial()) continue;
        any = true;
        if (!g.torsion().empty()) all_free = false;
        if (g.free_rank() > 0) uniform = false;
        for (const Scalar& t : g.torsion()) {
            if (p == 0)
                p = t;
            else if (t != p)
                uniform = false;
        }
    }
    if (!any) throw error("homology_dga: homology vanishes, the zero ring has no unital table");

    Ring out = a.ring();
    if (!all_free) {
        bool prime = uniform && p.get_den() == 1 &&
                     mpz_probab_prime_p(p.get_num().get_mpz_t(), 40) > 0 &&
                     p.get_num().fits_slong_p();
        if (!prime) {
            std::ostringstream os;
            os << "homology_dga: homology is not free over one ring:";
            for (auto& [n, g] : h.groups())
                if (!g.is_trivial()) os << " H_" << n << " = " << g.describe();
            throw error(os.str());
        }
        out = Ring::prime_field(p.get_num().get_si());
    }

    std::map<int, long> dims;
    std::map<int, Matrix> reps;  // canonical basis cycles, one column per class
    for (auto& [n, g] : h.groups()) {
        long r = g.canonical_rank();
        if (r == 0) continue;
        dims[n] = r;
        Matrix rn(a.ring(), a.dim(n), r);
        for (long i = 0; i < r; ++i) {
            Matrix gen = h.reps(n) * g.rep_of_canonical(unit_column(a.ring(), r, i));
            rn.set_block(0, i, gen);
        }
        reps.emplace(n, std::move(rn));
    }
    if (dims.count(0) == 0) throw error("homology_dga: the unit class dies in homology");

    auto to_out = [&](const FPModule& g, const Matrix& gen_coords, Matrix& target, long col) {
        Matrix can = g.canonical_coords(gen_coords);
        for (long s = 0; s < can.rows(); ++s) target.set(s, col, out.canon(can.at(s, 0)));
    };

    std::map<std::pair<int, int>, Matrix> mult;
    for (auto& [i, di] : dims) {
        for (auto& [j, dj] : dims) {
            if (dims.count(i + j) == 0) continue;
            const FPModule& g = h.group(i + j);
            Matrix t(out, dims.at(i + j), di * dj);
            for (long x = 0; x < di; ++x) {
                for (long y = 0; y < dj; ++y) {
                    Matrix v = a.mult(i, j) * kron(reps.at(i).col(x), reps.at(j).col(y));
                    auto cls = h.classify(i + j, v);
                    if (!cls) throw error("homology_dga: a product of cycles failed to classify");
                    to_out(g, *cls, t, x * dj + y);
                }
            }
            mult.emplace(std::make_pair(i, j), std::move(t));
        }
    }

    Matrix unit(out, dims.at(0), 1);
    {
        auto cls = h.classify(0, a.unit());
        if (!cls) throw error("homology_dga: the unit is not a cycle");
        to_out(h.group(0), *cls, unit, 0);
    }
    return DGAlgebra(out, std::move(dims), {}, std::move(mult), std::move(unit));
}

DGAlgebraMap::DGAlgebraMap(DGAlgebra source, DGAlgebra target, std::map<int, Matrix> mats)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.ring() != target_.ring()) throw error("algebra map: rings disagree");
    for (auto& [n, m] : mats) {
        if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n)) {
            std::ostringstream os;
            os << "algebra map: component at degree " << n << " has shape " << m.rows() << "x"
               << m.cols() << ", expected " << target_.dim(n) << "x" << source_.dim(n);
            throw error(os.str());
        }
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) mats_[n] = m;
    }

    if (source_.presented()) {
        if (!target_.piece(0).is_zero_class(mat(0) * source_.relations0()))
            throw error("algebra map: source relations are not sent to zero");
    }
    for (auto& [n, dn] : source_.dims()) {
        if (target_.dim(n - 1) == 0) continue;
        Matrix lhs = mat(n - 1) * source_.diff(n);
        Matrix rhs = target_.diff(n) * mat(n);
        if (!eq_in(target_.piece(n - 1), lhs, rhs)) {
            std::ostringstream os;
            os << "algebra map: does not commute with d at degree " << n;
            throw error(os.str());
        }
    }
    for (auto& [i, di] : source_.dims()) {
        for (auto& [j, dj] : source_.dims()) {
            FPModule piece = target_.piece(i + j);
            if (piece.is_trivial()) continue;
            Matrix lhs = mat(i + j) * source_.mult(i, j);
            Matrix rhs = target_.mult(i, j) * kron(mat(i), mat(j));
            if (!eq_in(piece, lhs, rhs)) {
                std::ostringstream os;
                os << "algebra map: not multiplicative at degrees (" << i << "," << j << ")";
                throw error(os.str());
            }
        }
    }
    if (!eq_in(target_.piece(0), mat(0) * source_.unit(), target_.unit()))
        throw error("algebra map: the unit is not preserved");
}

DGAlgebraMap DGAlgebraMap::identity(const DGAlgebra& a) {
    std::map<int, Matrix> mats;
    for (auto& [n, d] : a.dims()) mats.emplace(n, Matrix::identity(a.ring(), d));
    return DGAlgebraMap(a, a, std::move(mats));
}

Matrix DGAlgebraMap::mat(int n) const {
    auto it = mats_.find(n);
    if (it != mats_.end()) return it->second;
    return Matrix(source_.ring(), target_.dim(n), source_.dim(n));
}

DGAlgebraMap DGAlgebraMap::compose(const DGAlgebraMap& inner) const {
    std::map<int, Matrix> mats;
    for (auto& [n, d] : inner.source().dims()) {
        if (target_.dim(n) == 0) continue;
        mats.emplace(n, mat(n) * inner.mat(n));
    }
    return DGAlgebraMap(inner.source(), target_, std::move(mats));
}

ChainMap DGAlgebraMap::carrier_map() const {
    std::map<int, Matrix> mats;
    for (auto& [n, m] : mats_) mats.emplace(n, m);
    return ChainMap(source_.carrier(), target_.carrier(), std::move(mats));
}

TruncationZigzag truncate_plus(const DGAlgebra& e) {
    DgaReport rep = validate_dga(e);
    if (!rep.pass()) throw error("truncate_plus: " + rep.detail);
    const Ring& ring = e.ring();

    if (e.presented()) {
        DGAlgebraMap id = DGAlgebraMap::identity(e);
        return {e, e, id, id};
    }

    Matrix k = e.dim(-1) == 0 ? Matrix::identity(ring, e.dim(0)) : kernel_basis(e.diff(0));
    long k0 = k.cols();
    if (k0 == 0) throw error("truncate_plus: the unit is killed, ker d_0 = 0");

    auto in_kernel = [&](const Matrix& rhs, const char* what) {
        LinearSolution s = solve_linear(k, rhs);
        if (!s.solution) throw error(std::string("truncate_plus: ") + what + " left ker d_0");
        return *s.solution;
    };

    std::map<int, long> dims{{0, k0}};
    for (auto& [n, d] : e.dims())
        if (n >= 1) dims[n] = d;

    std::map<std::pair<int, int>, Matrix> mult;
    for (auto& [i, di] : dims) {
        for (auto& [j, dj] : dims) {
            if (dims.count(i + j) == 0) continue;
            Matrix t;
            if (i == 0 && j == 0)
                t = in_kernel(e.mult(0, 0) * kron(k, k), "a product of cycles");
            else if (i == 0)
                t = e.mult(0, j) * kron(k, Matrix::identity(ring, dj));
            else if (j == 0)
                t = e.mult(i, 0) * kron(Matrix::identity(ring, di), k);
            else
                t = e.mult(i, j);
            mult.emplace(std::make_pair(i, j), std::move(t));
        }
    }

    std::map<int, Matrix> diffs;
    Matrix rel(ring, k0, 0);
    if (e.dim(1) > 0) {
        rel = in_kernel(e.diff(1), "the image of d_1");
        diffs.emplace(1, rel);
    }
    for (auto& [n, d] : e.dims())
        if (n >= 2 && e.dim(n - 1) > 0) diffs.emplace(n, e.diff(n));

    Matrix unit = in_kernel(e.unit(), "the unit");

    DGAlgebra eplus(ring, dims, std::move(diffs), std::move(mult), unit);

    std::map<int, Matrix> incl_mats{{0, k}};
    for (auto& [n, d] : dims)
        if (n >= 1) incl_mats.emplace(n, Matrix::identity(ring, d));
    DGAlgebraMap incl(eplus, e, std::move(incl_mats));

    DGAlgebra h0(ring, {{0, k0}}, {}, {{{0, 0}, eplus.mult(0, 0)}}, unit, rel);
    DGAlgebraMap proj(eplus, h0, {{0, Matrix::identity(ring, k0)}});

    return {std::move(eplus), std::move(h0), std::move(incl), std::move(proj)};
}

}  // namespace odot
