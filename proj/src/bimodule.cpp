#include "odot/bimodule.hpp"

#include <optional>
#include <sstream>

namespace odot {

namespace {

Scalar parity_sign(long k) { return (((k % 2) + 2) % 2 == 0) ? Scalar(1) : Scalar(-1); }

bool eq_mod(const FPModule& piece, const Matrix& x, const Matrix& y) {
    if (piece.is_free_piece()) return x == y;
    return piece.is_zero_class(x - y);
}

std::optional<long> find_off(const TensorLayout& lay, int n, int p) {
    auto it = lay.blocks.find(n);
    if (it == lay.blocks.end()) return std::nullopt;
    for (const auto& [bp, off] : it->second)
        if (bp == p) return off;
    return std::nullopt;
}

[[noreturn]] void axiom_fail(const char* what, int a, int b) {
    std::ostringstream os;
    os << "bimodule: " << what << " fails at degrees (" << a << "," << b << ")";
    throw error(os.str());
}

}  // namespace

Bimodule::Bimodule(DGAlgebra left, DGAlgebra right, std::map<int, FPModule> pieces,
                   std::map<int, Matrix> diffs, std::map<std::pair<int, int>, Matrix> lact,
                   std::map<std::pair<int, int>, Matrix> ract)
    : left_(std::move(left)), right_(std::move(right)), empty_(left_.ring(), 0) {
    if (left_.ring() != right_.ring()) throw error("bimodule: algebras over different rings");
    if (left_.presented() || right_.presented())
        throw error("bimodule: modules over a presented algebra are not supported");
    for (auto& [n, p] : pieces) {
        if (p.ring() != ring()) throw error("bimodule: piece over the wrong ring");
        if (p.ngens() > 0) pieces_.emplace(n, p);
    }
    for (auto& [n, m] : diffs) {
        if (m.rows() != ngens(n - 1) || m.cols() != ngens(n)) {
            std::ostringstream os;
            os << "bimodule: differential at degree " << n << " has shape " << m.rows() << "x"
               << m.cols() << ", expected " << ngens(n - 1) << "x" << ngens(n);
            throw error(os.str());
        }
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) diff_.emplace(n, m);
    }
    for (auto& [key, m] : lact) {
        auto [i, n] = key;
        if (m.rows() != ngens(i + n) || m.cols() != left_.dim(i) * ngens(n))
            axiom_fail("left action table shape", i, n);
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) lact_.emplace(key, m);
    }
    for (auto& [key, m] : ract) {
        auto [n, j] = key;
        if (m.rows() != ngens(n + j) || m.cols() != ngens(n) * right_.dim(j))
            axiom_fail("right action table shape", n, j);
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) ract_.emplace(key, m);
    }

    carrier();  // checks d ∘ d ≡ 0 modulo relations

    const Ring& k = ring();
    for (auto& [n, pn] : pieces_) {
        long g = pn.ngens();
        Matrix ig = Matrix::identity(k, g);

        // the unit of each side acts as the identity
        if (!eq_mod(pn, this->lact(0, n) * kron(left_.unit(), ig), ig))
            axiom_fail("unit action (left)", 0, n);
        if (!eq_mod(pn, this->ract(n, 0) * kron(ig, right_.unit()), ig))
            axiom_fail("unit action (right)", n, 0);

        for (auto& [i, di] : left_.dims()) {
            Matrix li = this->lact(i, n);
            // relations are carried into relations
            if (!pn.is_free_piece() &&
                !piece(i + n).is_zero_class(li * kron(Matrix::identity(k, di), pn.relations())))
                axiom_fail("left action well-definedness", i, n);
            // (a a') m = a (a' m)
            for (auto& [i2, di2] : left_.dims()) {
                Matrix lhs = this->lact(i, i2 + n) * kron(Matrix::identity(k, di), this->lact(i2, n));
                Matrix rhs = this->lact(i + i2, n) * kron(left_.mult(i, i2), ig);
                if (!eq_mod(piece(i + i2 + n), lhs, rhs)) axiom_fail("left associativity", i, i2);
            }
            // d(a m) = da · m + (-1)^i a · dm
            Matrix lhs = diff(i + n) * li;
            Matrix rhs = this->lact(i - 1, n) * kron(left_.diff(i), ig) +
                         (this->lact(i, n - 1) * kron(Matrix::identity(k, di), diff(n)))
                             .scaled(parity_sign(i));
            if (!eq_mod(piece(i + n - 1), lhs, rhs)) axiom_fail("left Leibniz", i, n);
        }

        for (auto& [j, dj] : right_.dims()) {
            Matrix rj = this->ract(n, j);
            if (!pn.is_free_piece() &&
                !piece(n + j).is_zero_class(rj * kron(pn.relations(), Matrix::identity(k, dj))))
                axiom_fail("right action well-definedness", n, j);
            // (m b) b' = m (b b')
            for (auto& [j2, dj2] : right_.dims()) {
                Matrix lhs = this->ract(n + j, j2) * kron(rj, Matrix::identity(k, dj2));
                Matrix rhs = this->ract(n, j + j2) * kron(ig, right_.mult(j, j2));
                if (!eq_mod(piece(n + j + j2), lhs, rhs)) axiom_fail("right associativity", j, j2);
            }
            // d(m b) = dm · b + (-1)^n m · db
            Matrix lhs = diff(n + j) * rj;
            Matrix rhs = this->ract(n - 1, j) * kron(diff(n), Matrix::identity(k, dj)) +
                         (this->ract(n, j - 1) * kron(ig, right_.diff(j))).scaled(parity_sign(n));
            if (!eq_mod(piece(n + j - 1), lhs, rhs)) axiom_fail("right Leibniz", n, j);

            // (a m) b = a (m b)
            for (auto& [i, di] : left_.dims()) {
                Matrix lhs2 = this->ract(i + n, j) *
                              kron(this->lact(i, n), Matrix::identity(k, dj));
                Matrix rhs2 = this->lact(i, n + j) *
                              kron(Matrix::identity(k, di), rj);
                if (!eq_mod(piece(i + n + j), lhs2, rhs2)) axiom_fail("action interchange", i, j);
            }
        }
    }
}

const FPModule& Bimodule::piece(int n) const {
    auto it = pieces_.find(n);
    return it != pieces_.end() ? it->second : empty_;
}

long Bimodule::ngens(int n) const {
    auto it = pieces_.find(n);
    return it == pieces_.end() ? 0 : it->second.ngens();
}

std::vector<int> Bimodule::degrees() const {
    std::vector<int> out;
    for (auto& [n, p] : pieces_) out.push_back(n);
    return out;
}

int Bimodule::lo() const {
    if (pieces_.empty()) throw error("bimodule: zero module has no degrees");
    return pieces_.begin()->first;
}

int Bimodule::hi() const {
    if (pieces_.empty()) throw error("bimodule: zero module has no degrees");
    return pieces_.rbegin()->first;
}

bool Bimodule::is_zero() const {
    for (auto& [n, p] : pieces_)
        if (!p.is_trivial()) return false;
    return true;
}

Matrix Bimodule::diff(int n) const {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    return Matrix(ring(), ngens(n - 1), ngens(n));
}

Matrix Bimodule::lact(int i, int n) const {
    auto it = lact_.find({i, n});
    if (it != lact_.end()) return it->second;
    return Matrix(ring(), ngens(i + n), left_.dim(i) * ngens(n));
}

Matrix Bimodule::ract(int n, int j) const {
    auto it = ract_.find({n, j});
    if (it != ract_.end()) return it->second;
    return Matrix(ring(), ngens(n + j), ngens(n) * right_.dim(j));
}

ChainComplex Bimodule::carrier() const {
    std::map<int, Matrix> diffs;
    for (auto& [n, m] : diff_) diffs.emplace(n, m);
    return ChainComplex(ring(), pieces_, std::move(diffs));
}

bool Bimodule::operator==(const Bimodule& o) const {
    return left_ == o.left_ && right_ == o.right_ && pieces_ == o.pieces_ && diff_ == o.diff_ &&
           lact_ == o.lact_ && ract_ == o.ract_;
}

Bimodule unit_cell(const DGAlgebra& a) {
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    std::map<std::pair<int, int>, Matrix> lact, ract;
    for (auto& [n, d] : a.dims()) {
        pieces.emplace(n, a.piece(n));
        if (a.dim(n - 1) > 0) diffs.emplace(n, a.diff(n));
        for (auto& [i, di] : a.dims()) {
            if (a.dim(i + n) > 0) {
                lact.emplace(std::make_pair(i, n), a.mult(i, n));
                ract.emplace(std::make_pair(n, i), a.mult(n, i));
            }
        }
    }
    return Bimodule(a, a, std::move(pieces), std::move(diffs), std::move(lact), std::move(ract));
}

TwoCell::TwoCell(Bimodule source, Bimodule target, std::map<int, Matrix> mats)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.left() == target_.left()) || !(source_.right() == target_.right()))
        throw error("two-cell: source and target are not parallel");
    for (auto& [n, m] : mats) {
        if (m.rows() != target_.ngens(n) || m.cols() != source_.ngens(n)) {
            std::ostringstream os;
            os << "two-cell: component at degree " << n << " has shape " << m.rows() << "x"
               << m.cols() << ", expected " << target_.ngens(n) << "x" << source_.ngens(n);
            throw error(os.str());
        }
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) mats_.emplace(n, m);
    }

    for (auto& [n, pn] : source_.pieces()) {
        if (!pn.is_free_piece() &&
            !target_.piece(n).is_zero_class(mat(n) * pn.relations()))
            throw error("two-cell: not well defined at degree " + std::to_string(n));

        Matrix lhs = mat(n - 1) * source_.diff(n);
        Matrix rhs = target_.diff(n) * mat(n);
        if (!eq_mod(target_.piece(n - 1), lhs, rhs))
            throw error("two-cell: does not commute with d at degree " + std::to_string(n));

        for (auto& [i, di] : source_.left().dims()) {
            Matrix l = mat(i + n) * source_.lact(i, n);
            Matrix r = target_.lact(i, n) * kron(Matrix::identity(source_.ring(), di), mat(n));
            if (!eq_mod(target_.piece(i + n), l, r)) {
                std::ostringstream os;
                os << "two-cell: not left-linear at degrees (" << i << "," << n << ")";
                throw error(os.str());
            }
        }
        for (auto& [j, dj] : source_.right().dims()) {
            Matrix l = mat(n + j) * source_.ract(n, j);
            Matrix r = target_.ract(n, j) * kron(mat(n), Matrix::identity(source_.ring(), dj));
            if (!eq_mod(target_.piece(n + j), l, r)) {
                std::ostringstream os;
                os << "two-cell: not right-linear at degrees (" << n << "," << j << ")";
                throw error(os.str());
            }
        }
    }
}

TwoCell TwoCell::identity(const Bimodule& m) {
    std::map<int, Matrix> mats;
    for (auto& [n, p] : m.pieces()) mats.emplace(n, Matrix::identity(m.ring(), p.ngens()));
    return TwoCell(m, m, std::move(mats));
}

TwoCell TwoCell::zero(const Bimodule& source, const Bimodule& target) {
    return TwoCell(source, target, {});
}

Matrix TwoCell::mat(int n) const {
    auto it = mats_.find(n);
    if (it != mats_.end()) return it->second;
    return Matrix(source_.ring(), target_.ngens(n), source_.ngens(n));
}

TwoCell TwoCell::compose(const TwoCell& inner) const {
    if (!(inner.target_ == source_)) throw error("two-cell: composition mismatch");
    std::map<int, Matrix> mats;
    for (auto& [n, p] : inner.source_.pieces())
        if (target_.ngens(n) > 0) mats.emplace(n, mat(n) * inner.mat(n));
    return TwoCell(inner.source_, target_, std::move(mats));
}

TwoCell TwoCell::operator+(const TwoCell& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw error("two-cell: sum of cells with different ends");
    std::map<int, Matrix> mats;
    for (auto& [n, p] : source_.pieces())
        if (target_.ngens(n) > 0) mats.emplace(n, mat(n) + o.mat(n));
    return TwoCell(source_, target_, std::move(mats));
}

TwoCell TwoCell::operator-(const TwoCell& o) const { return *this + o.scaled(Scalar(-1)); }

TwoCell TwoCell::scaled(const Scalar& c) const {
    std::map<int, Matrix> mats;
    for (auto& [n, m] : mats_) mats.emplace(n, m.scaled(c));
    return TwoCell(source_, target_, std::move(mats));
}

bool TwoCell::is_zero_cell() const {
    for (auto& [n, m] : mats_)
        if (!target_.piece(n).is_zero_class(m)) return false;
    return true;
}

bool TwoCell::equals(const TwoCell& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) return false;
    return (*this - o).is_zero_cell();
}

ChainMap TwoCell::carrier_map() const {
    std::map<int, Matrix> mats;
    for (auto& [n, m] : mats_) mats.emplace(n, m);
    return ChainMap(source_.carrier(), target_.carrier(), std::move(mats));
}

std::optional<TwoCell> TwoCell::inverse() const {
    std::map<int, Matrix> mats;
    std::map<int, bool> seen;
    for (auto& [n, p] : source_.pieces()) seen[n] = true;
    for (auto& [n, p] : target_.pieces()) seen[n] = true;
    for (auto& [n, flag] : seen) {
        ModuleMap f(source_.piece(n), target_.piece(n), mat(n));
        auto inv = f.inverse();
        if (!inv) return std::nullopt;
        if (inv->mat().rows() > 0 && inv->mat().cols() > 0) mats.emplace(n, inv->mat());
    }
    return TwoCell(target_, source_, std::move(mats));
}

bool TwoCell::is_iso() const { return inverse().has_value(); }

Bimodule shift_cell(const Bimodule& m, int k) {
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    std::map<std::pair<int, int>, Matrix> lact, ract;
    Scalar dsign = parity_sign(k);
    for (auto& [n, p] : m.pieces()) {
        pieces.emplace(n + k, p);
        if (m.ngens(n - 1) > 0) diffs.emplace(n + k, m.diff(n).scaled(dsign));
        for (auto& [i, di] : m.left().dims())
            if (m.ngens(i + n) > 0)
                lact.emplace(std::make_pair(i, n + k),
                             m.lact(i, n).scaled(parity_sign(static_cast<long>(i) * k)));
        for (auto& [j, dj] : m.right().dims())
            if (m.ngens(n + j) > 0) ract.emplace(std::make_pair(n + k, j), m.ract(n, j));
    }
    return Bimodule(m.left(), m.right(), std::move(pieces), std::move(diffs), std::move(lact),
                    std::move(ract));
}

TwoCell shift_cell(const TwoCell& f, int k) {
    std::map<int, Matrix> mats;
    for (auto& [n, m] : f.mats()) mats.emplace(n + k, m);
    return TwoCell(shift_cell(f.source(), k), shift_cell(f.target(), k), std::move(mats));
}

OdotResult odot_tensor(const Bimodule& m, const Bimodule& n) {
    if (!(m.right() == n.left())) throw error("odot: middle algebras disagree");
    const Ring& ring = m.ring();
    const DGAlgebra& b = m.right();
    const DGAlgebra& a = m.left();
    const DGAlgebra& c = n.right();

    if (m.pieces().empty() || n.pieces().empty())
        return {Bimodule(a, c, {}, {}, {}, {}), TensorLayout{}};

    TensorLayout lay;
    std::map<int, long> gens;
    for (int t = m.lo() + n.lo(); t <= m.hi() + n.hi(); ++t) {
        long off = 0;
        std::vector<std::pair<int, long>> blocks;
        for (auto& [p, mp] : m.pieces()) {
            long gn = n.ngens(t - p);
            if (gn == 0) continue;
            blocks.emplace_back(p, off);
            off += mp.ngens() * gn;
        }
        if (!blocks.empty()) {
            lay.blocks[t] = std::move(blocks);
            gens[t] = off;
        }
    }

    std::map<int, FPModule> pieces;
    for (auto& [t, g] : gens) {
        std::vector<Matrix> rels;
        for (auto& [p, off] : lay.blocks.at(t)) {
            int q = t - p;
            long gm = m.ngens(p), gn = n.ngens(q);
            const Matrix& rm = m.piece(p).relations();
            const Matrix& rn = n.piece(q).relations();
            if (rm.cols() > 0) {
                Matrix r(ring, g, rm.cols() * gn);
                Matrix block = kron(rm, Matrix::identity(ring, gn));
                // columns (rel, y); rows land inside this block
                for (long cc = 0; cc < block.cols(); ++cc)
                    for (long rr = 0; rr < block.rows(); ++rr)
                        if (!(block.at(rr, cc) == 0)) r.add_at(off + rr, cc, block.at(rr, cc));
                rels.push_back(std::move(r));
            }
            if (rn.cols() > 0) {
                Matrix r(ring, g, gm * rn.cols());
                Matrix block = kron(Matrix::identity(ring, gm), rn);
                for (long cc = 0; cc < block.cols(); ++cc)
                    for (long rr = 0; rr < block.rows(); ++rr)
                        if (!(block.at(rr, cc) == 0)) r.add_at(off + rr, cc, block.at(rr, cc));
                rels.push_back(std::move(r));
            }
        }
        // balancing: m·b ⊗ y ~ m ⊗ b·y over every middle degree
        for (auto& [p, mp] : m.pieces()) {
            for (auto& [j, dj] : b.dims()) {
                int q = t - p - j;
                long gm = mp.ngens(), gn = n.ngens(q);
                if (gn == 0) continue;
                auto off1 = find_off(lay, t, p + j);  // (m b) ⊗ y
                auto off2 = find_off(lay, t, p);      // m ⊗ (b y)
                if (!off1 && !off2) continue;
                Matrix rmb = m.ract(p, j);
                Matrix lbn = n.lact(j, q);
                long gmj = m.ngens(p + j);
                long gjq = n.ngens(j + q);
                Matrix r(ring, g, gm * dj * gn);
                for (long mm = 0; mm < gm; ++mm)
                    for (long bb = 0; bb < dj; ++bb)
                        for (long yy = 0; yy < gn; ++yy) {
                            long cc = (mm * dj + bb) * gn + yy;
                            if (off1 && gmj > 0)
                                for (long s = 0; s < gmj; ++s)
                                    r.add_at(*off1 + s * gn + yy, cc, rmb.at(s, mm * dj + bb));
                            if (off2 && gjq > 0)
                                for (long s = 0; s < gjq; ++s)
                                    r.add_at(*off2 + mm * gjq + s, cc,
                                             ring.neg(lbn.at(s, bb * gn + yy)));
                        }
                if (!r.is_zero()) rels.push_back(std::move(r));
            }
        }
        Matrix rel(ring, g, 0);
        for (Matrix& r : rels) rel = hstack(rel, r);
        pieces.emplace(t, FPModule(ring, g, std::move(rel)));
    }

    std::map<int, Matrix> diffs;
    for (auto& [t, g] : gens) {
        if (gens.count(t - 1) == 0) continue;
        Matrix d(ring, gens.at(t - 1), g);
        for (auto& [p, off] : lay.blocks.at(t)) {
            int q = t - p;
            long gm = m.ngens(p), gn = n.ngens(q);
            auto off1 = find_off(lay, t - 1, p - 1);
            if (off1) {
                Matrix dm = m.diff(p);
                for (long mm = 0; mm < gm; ++mm)
                    for (long yy = 0; yy < gn; ++yy)
                        for (long s = 0; s < dm.rows(); ++s)
                            d.add_at(*off1 + s * gn + yy, off + mm * gn + yy, dm.at(s, mm));
            }
            auto off2 = find_off(lay, t - 1, p);
            if (off2) {
                Matrix dn = n.diff(q);
                Scalar sg = parity_sign(p);
                for (long mm = 0; mm < gm; ++mm)
                    for (long yy = 0; yy < gn; ++yy)
                        for (long s = 0; s < dn.rows(); ++s)
                            d.add_at(*off2 + mm * dn.rows() + s, off + mm * gn + yy,
                                     ring.mul(sg, dn.at(s, yy)));
            }
        }
        if (!d.is_zero()) diffs.emplace(t, std::move(d));
    }

    std::map<std::pair<int, int>, Matrix> lacts, racts;
    for (auto& [t, g] : gens) {
        for (auto& [i, di] : a.dims()) {
            if (gens.count(t + i) == 0) continue;
            Matrix l(ring, gens.at(t + i), di * g);
            for (auto& [p, off] : lay.blocks.at(t)) {
                int q = t - p;
                long gm = m.ngens(p), gn = n.ngens(q);
                auto offt = find_off(lay, t + i, p + i);
                if (!offt) continue;
                Matrix lm = m.lact(i, p);
                for (long al = 0; al < di; ++al)
                    for (long mm = 0; mm < gm; ++mm)
                        for (long yy = 0; yy < gn; ++yy)
                            for (long s = 0; s < lm.rows(); ++s)
                                l.add_at(*offt + s * gn + yy, al * g + off + mm * gn + yy,
                                         lm.at(s, al * gm + mm));
            }
            if (!l.is_zero()) lacts.emplace(std::make_pair(i, t), std::move(l));
        }
        for (auto& [j, dj] : c.dims()) {
            if (gens.count(t + j) == 0) continue;
            Matrix r(ring, gens.at(t + j), g * dj);
            for (auto& [p, off] : lay.blocks.at(t)) {
                int q = t - p;
                long gm = m.ngens(p), gn = n.ngens(q);
                auto offt = find_off(lay, t + j, p);
                if (!offt) continue;
                Matrix rn = n.ract(q, j);
                long gnj = n.ngens(q + j);
                for (long mm = 0; mm < gm; ++mm)
                    for (long yy = 0; yy < gn; ++yy)
                        for (long ga = 0; ga < dj; ++ga)
                            for (long s = 0; s < gnj; ++s)
                                r.add_at(*offt + mm * gnj + s, (off + mm * gn + yy) * dj + ga,
                                         rn.at(s, yy * dj + ga));
            }
            if (!r.is_zero()) racts.emplace(std::make_pair(t, j), std::move(r));
        }
    }

    Bimodule out(a, c, std::move(pieces), std::move(diffs), std::move(lacts), std::move(racts));
    return {std::move(out), std::move(lay)};
}

TwoCell odot_cells(const TwoCell& f, const TwoCell& g) {
    if (!(f.source().right() == g.source().left()))
        throw error("odot_cells: middle algebras disagree");
    OdotResult src = odot_tensor(f.source(), g.source());
    OdotResult tgt = odot_tensor(f.target(), g.target());
    const Ring& ring = f.source().ring();
    std::map<int, Matrix> mats;
    for (auto& [t, blocks] : src.layout.blocks) {
        Matrix out(ring, tgt.module.ngens(t), src.module.ngens(t));
        for (auto& [p, offS] : blocks) {
            int q = t - p;
            auto offT = find_off(tgt.layout, t, p);
            if (!offT) continue;
            Matrix fp = f.mat(p);
            Matrix gq = g.mat(q);
            long gnS = g.source().ngens(q);
            long gnT = g.target().ngens(q);
            for (long mm = 0; mm < fp.cols(); ++mm)
                for (long s = 0; s < fp.rows(); ++s) {
                    if (fp.at(s, mm) == 0) continue;
                    for (long yy = 0; yy < gnS; ++yy)
                        for (long u = 0; u < gnT; ++u) {
                            if (gq.at(u, yy) == 0) continue;
                            out.add_at(*offT + s * gnT + u, offS + mm * gnS + yy,
                                       ring.mul(fp.at(s, mm), gq.at(u, yy)));
                        }
                }
        }
        if (!out.is_zero()) mats.emplace(t, std::move(out));
    }
    return TwoCell(src.module, tgt.module, std::move(mats));
}

TwoCell unitor_left(const Bimodule& m) {
    OdotResult am = odot_tensor(unit_cell(m.left()), m);
    std::map<int, Matrix> mats;
    for (auto& [t, blocks] : am.layout.blocks) {
        Matrix f(m.ring(), m.ngens(t), am.module.ngens(t));
        for (auto& [i, off] : blocks) {
            Matrix l = m.lact(i, t - i);
            for (long cc = 0; cc < l.cols(); ++cc)
                for (long s = 0; s < l.rows(); ++s)
                    if (!(l.at(s, cc) == 0)) f.add_at(s, off + cc, l.at(s, cc));
        }
        mats.emplace(t, std::move(f));
    }
    return TwoCell(am.module, m, std::move(mats));
}

TwoCell unitor_left_inv(const Bimodule& m) {
    OdotResult am = odot_tensor(unit_cell(m.left()), m);
    const Matrix& u = m.left().unit();
    std::map<int, Matrix> mats;
    for (auto& [t, p] : m.pieces()) {
        long g = p.ngens();
        Matrix f(m.ring(), am.module.ngens(t), g);
        long off = *find_off(am.layout, t, 0);
        for (long mm = 0; mm < g; ++mm)
            for (long s = 0; s < u.rows(); ++s)
                if (!(u.at(s, 0) == 0)) f.add_at(off + s * g + mm, mm, u.at(s, 0));
        mats.emplace(t, std::move(f));
    }
    return TwoCell(m, am.module, std::move(mats));
}

TwoCell unitor_right(const Bimodule& m) {
    OdotResult mb = odot_tensor(m, unit_cell(m.right()));
    std::map<int, Matrix> mats;
    for (auto& [t, blocks] : mb.layout.blocks) {
        Matrix f(m.ring(), m.ngens(t), mb.module.ngens(t));
        for (auto& [p, off] : blocks) {
            Matrix r = m.ract(p, t - p);
            for (long cc = 0; cc < r.cols(); ++cc)
                for (long s = 0; s < r.rows(); ++s)
                    if (!(r.at(s, cc) == 0)) f.add_at(s, off + cc, r.at(s, cc));
        }
        mats.emplace(t, std::move(f));
    }
    return TwoCell(mb.module, m, std::move(mats));
}

TwoCell unitor_right_inv(const Bimodule& m) {
    OdotResult mb = odot_tensor(m, unit_cell(m.right()));
    const Matrix& u = m.right().unit();
    long d0 = m.right().dim(0);
    std::map<int, Matrix> mats;
    for (auto& [t, p] : m.pieces()) {
        long g = p.ngens();
        Matrix f(m.ring(), mb.module.ngens(t), g);
        long off = *find_off(mb.layout, t, t);
        for (long mm = 0; mm < g; ++mm)
            for (long s = 0; s < d0; ++s)
                if (!(u.at(s, 0) == 0)) f.add_at(off + mm * d0 + s, mm, u.at(s, 0));
        mats.emplace(t, std::move(f));
    }
    return TwoCell(m, mb.module, std::move(mats));
}

AssociatorResult associator(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
    OdotResult mn = odot_tensor(m, n);
    OdotResult mn_p = odot_tensor(mn.module, p);
    OdotResult np = odot_tensor(n, p);
    OdotResult m_np = odot_tensor(m, np.module);

    std::map<int, Matrix> fwd, bwd;
    for (auto& [t, blocks] : mn_p.layout.blocks) {
        Matrix f(m.ring(), m_np.module.ngens(t), mn_p.module.ngens(t));
        for (auto& [s, offOuter] : blocks) {
            int r = t - s;  // P degree
            long gp = p.ngens(r);
            auto inner = mn.layout.blocks.find(s);
            if (inner == mn.layout.blocks.end()) continue;
            for (auto& [pp, offInner] : inner->second) {
                int q = s - pp;  // N degree
                long gm = m.ngens(pp), gn = n.ngens(q);
                long offR2 = *find_off(m_np.layout, t, pp);
                long offR1 = *find_off(np.layout, q + r, q);
                long gR1 = np.module.ngens(q + r);
                for (long mm = 0; mm < gm; ++mm)
                    for (long yy = 0; yy < gn; ++yy)
                        for (long zz = 0; zz < gp; ++zz) {
                            long src = offOuter + (offInner + mm * gn + yy) * gp + zz;
                            long dst = offR2 + mm * gR1 + offR1 + yy * gp + zz;
                            f.set(dst, src, Scalar(1));
                        }
            }
        }
        fwd.emplace(t, f);
        bwd.emplace(t, f.transpose());
    }
    TwoCell f(mn_p.module, m_np.module, std::move(fwd));
    TwoCell b(m_np.module, mn_p.module, std::move(bwd));
    return {std::move(f), std::move(b)};
}

TwoCell sigma_left(const Bimodule& m, const Bimodule& n) {
    OdotResult src = odot_tensor(shift_cell(m, 1), n);
    Bimodule tgt = shift_cell(odot_tensor(m, n).module, 1);
    std::map<int, Matrix> mats;
    for (auto& [t, g] : src.module.pieces())
        mats.emplace(t, Matrix::identity(m.ring(), g.ngens()));
    return TwoCell(src.module, tgt, std::move(mats));
}

TwoCell sigma_right(const Bimodule& m, const Bimodule& n) {
    OdotResult src = odot_tensor(m, shift_cell(n, 1));
    Bimodule tgt = shift_cell(odot_tensor(m, n).module, 1);
    std::map<int, Matrix> mats;
    for (auto& [t, blocks] : src.layout.blocks) {
        Matrix f(m.ring(), src.module.ngens(t), src.module.ngens(t));
        for (auto& [p, off] : blocks) {
            long sz = m.ngens(p) * n.ngens(t - 1 - p);
            Scalar sg = parity_sign(p);
            for (long s = 0; s < sz; ++s) f.set(off + s, off + s, sg);
        }
        mats.emplace(t, std::move(f));
    }
    return TwoCell(src.module, tgt, std::move(mats));
}

NormalizedCell normalize(const Bimodule& m) {
    const Ring& ring = m.ring();
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> tos, froms;
    for (auto& [n, p] : m.pieces()) {
        long cr = p.canonical_rank();
        long nt = static_cast<long>(p.torsion().size());
        Matrix rel(ring, cr, nt);
        for (long i = 0; i < nt; ++i) rel.set(i, i, p.torsion()[static_cast<size_t>(i)]);
        if (cr > 0) pieces.emplace(n, FPModule(ring, cr, rel));
        tos.emplace(n, p.canonical_coords(Matrix::identity(ring, p.ngens())));
        if (cr > 0) froms.emplace(n, p.rep_of_canonical(Matrix::identity(ring, cr)));
    }
    auto t_of = [&](int n) -> Matrix {
        auto it = tos.find(n);
        if (it != tos.end()) return it->second;
        return Matrix(ring, pieces.count(n) ? pieces.at(n).ngens() : 0, m.ngens(n));
    };
    auto f_of = [&](int n) -> Matrix {
        auto it = froms.find(n);
        if (it != froms.end()) return it->second;
        return Matrix(ring, m.ngens(n), pieces.count(n) ? pieces.at(n).ngens() : 0);
    };

    std::map<int, Matrix> diffs;
    std::map<std::pair<int, int>, Matrix> lacts, racts;
    for (auto& [n, p] : pieces) {
        diffs.emplace(n, t_of(n - 1) * m.diff(n) * f_of(n));
        for (auto& [i, di] : m.left().dims())
            lacts.emplace(std::make_pair(i, n),
                          t_of(i + n) * m.lact(i, n) * kron(Matrix::identity(ring, di), f_of(n)));
        for (auto& [j, dj] : m.right().dims())
            racts.emplace(std::make_pair(n, j),
                          t_of(n + j) * m.ract(n, j) * kron(f_of(n), Matrix::identity(ring, dj)));
    }
    Bimodule norm(m.left(), m.right(), pieces, std::move(diffs), std::move(lacts),
                  std::move(racts));
    std::map<int, Matrix> tmats, fmats;
    for (auto& [n, p] : pieces) {
        tmats.emplace(n, t_of(n));
        fmats.emplace(n, f_of(n));
    }
    TwoCell to(m, norm, std::move(tmats));
    TwoCell from(norm, m, std::move(fmats));
    return {std::move(norm), std::move(to), std::move(from)};
}

}  // namespace odot
