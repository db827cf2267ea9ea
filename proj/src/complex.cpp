#include "odot/complex.hpp"

#include <sstream>

#include "odot/linsolve.hpp"

namespace odot {

ChainComplex::ChainComplex(Ring ring, std::map<int, FPModule> pieces, std::map<int, Matrix> diffs)
    : ring_(ring), pieces_(std::move(pieces)), diffs_(std::move(diffs)), zero_(ring, 0) {
    // drop trivial entries so support bounds stay tight
    for (auto it = pieces_.begin(); it != pieces_.end();) {
        if (it->second.ngens() == 0)
            it = pieces_.erase(it);
        else
            ++it;
    }
    for (auto it = diffs_.begin(); it != diffs_.end();) {
        if (it->second.rows() == 0 || it->second.cols() == 0)
            it = diffs_.erase(it);
        else
            ++it;
    }
    validate();
}

void ChainComplex::validate() const {
    for (const auto& [n, m] : pieces_)
        if (m.ring() != ring_) throw error("complex: piece ring mismatch");
    for (const auto& [n, d] : diffs_) {
        if (d.ring() != ring_) throw error("complex: differential ring mismatch");
        if (d.cols() != piece(n).ngens() || d.rows() != piece(n - 1).ngens()) {
            std::ostringstream os;
            os << "complex: differential at degree " << n << " has shape " << d.rows() << "x" << d.cols()
               << ", expected " << piece(n - 1).ngens() << "x" << piece(n).ngens();
            throw error(os.str());
        }
        // d carries relations into relations
        if (piece(n).relations().cols() > 0 && !piece(n - 1).canonical_coords(d * piece(n).relations()).is_zero()) {
            std::ostringstream os;
            os << "complex: differential at degree " << n << " is not well defined on the presentation";
            throw error(os.str());
        }
    }
    for (const auto& [n, d] : diffs_) {
        Matrix dd = diff(n - 1) * d;
        if (dd.rows() == 0 || dd.cols() == 0) continue;
        if (!piece(n - 2).canonical_coords(dd).is_zero()) {
            std::ostringstream os;
            os << "complex: d∘d nonzero from degree " << n;
            throw error(os.str());
        }
    }
}

ChainComplex ChainComplex::single(Ring ring, const FPModule& m, int degree) {
    std::map<int, FPModule> pieces;
    if (m.ngens() > 0) pieces.emplace(degree, m);
    return ChainComplex(ring, std::move(pieces), {});
}

const FPModule& ChainComplex::piece(int n) const {
    auto it = pieces_.find(n);
    return it == pieces_.end() ? zero_ : it->second;
}

Matrix ChainComplex::diff(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return Matrix(ring_, piece(n - 1).ngens(), piece(n).ngens());
}

int ChainComplex::lo() const {
    if (pieces_.empty()) return 0;
    return pieces_.begin()->first;
}

int ChainComplex::hi() const {
    if (pieces_.empty()) return -1;
    return pieces_.rbegin()->first;
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> out;
    for (const auto& [n, m] : pieces_) out.push_back(n);
    return out;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (ring_ != o.ring_ || pieces_.size() != o.pieces_.size()) return false;
    for (const auto& [n, m] : pieces_) {
        auto it = o.pieces_.find(n);
        if (it == o.pieces_.end() || !(it->second == m)) return false;
    }
    for (const auto& [n, m] : pieces_)
        if (diff(n) != o.diff(n)) return false;
    return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> mats)
    : source_(std::move(source)), target_(std::move(target)), mats_(std::move(mats)) {
    if (source_.ring() != target_.ring()) throw error("chain map: ring mismatch");
    for (auto it = mats_.begin(); it != mats_.end();) {
        if (it->second.rows() == 0 || it->second.cols() == 0)
            it = mats_.erase(it);
        else
            ++it;
    }
    for (const auto& [n, m] : mats_) {
        if (m.rows() != target_.piece(n).ngens() || m.cols() != source_.piece(n).ngens()) {
            std::ostringstream os;
            os << "chain map: component at degree " << n << " has shape " << m.rows() << "x" << m.cols();
            throw error(os.str());
        }
        if (source_.piece(n).relations().cols() > 0 &&
            !target_.piece(n).canonical_coords(m * source_.piece(n).relations()).is_zero()) {
            std::ostringstream os;
            os << "chain map: component at degree " << n << " not well defined";
            throw error(os.str());
        }
    }
    // commutes with the differentials modulo target relations
    for (int n : source_.degrees()) {
        Matrix lhs = target_.diff(n) * mat(n);
        Matrix rhs = mat(n - 1) * source_.diff(n);
        if (lhs.rows() == 0 || lhs.cols() == 0) continue;
        if (!target_.piece(n - 1).canonical_coords(lhs - rhs).is_zero()) {
            std::ostringstream os;
            os << "chain map: does not commute with d at degree " << n;
            throw error(os.str());
        }
    }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::map<int, Matrix> mats;
    for (int n : c.degrees()) mats.emplace(n, Matrix::identity(c.ring(), c.piece(n).ngens()));
    return ChainMap(c, c, std::move(mats));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(source, target, {});
}

Matrix ChainMap::mat(int n) const {
    auto it = mats_.find(n);
    if (it != mats_.end()) return it->second;
    return Matrix(source_.ring(), target_.piece(n).ngens(), source_.piece(n).ngens());
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
    if (!(inner.target_ == source_)) throw error("chain map compose: middle complex mismatch");
    std::map<int, Matrix> mats;
    for (int n : inner.source_.degrees()) mats.emplace(n, mat(n) * inner.mat(n));
    return ChainMap(inner.source_, target_, std::move(mats));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) throw error("chain map add: complex mismatch");
    std::map<int, Matrix> mats;
    for (int n : source_.degrees()) mats.emplace(n, mat(n) + o.mat(n));
    return ChainMap(source_, target_, std::move(mats));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + o.scaled(Scalar(-1)); }

ChainMap ChainMap::scaled(const Scalar& c) const {
    std::map<int, Matrix> mats;
    for (const auto& [n, m] : mats_) mats.emplace(n, m.scaled(c));
    return ChainMap(source_, target_, std::move(mats));
}

bool ChainMap::is_zero_map() const {
    for (const auto& [n, m] : mats_)
        if (!target_.piece(n).canonical_coords(m).is_zero()) return false;
    return true;
}

bool ChainMap::equals(const ChainMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) return false;
    for (int n : source_.degrees())
        if (!target_.piece(n).canonical_coords(mat(n) - o.mat(n)).is_zero()) return false;
    return true;
}

const FPModule& HomologyResult::group(int n) const {
    auto it = groups_.find(n);
    return it == groups_.end() ? zero_ : it->second;
}

const Matrix& HomologyResult::reps(int n) const {
    auto it = reps_.find(n);
    if (it == reps_.end()) throw error("homology: no representatives at this degree");
    return it->second;
}

bool HomologyResult::all_trivial() const {
    for (const auto& [n, g] : groups_)
        if (!g.is_trivial()) return false;
    return true;
}

std::vector<int> HomologyResult::nonzero_degrees() const {
    std::vector<int> out;
    for (const auto& [n, g] : groups_)
        if (!g.is_trivial()) out.push_back(n);
    return out;
}

std::optional<Matrix> HomologyResult::classify(int n, const Matrix& cycle) const {
    auto pg = piece_gens_.find(n);
    if (pg == piece_gens_.end()) {
        if (cycle.rows() == 0) return Matrix(ring_, 0, cycle.cols());
        return std::nullopt;
    }
    if (cycle.rows() != pg->second) return std::nullopt;
    return solve_mod(reps_.at(n), bnd_.at(n), cycle);
}

HomologyResult homology(const ChainComplex& c) {
    HomologyResult out(c.ring());
    for (int n : c.degrees()) {
        const FPModule& piece = c.piece(n);
        // cycles: x with d x ≡ 0 modulo the presentation one degree down
        Matrix k = kernel_basis(hstack(c.diff(n), c.piece(n - 1).relations()));
        Matrix cyc = k.sub(0, piece.ngens(), 0, k.cols());
        // boundaries together with the ambient relations
        Matrix bnd = hstack(c.diff(n + 1), piece.relations());
        out.groups_.emplace(n, subquotient(cyc, bnd));
        out.reps_.emplace(n, cyc);
        out.bnd_.emplace(n, bnd);
        out.piece_gens_.emplace(n, piece.ngens());
    }
    return out;
}

ModuleMap induced_map(const HomologyResult& hs, const HomologyResult& ht, const ChainMap& f, int n) {
    const FPModule& src = hs.group(n);
    const FPModule& tgt = ht.group(n);
    Matrix m(f.source().ring(), tgt.ngens(), src.ngens());
    if (src.ngens() > 0) {
        Matrix pushed = f.mat(n) * hs.reps(n);
        std::optional<Matrix> coords = ht.classify(n, pushed);
        if (!coords) throw error("induced_map: image of a cycle fails to classify");
        m = *coords;
    }
    return ModuleMap(src, tgt, m);
}

ConeResult cone(const ChainMap& f) {
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    const Ring ring = src.ring();
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    int lo = std::min(src.lo(), tgt.lo());
    int hi = std::max(src.hi() + 1, tgt.hi());
    for (int n = lo; n <= hi; ++n) {
        FPModule p = direct_sum(tgt.piece(n), src.piece(n - 1));
        if (p.ngens() > 0) pieces.emplace(n, p);
    }
    for (int n = lo; n <= hi; ++n) {
        const long rt = tgt.piece(n - 1).ngens(), rs = src.piece(n - 2).ngens();
        const long ct = tgt.piece(n).ngens(), cs = src.piece(n - 1).ngens();
        if ((rt + rs) == 0 || (ct + cs) == 0) continue;
        Matrix d(ring, rt + rs, ct + cs);
        d.set_block(0, 0, tgt.diff(n));
        d.set_block(0, ct, f.mat(n - 1));
        d.set_block(rt, ct, -src.diff(n - 1));
        diffs.emplace(n, d);
    }
    ChainComplex cx(ring, std::move(pieces), std::move(diffs));
    std::map<int, Matrix> incl_mats, proj_mats;
    for (int n : cx.degrees()) {
        const long ct = tgt.piece(n).ngens(), cs = src.piece(n - 1).ngens();
        Matrix in(ring, ct + cs, ct);
        in.set_block(0, 0, Matrix::identity(ring, ct));
        incl_mats.emplace(n, in);
        Matrix pr(ring, cs, ct + cs);
        pr.set_block(0, ct, Matrix::identity(ring, cs));
        proj_mats.emplace(n, pr);
    }
    ChainMap incl(tgt, cx, std::move(incl_mats));
    ChainMap proj(cx, shift(src, 1), std::move(proj_mats));
    return {std::move(cx), std::move(incl), std::move(proj)};
}

ChainComplex shift(const ChainComplex& c, int k) {
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    for (const auto& [n, m] : c.pieces()) pieces.emplace(n + k, m);
    const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (int n : c.degrees()) {
        Matrix d = c.diff(n);
        if (d.rows() > 0 && d.cols() > 0) diffs.emplace(n + k, d.scaled(sign));
    }
    return ChainComplex(c.ring(), std::move(pieces), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
    std::map<int, Matrix> mats;
    for (const auto& [n, m] : f.mats()) mats.emplace(n + k, m);
    return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(mats));
}

QuasiIsoReport is_quasi_iso(const ChainMap& f) {
    ConeResult c = cone(f);
    HomologyResult h = homology(c.complex);
    QuasiIsoReport out;
    out.failing_degrees = h.nonzero_degrees();
    out.quasi_iso = out.failing_degrees.empty();
    for (const auto& [n, g] : h.groups())
        if (!g.is_trivial()) out.cone_homology.emplace(n, g);
    return out;
}

std::optional<std::map<int, Matrix>> chain_homotopy_solve(const ChainMap& f, const ChainMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw error("homotopy solve: maps must be parallel");
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    const Ring ring = src.ring();
    MapSolver solver(ring);
    std::map<int, int> hvar;
    for (int n : src.degrees()) {
        if (tgt.piece(n + 1).ngens() == 0) continue;
        hvar[n] = solver.add_var(tgt.piece(n + 1).ngens(), src.piece(n).ngens());
    }
    for (int n : src.degrees()) {
        // d h_n + h_{n-1} d = (f - g)_n  mod relations at degree n
        std::vector<MapSolver::Term> terms;
        if (hvar.count(n))
            terms.push_back({tgt.diff(n + 1), hvar[n], Matrix::identity(ring, src.piece(n).ngens())});
        if (hvar.count(n - 1))
            terms.push_back({Matrix::identity(ring, tgt.piece(n).ngens()), hvar[n - 1], src.diff(n)});
        Matrix rhs = f.mat(n) - g.mat(n);
        if (terms.empty()) {
            if (!tgt.piece(n).canonical_coords(rhs).is_zero()) return std::nullopt;
            continue;
        }
        solver.add_constraint(std::move(terms), rhs, tgt.piece(n).relations());
        // well-definedness of h_n on the presentation
        if (hvar.count(n) && src.piece(n).relations().cols() > 0)
            solver.add_constraint({{Matrix::identity(ring, tgt.piece(n + 1).ngens()), hvar[n], src.piece(n).relations()}},
                                  Matrix(ring, tgt.piece(n + 1).ngens(), src.piece(n).relations().cols()),
                                  tgt.piece(n + 1).relations());
    }
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    std::map<int, Matrix> h;
    for (const auto& [n, v] : hvar) h.emplace(n, (*sol)[static_cast<size_t>(v)]);
    return h;
}

bool is_homotopy_between(const ChainMap& f, const ChainMap& g, const std::map<int, Matrix>& h) {
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    auto hat = [&](int n) -> Matrix {
        auto it = h.find(n);
        if (it != h.end()) return it->second;
        return Matrix(src.ring(), tgt.piece(n + 1).ngens(), src.piece(n).ngens());
    };
    for (int n : src.degrees()) {
        Matrix lhs = tgt.diff(n + 1) * hat(n) + hat(n - 1) * src.diff(n);
        if (!tgt.piece(n).canonical_coords(lhs - (f.mat(n) - g.mat(n))).is_zero()) return false;
    }
    return true;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring() != b.ring()) throw error("complex sum: ring mismatch");
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    int lo = std::min(a.is_zero() ? 0 : a.lo(), b.is_zero() ? 0 : b.lo());
    int hi = std::max(a.is_zero() ? -1 : a.hi(), b.is_zero() ? -1 : b.hi());
    for (int n = lo; n <= hi; ++n) {
        FPModule p = direct_sum(a.piece(n), b.piece(n));
        if (p.ngens() > 0) pieces.emplace(n, p);
        Matrix d = diag_cat(a.diff(n), b.diff(n));
        if (d.rows() > 0 && d.cols() > 0) diffs.emplace(n, d);
    }
    return ChainComplex(a.ring(), std::move(pieces), std::move(diffs));
}

long TensorLayout::offset(int n, int i) const {
    auto it = blocks.find(n);
    if (it == blocks.end()) throw error("tensor layout: no such degree");
    for (const auto& [bi, off] : it->second)
        if (bi == i) return off;
    throw error("tensor layout: no such block");
}

TensorComplex tensor_k(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring() != b.ring()) throw error("tensor: ring mismatch");
    const Ring ring = a.ring();
    TensorComplex out{ChainComplex(ring), {}};
    if (a.is_zero() || b.is_zero()) return out;
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    std::map<int, std::vector<std::pair<int, long>>> blocks;
    const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
    for (int n = lo; n <= hi; ++n) {
        FPModule acc(ring, 0);
        std::vector<std::pair<int, long>> layout;
        for (int i = a.lo(); i <= a.hi(); ++i) {
            const long ga = a.piece(i).ngens(), gb = b.piece(n - i).ngens();
            if (ga == 0 || gb == 0) continue;
            layout.emplace_back(i, acc.ngens());
            acc = direct_sum(acc, fp_tensor(a.piece(i), b.piece(n - i)));
        }
        if (acc.ngens() == 0) continue;
        pieces.emplace(n, acc);
        blocks.emplace(n, std::move(layout));
    }
    for (int n = lo; n <= hi; ++n) {
        if (!pieces.count(n) || !pieces.count(n - 1)) continue;
        Matrix d(ring, pieces.at(n - 1).ngens(), pieces.at(n).ngens());
        for (const auto& [i, off] : blocks.at(n)) {
            const long ga = a.piece(i).ngens(), gb = b.piece(n - i).ngens();
            // d(x ⊗ y) = dx ⊗ y + (-1)^i x ⊗ dy
            for (const auto& [ti, toff] : blocks.at(n - 1)) {
                if (ti == i - 1) {
                    Matrix blockm = kron(a.diff(i), Matrix::identity(ring, gb));
                    for (long r = 0; r < blockm.rows(); ++r)
                        for (long c = 0; c < blockm.cols(); ++c)
                            if (blockm.at(r, c) != 0) d.add_at(toff + r, off + c, blockm.at(r, c));
                }
                if (ti == i) {
                    Matrix blockm = kron(Matrix::identity(ring, ga), b.diff(n - i));
                    const Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
                    for (long r = 0; r < blockm.rows(); ++r)
                        for (long c = 0; c < blockm.cols(); ++c)
                            if (blockm.at(r, c) != 0) d.add_at(toff + r, off + c, ring.mul(sign, blockm.at(r, c)));
                }
            }
        }
        if (d.rows() > 0 && d.cols() > 0) diffs.emplace(n, d);
    }
    out.complex = ChainComplex(ring, std::move(pieces), std::move(diffs));
    out.layout.blocks = std::move(blocks);
    return out;
}

}  // namespace odot
