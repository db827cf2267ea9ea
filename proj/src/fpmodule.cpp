#include "odot/fpmodule.hpp"

#include <sstream>

#include "odot/linsolve.hpp"

namespace odot {

FPModule::FPModule(Ring ring, long ngens, Matrix relations) : ring_(ring), ngens_(ngens), rel_(std::move(relations)) {
    if (rel_.ring() != ring_) throw error("module: relation ring mismatch");
    if (rel_.rows() != ngens_) throw error("module: relation rows must equal generator count");
    snf_ = smith_normal_form(rel_);
    if (rel_.cols() > snf_.rank) {
        // drop redundant relation columns: Uinv * D spans the same submodule
        Matrix compact(ring_, ngens_, snf_.rank);
        for (long i = 0; i < snf_.rank; ++i)
            for (long r = 0; r < ngens_; ++r)
                compact.set(r, i, ring_.mul(snf_.Uinv.at(r, i), snf_.diag[static_cast<size_t>(i)]));
        rel_ = std::move(compact);
        snf_ = smith_normal_form(rel_);
    }
    for (long i = 0; i < snf_.rank; ++i) {
        const Scalar& d = snf_.diag[static_cast<size_t>(i)];
        if (!ring_.is_unit(d)) {
            torsion_.push_back(d);
            torsion_pos_.push_back(i);
        }
    }
    free_rank_ = ngens_ - snf_.rank;
}

FPModule FPModule::cyclic(Ring ring, const Scalar& n) {
    if (n == 0) return FPModule(ring, 1);
    Matrix rel(ring, 1, 1);
    rel.set(0, 0, n);
    return FPModule(ring, 1, rel);
}

Matrix FPModule::canonical_coords(const Matrix& x) const {
    if (x.rows() != ngens_) throw error("canonical_coords: bad element length");
    Matrix u = snf_.U * x;
    Matrix out(ring_, canonical_rank(), x.cols());
    for (size_t k = 0; k < torsion_.size(); ++k) {
        const mpz_class d = torsion_[k].get_num();
        for (long c = 0; c < x.cols(); ++c) {
            mpz_class r = u.at(torsion_pos_[k], c).get_num() % d;
            if (r < 0) r += d;
            out.set(static_cast<long>(k), c, Scalar(r));
        }
    }
    for (long j = 0; j < free_rank_; ++j)
        for (long c = 0; c < x.cols(); ++c)
            out.set(static_cast<long>(torsion_.size()) + j, c, u.at(snf_.rank + j, c));
    return out;
}

Matrix FPModule::rep_of_canonical(const Matrix& coords) const {
    if (coords.rows() != canonical_rank()) throw error("rep_of_canonical: bad length");
    Matrix u(ring_, ngens_, coords.cols());
    for (size_t k = 0; k < torsion_.size(); ++k)
        for (long c = 0; c < coords.cols(); ++c) u.set(torsion_pos_[k], c, coords.at(static_cast<long>(k), c));
    for (long j = 0; j < free_rank_; ++j)
        for (long c = 0; c < coords.cols(); ++c)
            u.set(snf_.rank + j, c, coords.at(static_cast<long>(torsion_.size()) + j, c));
    return snf_.Uinv * u;
}

std::string FPModule::describe() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank_ > 0) {
        sep();
        os << ring_.name();
        if (free_rank_ > 1) os << "^" << free_rank_;
    }
    for (const Scalar& d : torsion_) {
        sep();
        os << ring_.name() << "/" << d.get_str();
    }
    return os.str();
}

FPModule subquotient(const Matrix& gens, const Matrix& rel) {
    if (gens.rows() != rel.rows()) throw error("subquotient: ambient rank mismatch");
    Matrix k = kernel_basis(hstack(gens, rel));
    return FPModule(gens.ring(), gens.cols(), k.sub(0, gens.cols(), 0, k.cols()));
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
    if (a.ring() != b.ring()) throw error("direct_sum: ring mismatch");
    return FPModule(a.ring(), a.ngens() + b.ngens(), diag_cat(a.relations(), b.relations()));
}

ModuleMap::ModuleMap(FPModule source, FPModule target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
    if (source_.ring() != target_.ring() || mat_.ring() != source_.ring()) throw error("module map: ring mismatch");
    if (mat_.rows() != target_.ngens() || mat_.cols() != source_.ngens()) throw error("module map: shape mismatch");
    if (source_.relations().cols() > 0) {
        Matrix carried = mat_ * source_.relations();
        if (!target_.canonical_coords(carried).is_zero())
            throw error("module map: source relations not carried into target relations");
    }
}

ModuleMap ModuleMap::identity(const FPModule& m) {
    return ModuleMap(m, m, Matrix::identity(m.ring(), m.ngens()));
}

ModuleMap ModuleMap::zero(const FPModule& source, const FPModule& target) {
    return ModuleMap(source, target, Matrix(source.ring(), target.ngens(), source.ngens()));
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (!(inner.target_ == source_)) throw error("compose: middle module mismatch");
    return ModuleMap(inner.source_, target_, mat_ * inner.mat_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) throw error("map add: module mismatch");
    return ModuleMap(source_, target_, mat_ + o.mat_);
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) throw error("map sub: module mismatch");
    return ModuleMap(source_, target_, mat_ - o.mat_);
}

bool ModuleMap::is_zero_map() const { return target_.canonical_coords(mat_).is_zero(); }

bool ModuleMap::equals(const ModuleMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) return false;
    return target_.canonical_coords(mat_ - o.mat_).is_zero();
}

std::pair<FPModule, ModuleMap> ModuleMap::kernel() const {
    Matrix k = kernel_basis(hstack(mat_, target_.relations()));
    Matrix gens = k.sub(0, source_.ngens(), 0, k.cols());
    FPModule ker = subquotient(gens, source_.relations());
    return {ker, ModuleMap(ker, source_, gens)};
}

std::pair<FPModule, ModuleMap> ModuleMap::cokernel() const {
    FPModule coker(target_.ring(), target_.ngens(), hstack(target_.relations(), mat_));
    return {coker, ModuleMap(target_, coker, Matrix::identity(target_.ring(), target_.ngens()))};
}

std::optional<ModuleMap> ModuleMap::inverse() const {
    // solve on canonical coordinates, where relations are a small diagonal
    const Ring& ring = source_.ring();
    const long cs = source_.canonical_rank(), ct = target_.canonical_rank();
    auto diag_rel = [&](const FPModule& m) {
        Matrix r(ring, m.canonical_rank(), static_cast<long>(m.torsion().size()));
        for (size_t i = 0; i < m.torsion().size(); ++i)
            r.set(static_cast<long>(i), static_cast<long>(i), m.torsion()[i]);
        return r;
    };
    Matrix rel_s = diag_rel(source_), rel_t = diag_rel(target_);
    Matrix cf =
        target_.canonical_coords(mat_ * source_.rep_of_canonical(Matrix::identity(ring, cs)));
    MapSolver solver(ring);
    int b = solver.add_var(cs, ct);
    const Matrix id_s = Matrix::identity(ring, cs);
    const Matrix id_t = Matrix::identity(ring, ct);
    // B is well defined, a left inverse and a right inverse, all mod torsion
    if (rel_t.cols() > 0)
        solver.add_constraint({{id_s, b, rel_t}}, Matrix(ring, cs, rel_t.cols()), rel_s);
    solver.add_constraint({{id_s, b, cf}}, id_s, rel_s);
    solver.add_constraint({{cf, b, id_t}}, id_t, rel_t);
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    Matrix back = source_.rep_of_canonical(
        (*sol)[0] * target_.canonical_coords(Matrix::identity(ring, target_.ngens())));
    return ModuleMap(target_, source_, back);
}

HomModule fp_hom(const FPModule& m, const FPModule& n) {
    if (m.ring() != n.ring()) throw error("fp_hom: ring mismatch");
    const Ring ring = m.ring();
    const long gm = m.ngens(), qm = m.relations().cols();
    const long gn = n.ngens(), sn = n.relations().cols();
    // solutions of F * relM = relN * G, projected to F
    Matrix lhs = hstack(kron(Matrix::identity(ring, gn), m.relations().transpose()),
                        -kron(n.relations(), Matrix::identity(ring, qm)));
    Matrix k = kernel_basis(lhs);
    Matrix kf = k.sub(0, gn * gm, 0, k.cols());
    // homs that vanish on classes: F = relN * H
    Matrix trivial = kron(n.relations(), Matrix::identity(ring, gm));
    HomModule out{subquotient(kf, trivial), {}};
    for (long j = 0; j < kf.cols(); ++j) out.gen_maps.push_back(Matrix::unvec(kf.col(j), gn, gm));
    (void)sn;
    return out;
}

FPModule fp_tensor(const FPModule& m, const FPModule& n) {
    if (m.ring() != n.ring()) throw error("fp_tensor: ring mismatch");
    const Ring ring = m.ring();
    Matrix rel = hstack(kron(m.relations(), Matrix::identity(ring, n.ngens())),
                        kron(Matrix::identity(ring, m.ngens()), n.relations()));
    return FPModule(ring, m.ngens() * n.ngens(), rel);
}

IsoReport iso_test(const FPModule& m, const FPModule& n) {
    if (m.ring() != n.ring()) return {false, "coefficient rings differ"};
    std::ostringstream os;
    if (m.free_rank() != n.free_rank()) {
        os << "free rank " << m.free_rank() << " vs " << n.free_rank();
        return {false, os.str()};
    }
    if (m.torsion().size() != n.torsion().size()) {
        os << "torsion factor count " << m.torsion().size() << " vs " << n.torsion().size();
        return {false, os.str()};
    }
    for (size_t i = 0; i < m.torsion().size(); ++i)
        if (m.torsion()[i] != n.torsion()[i]) {
            os << "invariant factor " << m.torsion()[i].get_str() << " vs " << n.torsion()[i].get_str()
               << " at position " << i;
            return {false, os.str()};
        }
    return {true, ""};
}

}  // namespace odot
