#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odot/smith.hpp"

namespace odot {

// Finitely presented module coker(rel : k^nrel -> k^ngens), together with its
// normal form.  Elements are generator-coordinate column vectors; two vectors
// represent the same class iff their difference lies in the column span of
// rel.  canonical_coords is a complete invariant for classes.
class FPModule {
public:
    FPModule() : FPModule(Ring::integers(), 0) {}
    FPModule(Ring ring, long ngens) : FPModule(ring, ngens, Matrix(ring, ngens, 0)) {}
    FPModule(Ring ring, long ngens, Matrix relations);

    static FPModule free(Ring ring, long rank) { return FPModule(ring, rank); }
    // Z/n as a module over Z (n = 0 gives Z)
    static FPModule cyclic(Ring ring, const Scalar& n);

    const Ring& ring() const { return ring_; }
    long ngens() const { return ngens_; }
    const Matrix& relations() const { return rel_; }
    const SmithForm& rel_snf() const { return snf_; }

    // invariant factors that are neither units nor zero, in divisibility order
    const std::vector<Scalar>& torsion() const { return torsion_; }
    long free_rank() const { return free_rank_; }
    bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
    bool is_free_piece() const { return rel_.cols() == 0; }

    // coordinates in the normal form: one entry per torsion factor (reduced
    // mod the factor) followed by free coordinates
    Matrix canonical_coords(const Matrix& x) const;
    bool is_zero_class(const Matrix& x) const { return canonical_coords(x).is_zero(); }
    bool classes_equal(const Matrix& x, const Matrix& y) const { return is_zero_class(x - y); }
    // a generator-coordinate representative of the given normal-form coords
    Matrix rep_of_canonical(const Matrix& coords) const;
    long canonical_rank() const { return static_cast<long>(torsion_.size()) + free_rank_; }

    std::string describe() const;

    bool operator==(const FPModule& o) const {
        return ring_ == o.ring_ && ngens_ == o.ngens_ && rel_ == o.rel_;
    }

private:
    Ring ring_;
    long ngens_;
    Matrix rel_;
    SmithForm snf_;
    std::vector<Scalar> torsion_;
    std::vector<long> torsion_pos_;
    long free_rank_ = 0;
};

// Presentation of the submodule (im gens + im rel)/im rel of coker(rel);
// generators are the columns of `gens`.
FPModule subquotient(const Matrix& gens, const Matrix& rel);

FPModule direct_sum(const FPModule& a, const FPModule& b);

// Module map coker(rel_M) -> coker(rel_N) given by a matrix on generators.
// Well-definedness (matrix carries source relations into target relations)
// is checked at construction.
class ModuleMap {
public:
    ModuleMap(FPModule source, FPModule target, Matrix mat);

    static ModuleMap identity(const FPModule& m);
    static ModuleMap zero(const FPModule& source, const FPModule& target);

    const FPModule& source() const { return source_; }
    const FPModule& target() const { return target_; }
    const Matrix& mat() const { return mat_; }

    ModuleMap compose(const ModuleMap& inner) const;  // this ∘ inner
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    bool is_zero_map() const;
    bool equals(const ModuleMap& o) const;

    // kernel as a subquotient of the source; .second includes into source
    std::pair<FPModule, ModuleMap> kernel() const;
    // cokernel; .second is the projection from the target
    std::pair<FPModule, ModuleMap> cokernel() const;
    bool is_injective() const { return kernel().first.is_trivial(); }
    bool is_surjective() const { return cokernel().first.is_trivial(); }
    bool is_iso() const { return is_injective() && is_surjective(); }
    // two-sided inverse when the map is an isomorphism
    std::optional<ModuleMap> inverse() const;

private:
    FPModule source_, target_;
    Matrix mat_;
};

// Hom(M, N) as a module, with an explicit representing matrix per generator.
struct HomModule {
    FPModule module;
    std::vector<Matrix> gen_maps;
};
HomModule fp_hom(const FPModule& m, const FPModule& n);

// M ⊗ N; generator (i, j) sits at index i * N.ngens() + j.
FPModule fp_tensor(const FPModule& m, const FPModule& n);

struct IsoReport {
    bool iso = false;
    std::string detail;  // first mismatch when not isomorphic
};
IsoReport iso_test(const FPModule& m, const FPModule& n);

}  // namespace odot
