#pragma once

#include <map>
#include <string>
#include <utility>

#include "odot/complex.hpp"

namespace odot {

// Differential graded algebra with free graded pieces of finite rank and
// multiplication given by tables on the basis.  mult(i, j) is a matrix from
// the pair basis of A_i ⊗ A_j to the basis of A_{i+j}; the column for the
// pair (a, b) has index a * dim(j) + b.  The differential lowers degree by
// one.  A degree-0 concentrated algebra may additionally carry a relation
// matrix, in which case all identities are read modulo those relations;
// algebras with support outside degree 0 must be relation-free.
//
// The constructor checks shapes only.  validate_dga checks the axioms and
// reports rather than throwing, so defective tables can be inspected.
class DGAlgebra {
public:
    DGAlgebra(Ring ring, std::map<int, long> dims, std::map<int, Matrix> diffs,
              std::map<std::pair<int, int>, Matrix> mult, Matrix unit);
    DGAlgebra(Ring ring, std::map<int, long> dims, std::map<int, Matrix> diffs,
              std::map<std::pair<int, int>, Matrix> mult, Matrix unit, Matrix rel0);

    const Ring& ring() const { return ring_; }
    long dim(int n) const;
    const std::map<int, long>& dims() const { return dims_; }
    int lo() const;
    int hi() const;
    bool concentrated0() const;

    // zero matrices of the right shape when no table entry is stored
    Matrix diff(int n) const;
    Matrix mult(int i, int j) const;
    const Matrix& unit() const { return unit_; }

    bool presented() const { return rel0_.cols() > 0; }
    const Matrix& relations0() const { return rel0_; }

    // degree piece as a module (free except for a presented degree 0)
    FPModule piece(int n) const;
    ChainComplex carrier() const;

    std::string describe() const;

    bool operator==(const DGAlgebra& o) const;

private:
    Ring ring_;
    std::map<int, long> dims_;
    std::map<int, Matrix> diff_;
    std::map<std::pair<int, int>, Matrix> mult_;
    Matrix unit_;
    Matrix rel0_;
};

struct DgaReport {
    bool d2_ok = true;
    bool leibniz_ok = true;
    bool assoc_ok = true;
    bool unit_ok = true;
    bool presented_ok = true;
    std::string detail;  // first failure, with the basis tuple that broke
    bool pass() const { return d2_ok && leibniz_ok && assoc_ok && unit_ok && presented_ok; }
};

DgaReport validate_dga(const DGAlgebra& a);

// ordinary ring placed in degree 0; throws when the table fails the axioms
DGAlgebra ring_as_dga(Ring ring, long n, const Matrix& table, const Matrix& unit);
DGAlgebra ring_as_dga(Ring ring, long n, const Matrix& table, const Matrix& unit,
                      const Matrix& relations);
// the ground ring itself
DGAlgebra ground_dga(Ring ring);

// a ·op b = (-1)^{|a||b|} ba
DGAlgebra opposite(const DGAlgebra& a);

// A ⊗ B as an algebra, (x⊗y)(x'⊗y') = (-1)^{|y||x'|} xx' ⊗ yy'.
// Degree n basis is the blocks A_i ⊗ B_{n-i} in increasing i, pair (a, b)
// at block offset + a * dimB(n-i) + b; tensor_dga_layout exposes the offsets.
DGAlgebra tensor_dga(const DGAlgebra& a, const DGAlgebra& b);
// A ⊗ B^op, same layout convention
DGAlgebra enveloping(const DGAlgebra& a, const DGAlgebra& b);
TensorLayout tensor_dga_layout(const DGAlgebra& a, const DGAlgebra& b);

// homology as a DGA with zero differential, on the canonical basis of the
// homology groups.  Over a field the ring is kept.  Over the integers the
// result is a Z-algebra when every group is free and an F_p-algebra when
// every group is p-elementary for a single prime p; anything mixed throws,
// since no free graded table over one of our rings presents it.
DGAlgebra homology_dga(const DGAlgebra& a);

// Algebra map: degreewise matrices, unital, multiplicative, chain.
// Construction validates and throws with the first broken identity.
class DGAlgebraMap {
public:
    DGAlgebraMap(DGAlgebra source, DGAlgebra target, std::map<int, Matrix> mats);

    static DGAlgebraMap identity(const DGAlgebra& a);

    const DGAlgebra& source() const { return source_; }
    const DGAlgebra& target() const { return target_; }
    Matrix mat(int n) const;
    const std::map<int, Matrix>& mats() const { return mats_; }

    DGAlgebraMap compose(const DGAlgebraMap& inner) const;  // this ∘ inner
    ChainMap carrier_map() const;

private:
    DGAlgebra source_, target_;
    std::map<int, Matrix> mats_;
};

// connective cover and degree-0 homology of E, with the zig-zag legs
//   H_0(E)  <-proj-  E_+  -incl->  E
// where (E_+)_n is E_n above degree 0, ker(d_0) in degree 0 and nothing
// below.  H_0(E) is a presented degree-0 algebra over the same ring.
struct TruncationZigzag {
    DGAlgebra eplus;
    DGAlgebra h0;
    DGAlgebraMap incl;  // E_+ -> E
    DGAlgebraMap proj;  // E_+ -> H_0(E)
};
TruncationZigzag truncate_plus(const DGAlgebra& e);

}  // namespace odot
