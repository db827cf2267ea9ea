#pragma once

#include <map>
#include <utility>

#include "odot/dga.hpp"

namespace odot {

// One-cell: a differential graded A-B-bimodule.  Pieces are finitely
// presented k-modules; the differential and both action tables are given on
// generators and every axiom is checked modulo the piece relations at
// construction, so a Bimodule that exists is valid.  lact(i, n) maps the
// pair basis of A_i ⊗ M_n, column (a, m) = a * ngens(n) + m, into M_{i+n};
// ract(n, j) maps M_n ⊗ B_j, column (m, b) = m * dim(j) + b, into M_{n+j}.
class Bimodule {
public:
    Bimodule(DGAlgebra left, DGAlgebra right, std::map<int, FPModule> pieces,
             std::map<int, Matrix> diffs, std::map<std::pair<int, int>, Matrix> lact,
             std::map<std::pair<int, int>, Matrix> ract);

    const DGAlgebra& left() const { return left_; }
    const DGAlgebra& right() const { return right_; }
    const Ring& ring() const { return left_.ring(); }

    bool has_piece(int n) const { return pieces_.count(n) > 0; }
    const FPModule& piece(int n) const;
    long ngens(int n) const;
    const std::map<int, FPModule>& pieces() const { return pieces_; }
    std::vector<int> degrees() const;
    int lo() const;
    int hi() const;
    bool is_zero() const;

    Matrix diff(int n) const;
    Matrix lact(int i, int n) const;
    Matrix ract(int n, int j) const;

    ChainComplex carrier() const;

    bool operator==(const Bimodule& o) const;

private:
    DGAlgebra left_, right_;
    std::map<int, FPModule> pieces_;
    std::map<int, Matrix> diff_;
    std::map<std::pair<int, int>, Matrix> lact_, ract_;
    FPModule empty_;  // shared zero piece for degrees outside pieces_
};

// A as an A-A-bimodule
Bimodule unit_cell(const DGAlgebra& a);

// Two-cell: degree-zero map of bimodules, one generator matrix per degree,
// linear over both actions and commuting with d, all modulo target
// relations.  Construction validates and throws on the first broken axiom.
class TwoCell {
public:
    TwoCell(Bimodule source, Bimodule target, std::map<int, Matrix> mats);

    static TwoCell identity(const Bimodule& m);
    static TwoCell zero(const Bimodule& source, const Bimodule& target);

    const Bimodule& source() const { return source_; }
    const Bimodule& target() const { return target_; }
    Matrix mat(int n) const;
    const std::map<int, Matrix>& mats() const { return mats_; }

    TwoCell compose(const TwoCell& inner) const;  // this ∘ inner
    TwoCell operator+(const TwoCell& o) const;
    TwoCell operator-(const TwoCell& o) const;
    TwoCell scaled(const Scalar& c) const;

    bool is_zero_cell() const;
    bool equals(const TwoCell& o) const;

    ChainMap carrier_map() const;
    bool is_iso() const;
    std::optional<TwoCell> inverse() const;

private:
    Bimodule source_, target_;
    std::map<int, Matrix> mats_;
};

// Σ^k: pieces move up by k, d picks up (-1)^k, the left action of a degree
// i element picks up (-1)^{ik}, the right action is untouched.
Bimodule shift_cell(const Bimodule& m, int k);
TwoCell shift_cell(const TwoCell& f, int k);

// M ⊙_B N.  Degree n is presented on the pair generators of the blocks
// M_p ⊗ N_{n-p} (increasing p, layout recorded), with the piece relations
// and the balancing columns  m·b ⊗ y − m ⊗ b·y  as relations.
struct OdotResult {
    Bimodule module;
    TensorLayout layout;
};
OdotResult odot_tensor(const Bimodule& m, const Bimodule& n);

// horizontal composite f ⊙ g acting blockwise as f_p ⊗ g_q; both cells have
// degree zero, so no Koszul sign appears
TwoCell odot_cells(const TwoCell& f, const TwoCell& g);

// unitor two-cells A ⊙ M → M and M ⊙ B → M with explicit inverses;
// sources are the modules of odot(unit_cell(A), M) / odot(M, unit_cell(B))
TwoCell unitor_left(const Bimodule& m);
TwoCell unitor_left_inv(const Bimodule& m);
TwoCell unitor_right(const Bimodule& m);
TwoCell unitor_right_inv(const Bimodule& m);

// associator (M ⊙ N) ⊙ P ⇄ M ⊙ (N ⊙ P), a permutation of pair generators
struct AssociatorResult {
    TwoCell fwd;
    TwoCell bwd;
};
AssociatorResult associator(const Bimodule& m, const Bimodule& n, const Bimodule& p);

// suspension interchange: ΣM ⊙ N → Σ(M ⊙ N) is the identity relabeling,
// M ⊙ ΣN → Σ(M ⊙ N) carries (-1)^{|m|} per block; composing one against
// the other realizes the -1 of the shift interchange
TwoCell sigma_left(const Bimodule& m, const Bimodule& n);
TwoCell sigma_right(const Bimodule& m, const Bimodule& n);

// isomorphic copy on canonical coordinates (diagonal relations only),
// with the change-of-basis two-cells in both directions
struct NormalizedCell {
    Bimodule module;
    TwoCell to_norm;
    TwoCell from_norm;
};
NormalizedCell normalize(const Bimodule& m);

}  // namespace odot
