#pragma once

#include <map>
#include <vector>

#include "odot/bimodule.hpp"

namespace odot {

// One component block of a mapping family at hom degree n: the matrix of
// F_p : X_p -> Y_{p+n} on generators, vec'd row-major into the family vector
// at the given offset.
struct HomBlock {
    int p;
    long offset;
    long rows;
    long cols;
};

struct HomLayout {
    std::map<int, std::vector<HomBlock>> blocks;
    std::map<int, long> length;  // family vector length per hom degree
};

// Graded maps out of X, computed degreewise as the full solution space of
// the linearity constraints.  Piece n is generated by the columns of
// families(n); zero_families(n) spans the families that are zero pointwise
// modulo the target presentation, and the piece is presented by their
// coordinates together with the kernel of the generator matrix.
struct HomResult {
    Bimodule arg;   // X
    Bimodule coef;  // mapped into
    Bimodule module;
    HomLayout layout;
    std::map<int, Matrix> families;
    std::map<int, Matrix> zero_families;

    long length(int n) const;
    // block F_p of the given family vectors (columns)
    Matrix component(int n, const Matrix& fam, int p) const;
    // family vectors of generator coordinates
    Matrix family_of(int n, const Matrix& coords) const;
    // presentation coordinates of family vectors; throws when a family does
    // not satisfy the linearity constraints
    Matrix coords(int n, const Matrix& fams) const;
};

// rhom(X, M): families F with F(x b) = F(x) b, X an A-B and M a C-B
// bimodule; the result is a C-A bimodule with (c F)(x) = c F(x) and
// (F a)(x) = F(a x).  d(F) = d o F - (-1)^{|F|} F o d throughout.
HomResult rhom(const Bimodule& x, const Bimodule& m);

// lhom(X, N): families f with f(a x) = (-1)^{|f||a|} a f(x), X an A-B and N
// an A-C bimodule; the result is a B-C bimodule with
// (b f)(x) = (-1)^{|b|(|f|+|x|)} f(x b) and (f c)(x) = (-1)^{|x||c|} f(x) c.
HomResult lhom(const Bimodule& x, const Bimodule& n);

// evaluation rhom(X, M) . X -> M, F (x) x |-> F(x)
TwoCell ev_rhom(const HomResult& h);
// evaluation X . lhom(X, N) -> N, x (x) f |-> (-1)^{|x||f|} f(x)
TwoCell ev_lhom(const HomResult& h);

// adjunction bijections; phi runs W . X -> M (resp. X . W -> N) on the
// module of odot_tensor and psi runs W -> hom, and each pair inverts the
// other on the nose
TwoCell curry_rhom(const HomResult& h, const Bimodule& w, const TwoCell& phi);
TwoCell uncurry_rhom(const HomResult& h, const TwoCell& psi);
TwoCell curry_lhom(const HomResult& h, const Bimodule& w, const TwoCell& phi);
TwoCell uncurry_lhom(const HomResult& h, const TwoCell& psi);

// composition  rhom(U, V) . rhom(T, U) -> rhom(T, V),  g (x) f |-> g o f
TwoCell compose_rhom(const HomResult& outer, const HomResult& inner, const HomResult& total);

}  // namespace odot
