#pragma once

#include <optional>
#include <vector>

#include "odot/bimodule.hpp"

namespace odot {

// Free rank-one bimodule A (x) B.  layout records the left-degree blocks:
// the basis element a_alpha (x) b_beta of degree i + j sits at column
// offset(i+j, i) + alpha * dim B_j + beta.
struct FreeCell {
    Bimodule module;
    TensorLayout layout;
};
FreeCell free_cell(const DGAlgebra& a, const DGAlgebra& b);

Bimodule zero_bimodule(const DGAlgebra& a, const DGAlgebra& b);

// direct sum of k copies; copy j of a degree-t generator u sits at column
// j * ngens(t) + u
Bimodule sum_copies(const Bimodule& m, long k);

struct SumCell {
    Bimodule module;
    TwoCell in1, in2;  // inclusions
    TwoCell pr1, pr2;  // projections
};
SumCell direct_sum(const Bimodule& a, const Bimodule& b);

// cone(f)_t = target_t ++ source_{t-1} in that generator order,
// d(y, x) = (dy + fx, -dx); the source block carries the shift signs
struct BimoduleCone {
    Bimodule module;
    TwoCell incl;  // target -> cone
};
BimoduleCone cone_cell(const TwoCell& f);

struct PushoutResult {
    Bimodule module;  // generators of X then Y, divided by (f z, -g z)
    TwoCell from_x, from_y;
};
PushoutResult pushout(const TwoCell& f, const TwoCell& g);

enum class CellKind { Sphere, Disk, Interval };

// one attachment stage: `cells` many (q+1)-cells glued along a map from a
// sum of q-spheres into the previous stage
struct CellAttachment {
    int q;
    long cells;
    TwoCell attach;
};

struct CellStructure {
    std::vector<CellAttachment> stages;
    long total_cells() const;
};

struct CellModule {
    Bimodule module;
    CellStructure cells;
};

// S^n: one free generator in degree n.  D^n: generators in degrees n and
// n-1 with d(top) = bottom.  I: generators <0>, <1> in degree 0 and <I> in
// degree 1 with d<I> = <0> - <1>.
CellModule cell_generators(const DGAlgebra& a, const DGAlgebra& b, int n, CellKind kind);

// sum of n-spheres -> m, the j-th sphere generator landing on the j-th
// column of `cycles` (generator coordinates in m.piece(n), cycles mod
// relations)
TwoCell sphere_map(const DGAlgebra& a, const DGAlgebra& b, int n, const Bimodule& m,
                   const Matrix& cycles);

// disk D^n -> m, top generator landing on the column (any element)
TwoCell disk_map(const DGAlgebra& a, const DGAlgebra& b, int n, const Bimodule& m,
                 const Matrix& element);

// pushout along sum of (S^q -> D^{q+1}); one new cell per cycle column
CellModule attach_cells(const CellModule& c, int q, const Matrix& cycles);

struct Window {
    int lo, hi;
    long stages;
    Window(int lo, int hi, long stages);
};

// certified degree range of cone acyclicity: H_n(cone q) = 0 for all
// lo <= n <= hi; full when the whole window was certified
struct Certificate {
    int lo, hi;
    bool full;
};

struct CofibrantReplacement {
    CellModule cell;
    TwoCell map;  // cell.module -> M
    Certificate cert;
};
CofibrantReplacement cofibrant_replace(const Bimodule& m, const Window& w);

// M (x) I with structure maps; i0, i1 include at <0>, <1>, r is the common
// retraction collapsing <I>
struct IntervalData {
    Bimodule module;
    TwoCell i0, i1;
    TwoCell r;
};
IntervalData interval_tensor(const Bimodule& m);

struct LiftingProblem {
    TwoCell i;       // A' -> B'
    TwoCell p;       // X -> Y
    TwoCell top;     // A' -> X
    TwoCell bottom;  // B' -> Y
};
// strict lift L: B' -> X with L i = top and p L = bottom, as one exact
// linear system
std::optional<TwoCell> lifting_solve(const LiftingProblem& pr);

// H_n(e) mono and H_{n+1}(e) epi
bool help_homology_check(const TwoCell& e, int n);

// homotopy extension and lifting against S^n -> D^{n+1}, decided as a
// containment of solution spaces: every consistent (z, w', theta) datum
// admits (w, eta)
bool help_lifting_check(const TwoCell& e, int n);

struct PushoutProductResult {
    PushoutResult corner;  // (Y . U) u_{X . U} (X . V)
    Bimodule target;       // Y . V
    TwoCell compare;       // corner -> target
};
PushoutProductResult pushout_product(const TwoCell& i, const TwoCell& j);

// I = D^1 ++ S^0 by changing basis in degree zero; equalizer is the map
// I -> D^1 collapsing both endpoint inclusions onto the standard S^0 -> D^1
struct IntervalSplit {
    Bimodule interval;
    Bimodule split_form;  // D^1 ++ S^0
    TwoCell split, unsplit;
    TwoCell equalizer;
};
IntervalSplit interval_basis_change(const DGAlgebra& a, const DGAlgebra& b);

}  // namespace odot
