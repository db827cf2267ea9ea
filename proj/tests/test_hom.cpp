#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "odot/hom.hpp"

using namespace odot;

namespace {

// Z<e>/(e^4) with |e| = 1 and d(e) = 2
DGAlgebra segment_algebra() {
    Ring z = Ring::integers();
    std::map<int, long> dims{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    std::map<std::pair<int, int>, Matrix> mult;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            mult.emplace(std::make_pair(i, j), Matrix::of(z, 1, 1, {1}));
    std::map<int, Matrix> diffs{{1, Matrix::of(z, 1, 1, {2})}, {3, Matrix::of(z, 1, 1, {2})}};
    return DGAlgebra(z, dims, diffs, mult, Matrix::of(z, 1, 1, {1}));
}

// 2x2 matrix ring on the basis e11, e12, e21, e22
DGAlgebra matrix_ring(Ring f) {
    long n = 4;
    Matrix table(f, n, n * n);
    auto idx = [](long r, long c) { return r * 2 + c; };
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c)
                for (long d = 0; d < 2; ++d)
                    if (b == c) table.set(idx(a, d), idx(a, b) * n + idx(c, d), Scalar(1));
    Matrix unit(f, n, 1);
    unit.set(0, 0, Scalar(1));
    unit.set(3, 0, Scalar(1));
    return ring_as_dga(f, n, table, unit);
}

// F2 algebra 1, y (degree 0), x (degree 1) with dx = y, xy = yx = y^2 = 0
DGAlgebra collapsing_algebra() {
    Ring f = Ring::prime_field(2);
    std::map<int, long> dims{{0, 2}, {1, 1}};
    std::map<std::pair<int, int>, Matrix> mult{
        {{0, 0}, Matrix::of(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0})},
        {{0, 1}, Matrix::of(f, 1, 2, {1, 0})},
        {{1, 0}, Matrix::of(f, 1, 2, {1, 0})},
    };
    std::map<int, Matrix> diffs{{1, Matrix::of(f, 2, 1, {0, 1})}};
    return DGAlgebra(f, dims, diffs, mult, Matrix::of(f, 2, 1, {1, 0}));
}

// the complex Z --2--> Z in degrees 1, 0 as a bimodule over the ground ring
Bimodule two_resolution() {
    Ring z = Ring::integers();
    DGAlgebra g = ground_dga(z);
    Matrix one = Matrix::of(z, 1, 1, {1});
    std::map<int, FPModule> pieces{{0, FPModule::free(z, 1)}, {1, FPModule::free(z, 1)}};
    std::map<int, Matrix> diffs{{1, Matrix::of(z, 1, 1, {2})}};
    std::map<std::pair<int, int>, Matrix> lact{{{0, 0}, one}, {{0, 1}, one}};
    std::map<std::pair<int, int>, Matrix> ract{{{0, 0}, one}, {{1, 0}, one}};
    return Bimodule(g, g, pieces, diffs, lact, ract);
}

// Z/2 concentrated in degree 0, presented as a cyclic module
Bimodule mod_two() {
    Ring z = Ring::integers();
    DGAlgebra g = ground_dga(z);
    Matrix one = Matrix::of(z, 1, 1, {1});
    std::map<int, FPModule> pieces{{0, FPModule::cyclic(z, Scalar(2))}};
    return Bimodule(g, g, pieces, {}, {{{0, 0}, one}}, {{{0, 0}, one}});
}

// column vectors as a left module over the 2x2 matrix ring
Bimodule column_module(const DGAlgebra& a) {
    Ring f = a.ring();
    DGAlgebra g = ground_dga(f);
    Matrix lact(f, 2, 8);
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c)
            lact.set(r, (r * 2 + c) * 2 + c, Scalar(1));
    std::map<int, FPModule> pieces{{0, FPModule::free(f, 2)}};
    return Bimodule(a, g, pieces, {}, {{{0, 0}, lact}}, {{{0, 0}, Matrix::identity(f, 2)}});
}

}  // namespace

TEST_CASE("hom from a free resolution computes ext groups") {
    Bimodule r = two_resolution();
    Bimodule q = mod_two();

    HomResult h = rhom(r, q);
    CHECK(h.module.ngens(0) == 1);
    CHECK(h.module.ngens(-1) == 1);
    HomologyResult hh = homology(h.module.carrier());
    CHECK(hh.group(0).describe() == "Z/2");
    CHECK(hh.group(-1).describe() == "Z/2");

    // against the free coefficient module the degree zero classes die
    Bimodule z0 = unit_cell(ground_dga(Ring::integers()));
    HomResult hz = rhom(r, z0);
    HomologyResult hhz = homology(hz.module.carrier());
    CHECK(hhz.group(0).is_trivial());
    CHECK(hhz.group(-1).describe() == "Z/2");

    // over the ground ring the left sided hom agrees
    HomResult hl = lhom(r, q);
    HomologyResult hhl = homology(hl.module.carrier());
    CHECK(hhl.group(0).describe() == "Z/2");
    CHECK(hhl.group(-1).describe() == "Z/2");
}

TEST_CASE("hom over a matrix ring separates module and scalar directions") {
    DGAlgebra a = matrix_ring(Ring::prime_field(5));
    Bimodule col = column_module(a);

    // ground linear endomorphisms form the full matrix ring again
    HomResult ends = rhom(col, col);
    CHECK(ends.module.ngens(0) == 4);
    CHECK(ends.module.left() == a);
    CHECK(ends.module.right() == a);

    // module linear endomorphisms of the column module are just scalars
    HomResult schur = lhom(col, col);
    CHECK(schur.module.ngens(0) == 1);
    CHECK(schur.module.degrees() == std::vector<int>{0});

    // right linear endomorphisms of the algebra recover left multiplication
    HomResult regular = rhom(unit_cell(a), unit_cell(a));
    CHECK(regular.module.ngens(0) == 4);
}

TEST_CASE("evaluation and currying invert each other on the right") {
    DGAlgebra alg = segment_algebra();
    Bimodule u = unit_cell(alg);
    Bimodule w = shift_cell(u, 1);
    OdotResult wx = odot_tensor(w, u);
    HomResult h = rhom(u, wx.module);

    TwoCell phi = TwoCell::identity(wx.module);
    TwoCell psi = curry_rhom(h, w, phi);
    CHECK(uncurry_rhom(h, psi).equals(phi));

    // triangle laws of the adjunction
    CHECK(curry_rhom(h, h.module, ev_rhom(h)).equals(TwoCell::identity(h.module)));
    CHECK(uncurry_rhom(h, TwoCell::identity(h.module)).equals(ev_rhom(h)));
}

TEST_CASE("evaluation and currying invert each other on the left") {
    DGAlgebra alg = segment_algebra();
    Bimodule u = unit_cell(alg);
    Bimodule w = shift_cell(u, 1);
    OdotResult xw = odot_tensor(u, w);
    HomResult h = lhom(u, xw.module);

    TwoCell phi = TwoCell::identity(xw.module);
    TwoCell psi = curry_lhom(h, w, phi);
    CHECK(uncurry_lhom(h, psi).equals(phi));

    CHECK(curry_lhom(h, h.module, ev_lhom(h)).equals(TwoCell::identity(h.module)));
    CHECK(uncurry_lhom(h, TwoCell::identity(h.module)).equals(ev_lhom(h)));
}

TEST_CASE("endomorphisms of the unit recover the algebra") {
    for (DGAlgebra alg : {segment_algebra(), collapsing_algebra()}) {
        Bimodule u = unit_cell(alg);
        HomResult h = rhom(u, u);
        TwoCell psi = curry_rhom(h, u, unitor_left(u));
        CHECK(psi.is_iso());

        // the comparison is multiplicative for the composition product
        TwoCell mult = compose_rhom(h, h, h);
        TwoCell lhs = mult.compose(odot_cells(psi, psi));
        TwoCell rhs = psi.compose(unitor_left(u));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("shifted arguments land hom families in shifted degrees") {
    DGAlgebra alg = collapsing_algebra();
    Bimodule u = unit_cell(alg);
    HomResult h = rhom(shift_cell(u, 2), u);
    CHECK(h.module.lo() == -2);
    CHECK(h.module.hi() == -1);
    CHECK(h.module.ngens(-2) == 2);

    HomResult g = rhom(u, shift_cell(u, 2));
    CHECK(g.module.lo() == 2);
    CHECK(g.module.hi() == 3);
}
