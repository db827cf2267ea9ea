#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "odot/dga.hpp"

using namespace odot;

namespace {

// Z<e>/(e^4) with |e| = 1 and d(e) = 2; Leibniz forces d(e^2) = 0, d(e^3) = 2e^2
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

// product of two copies of the ground field, on the idempotents u, v
DGAlgebra product_ring(Ring f) {
    Matrix table = Matrix::of(f, 2, 4, {1, 0, 0, 0, 0, 0, 0, 1});
    Matrix unit = Matrix::of(f, 2, 1, {1, 1});
    return ring_as_dga(f, 2, table, unit);
}

// F2 algebra 1, y (degree 0), x (degree 1) with dx = y, xy = yx = y^2 = 0;
// homology is the ground field in degree 0
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

// F3 algebra 1, u (degree 0), v (degree -1) with du = v and all products of
// u, v zero; homology is the ground field in degree 0
DGAlgebra downward_algebra() {
    Ring f = Ring::prime_field(3);
    std::map<int, long> dims{{-1, 1}, {0, 2}};
    std::map<std::pair<int, int>, Matrix> mult{
        {{0, 0}, Matrix::of(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0})},
        {{0, -1}, Matrix::of(f, 1, 2, {1, 0})},
        {{-1, 0}, Matrix::of(f, 1, 2, {1, 0})},
    };
    std::map<int, Matrix> diffs{{0, Matrix::of(f, 1, 2, {0, 1})}};
    return DGAlgebra(f, dims, diffs, mult, Matrix::of(f, 2, 1, {1, 0}));
}

}  // namespace

TEST_CASE("segment algebra validates and has the expected mod 2 homology") {
    DGAlgebra c = segment_algebra();
    DgaReport r = validate_dga(c);
    CHECK(r.pass());

    DGAlgebra h = homology_dga(c);
    CHECK(h.ring() == Ring::prime_field(2));
    std::map<int, long> expected{{0, 1}, {2, 1}};
    CHECK(h.dims() == expected);
    CHECK(h.diff(2).is_zero());
    CHECK(h.mult(0, 2) == Matrix::of(h.ring(), 1, 1, {1}));
    CHECK(h.mult(2, 0) == Matrix::of(h.ring(), 1, 1, {1}));
    // the degree 2 class squares to zero: there is nothing in degree 4
    CHECK(h.dim(4) == 0);
    CHECK(validate_dga(h).pass());
}

TEST_CASE("defective tables are reported with the failing basis tuple") {
    Ring z = Ring::integers();
    std::map<int, long> dims{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    std::map<std::pair<int, int>, Matrix> mult;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            mult.emplace(std::make_pair(i, j), Matrix::of(z, 1, 1, {1}));
    Matrix one = Matrix::of(z, 1, 1, {1});

    SUBCASE("dropping d(e^3) breaks Leibniz at (1,2)") {
        std::map<int, Matrix> diffs{{1, Matrix::of(z, 1, 1, {2})}};
        DGAlgebra broken(z, dims, diffs, mult, one);
        DgaReport r = validate_dga(broken);
        CHECK(!r.pass());
        CHECK(!r.leibniz_ok);
        CHECK(r.d2_ok);
        CHECK(r.detail.find("(1,2)") != std::string::npos);
    }
    SUBCASE("setting d(e^2) = 2e breaks d∘d") {
        std::map<int, Matrix> diffs{{1, Matrix::of(z, 1, 1, {2})},
                                    {2, Matrix::of(z, 1, 1, {2})},
                                    {3, Matrix::of(z, 1, 1, {2})}};
        DGAlgebra broken(z, dims, diffs, mult, one);
        DgaReport r = validate_dga(broken);
        CHECK(!r.d2_ok);
    }
}

TEST_CASE("ring tables build as degree 0 algebras, bad ones are rejected") {
    Ring f5 = Ring::prime_field(5);
    DGAlgebra m = matrix_ring(f5);
    CHECK(m.dim(0) == 4);
    CHECK(validate_dga(m).pass());

    DGAlgebra p = product_ring(f5);
    CHECK(validate_dga(p).pass());

    // redirect e12*e21 to e22: then (e11 e12) e21 = e22 but e11 (e12 e21) = 0
    Matrix bad(f5, 4, 16);
    auto idx = [](long r, long c) { return r * 2 + c; };
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c)
                for (long d = 0; d < 2; ++d)
                    if (b == c) bad.set(idx(a, d), idx(a, b) * 4 + idx(c, d), Scalar(1));
    bad.set(0, 1 * 4 + 2, Scalar(0));
    bad.set(3, 1 * 4 + 2, Scalar(1));
    Matrix unit = Matrix::of(f5, 4, 1, {1, 0, 0, 1});
    CHECK_THROWS_AS(ring_as_dga(f5, 4, bad, unit), error);
}

TEST_CASE("opposite is an involution that preserves validity") {
    DGAlgebra c = segment_algebra();
    DGAlgebra op = opposite(c);
    CHECK(validate_dga(op).pass());
    // e ·op e = -e^2, so the opposite genuinely differs
    CHECK(op.mult(1, 1) == Matrix::of(c.ring(), 1, 1, {-1}));
    CHECK(opposite(op) == c);

    DGAlgebra m = matrix_ring(Ring::prime_field(5));
    CHECK(validate_dga(opposite(m)).pass());
    CHECK(opposite(opposite(m)) == m);
}

TEST_CASE("transposition is an algebra map into the opposite matrix ring") {
    DGAlgebra m = matrix_ring(Ring::prime_field(5));
    Matrix t(m.ring(), 4, 4);
    t.set(0, 0, Scalar(1));
    t.set(2, 1, Scalar(1));
    t.set(1, 2, Scalar(1));
    t.set(3, 3, Scalar(1));
    CHECK_THROWS_AS(DGAlgebraMap(m, m, {{0, t}}), error);
    CHECK_NOTHROW(DGAlgebraMap(m, opposite(m), {{0, t}}));
}

TEST_CASE("tensoring with the ground ring changes nothing") {
    DGAlgebra c = segment_algebra();
    Ring z = c.ring();
    for (DGAlgebra t : {tensor_dga(c, ground_dga(z)), enveloping(c, ground_dga(z))}) {
        CHECK(t.dims() == c.dims());
        CHECK(t.unit() == c.unit());
        for (auto& [i, di] : c.dims()) {
            CHECK(t.diff(i) == c.diff(i));
            for (auto& [j, dj] : c.dims())
                if (c.dim(i + j) > 0) CHECK(t.mult(i, j) == c.mult(i, j));
        }
    }
}

TEST_CASE("tensor square and enveloping of the segment algebra validate") {
    DGAlgebra c = segment_algebra();
    DGAlgebra sq = tensor_dga(c, c);
    std::map<int, long> expected{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 3}, {5, 2}, {6, 1}};
    CHECK(sq.dims() == expected);
    CHECK(validate_dga(sq).pass());

    DGAlgebra env = enveloping(c, c);
    CHECK(env.dims() == sq.dims());
    CHECK(validate_dga(env).pass());

    TensorLayout lay = tensor_dga_layout(c, c);
    CHECK(lay.offset(2, 0) == 0);
    CHECK(lay.offset(2, 1) == 1);
    CHECK(lay.offset(2, 2) == 2);
}

TEST_CASE("homology over Z keeps free homology and refuses mixed torsion") {
    Ring z = Ring::integers();

    // exterior algebra on one degree 1 generator, zero differential
    std::map<int, long> edims{{0, 1}, {1, 1}};
    std::map<std::pair<int, int>, Matrix> emult{{{0, 0}, Matrix::of(z, 1, 1, {1})},
                                                {{0, 1}, Matrix::of(z, 1, 1, {1})},
                                                {{1, 0}, Matrix::of(z, 1, 1, {1})}};
    DGAlgebra ext(z, edims, {}, emult, Matrix::of(z, 1, 1, {1}));
    CHECK(validate_dga(ext).pass());
    CHECK(homology_dga(ext) == ext);

    // H_0 = Z next to H_2 = Z/2: representable over neither Z nor F_2 alone
    std::map<int, long> mdims{{0, 1}, {2, 1}, {3, 1}};
    std::map<std::pair<int, int>, Matrix> mmult;
    for (int n : {0, 2, 3}) {
        mmult.emplace(std::make_pair(0, n), Matrix::of(z, 1, 1, {1}));
        if (n != 0) mmult.emplace(std::make_pair(n, 0), Matrix::of(z, 1, 1, {1}));
    }
    std::map<int, Matrix> mdiffs{{3, Matrix::of(z, 1, 1, {2})}};
    DGAlgebra mixed(z, mdims, mdiffs, mmult, Matrix::of(z, 1, 1, {1}));
    CHECK(validate_dga(mixed).pass());
    try {
        homology_dga(mixed);
        CHECK(false);
    } catch (const error& e) {
        std::string msg = e.what();
        CHECK(msg.find("H_0 = Z") != std::string::npos);
        CHECK(msg.find("H_2 = Z/2") != std::string::npos);
    }
}

TEST_CASE("connective cover of the segment algebra keeps it, degree 0 homology drops H_2") {
    DGAlgebra c = segment_algebra();
    TruncationZigzag tz = truncate_plus(c);

    CHECK(tz.eplus == c);
    CHECK(is_quasi_iso(tz.incl.carrier_map()).quasi_iso);

    CHECK(tz.h0.presented());
    CHECK(tz.h0.piece(0).describe() == "Z/2");
    CHECK(validate_dga(tz.h0).pass());

    // the lost H_2 of the source shows up in cone degree 3
    QuasiIsoReport q = is_quasi_iso(tz.proj.carrier_map());
    CHECK(!q.quasi_iso);
    CHECK(q.failing_degrees == std::vector<int>{3});
    CHECK(q.cone_homology.at(3).describe() == "Z/2");
}

TEST_CASE("connective cover legs are quasi-isomorphisms when homology sits in degree 0") {
    for (DGAlgebra e : {collapsing_algebra(), downward_algebra()}) {
        CHECK(validate_dga(e).pass());
        TruncationZigzag tz = truncate_plus(e);
        CHECK(validate_dga(tz.eplus).pass());
        CHECK(validate_dga(tz.h0).pass());
        CHECK(is_quasi_iso(tz.incl.carrier_map()).quasi_iso);
        CHECK(is_quasi_iso(tz.proj.carrier_map()).quasi_iso);
    }
}

TEST_CASE("truncating a degree 0 ring is the identity zig-zag") {
    DGAlgebra m = matrix_ring(Ring::prime_field(5));
    TruncationZigzag tz = truncate_plus(m);
    CHECK(tz.eplus == m);
    CHECK(tz.h0.dim(0) == 4);
    CHECK(tz.h0.relations0().cols() == 0);
    CHECK(is_quasi_iso(tz.proj.carrier_map()).quasi_iso);
}

TEST_CASE("homology of the collapsing algebra is the ground field") {
    DGAlgebra h = homology_dga(collapsing_algebra());
    CHECK(h.ring() == Ring::prime_field(2));
    std::map<int, long> expected{{0, 1}};
    CHECK(h.dims() == expected);
    CHECK(h == ground_dga(Ring::prime_field(2)));
}
