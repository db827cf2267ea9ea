#include "odot/hom.hpp"

#include <optional>

#include "odot/linsolve.hpp"
#include "odot/smith.hpp"

namespace odot {

namespace {

Scalar parity_sign(long k) { return (((k % 2) + 2) % 2 == 0) ? Scalar(1) : Scalar(-1); }

std::optional<long> find_off(const TensorLayout& lay, int n, int p) {
    auto it = lay.blocks.find(n);
    if (it == lay.blocks.end()) return std::nullopt;
    for (const auto& [bp, off] : it->second)
        if (bp == p) return off;
    return std::nullopt;
}

// matrix of the left action by the alpha-th basis element of A_i
Matrix lact_slice(const Bimodule& m, int i, int p, long alpha) {
    Matrix full = m.lact(i, p);
    long g = m.ngens(p);
    Matrix out(m.ring(), m.ngens(p + i), g);
    for (long s = 0; s < out.rows(); ++s)
        for (long xx = 0; xx < g; ++xx) out.set(s, xx, full.at(s, alpha * g + xx));
    return out;
}

// matrix of the right action by the beta-th basis element of B_j
Matrix ract_slice(const Bimodule& m, int p, int j, long beta) {
    Matrix full = m.ract(p, j);
    long g = m.ngens(p), dj = m.right().dim(j);
    Matrix out(m.ring(), m.ngens(p + j), g);
    for (long s = 0; s < out.rows(); ++s)
        for (long xx = 0; xx < g; ++xx) out.set(s, xx, full.at(s, xx * dj + beta));
    return out;
}

struct DegreeData {
    std::vector<HomBlock> blocks;
    long length = 0;
    Matrix fams;
    Matrix zfams;
    Matrix rel;

    explicit DegreeData(const Ring& ring)
        : fams(ring, 0, 0), zfams(ring, 0, 0), rel(ring, 0, 0) {}
};

void scatter(Matrix& im, long off, const Matrix& block, long col) {
    for (long r = 0; r < block.rows(); ++r)
        for (long c = 0; c < block.cols(); ++c)
            if (!(block.at(r, c) == 0)) im.add_at(off + r * block.cols() + c, col, block.at(r, c));
}

Matrix comp_of(const Ring& ring, const DegreeData& d, const Matrix& fam, long col, int p,
               long rows, long cols) {
    for (const auto& blk : d.blocks)
        if (blk.p == p) {
            Matrix out(ring, rows, cols);
            for (long r = 0; r < rows; ++r)
                for (long c = 0; c < cols; ++c) out.set(r, c, fam.at(blk.offset + r * cols + c, col));
            return out;
        }
    return Matrix(ring, rows, cols);
}

// families X -> Y of degree n subject to one-sided linearity; left_side
// switches between the left-action constraint with its Koszul sign and the
// sign-free right-action constraint
DegreeData hom_degree(const Bimodule& x, const Bimodule& y, int n, bool left_side) {
    const Ring& ring = x.ring();
    DegreeData out(ring);
    for (const auto& [p, xp] : x.pieces()) {
        long gy = y.ngens(p + n);
        if (gy == 0) continue;
        out.blocks.push_back({p, out.length, gy, xp.ngens()});
        out.length += gy * xp.ngens();
    }
    if (out.blocks.empty()) return out;

    MapSolver solver(ring);
    std::map<int, int> var;
    for (const auto& blk : out.blocks) var[blk.p] = solver.add_var(blk.rows, blk.cols);
    for (const auto& blk : out.blocks)
        if (solver.var_offset(var[blk.p]) != blk.offset) throw error("hom: layout disagreement");

    for (const auto& blk : out.blocks) {
        const Matrix& xrel = x.piece(blk.p).relations();
        const Matrix& yrel = y.piece(blk.p + n).relations();
        if (xrel.cols() == 0) continue;
        std::vector<MapSolver::Term> t{{Matrix::identity(ring, blk.rows), var[blk.p], xrel}};
        Matrix rhs(ring, blk.rows, xrel.cols());
        if (yrel.cols() > 0)
            solver.add_constraint(t, rhs, yrel);
        else
            solver.add_constraint(t, rhs);
    }
    // linearity anchors at every argument degree, including those whose own
    // component is forced to vanish; products out of them still constrain
    // neighbouring components
    const DGAlgebra& side = left_side ? x.left() : x.right();
    for (const auto& [p, xp] : x.pieces()) {
        long gp = xp.ngens();
        for (const auto& [j, dj] : side.dims()) {
            long rows_t = y.ngens(p + n + j);
            if (rows_t == 0) continue;
            const Matrix& modl = y.piece(p + n + j).relations();
            for (long bb = 0; bb < dj; ++bb) {
                std::vector<MapSolver::Term> t;
                if (var.count(p + j)) {
                    Matrix sl = left_side ? lact_slice(x, j, p, bb) : ract_slice(x, p, j, bb);
                    t.push_back({Matrix::identity(ring, rows_t), var[p + j], sl});
                }
                if (var.count(p)) {
                    Matrix sy = left_side ? lact_slice(y, j, p + n, bb).scaled(
                                                ring.neg(parity_sign(static_cast<long>(n) * j)))
                                          : ract_slice(y, p + n, j, bb).scaled(Scalar(-1));
                    t.push_back({sy, var[p], Matrix::identity(ring, gp)});
                }
                if (t.empty()) continue;
                Matrix rhs(ring, rows_t, gp);
                if (modl.cols() > 0)
                    solver.add_constraint(t, rhs, modl);
                else
                    solver.add_constraint(t, rhs);
            }
        }
    }
    out.fams = solver.variable_solution_space();

    long zcols = 0;
    for (const auto& blk : out.blocks) zcols += y.piece(blk.p + n).relations().cols() * blk.cols;
    Matrix z(ring, out.length, zcols);
    long zc = 0;
    for (const auto& blk : out.blocks) {
        const Matrix& rel = y.piece(blk.p + n).relations();
        for (long rcol = 0; rcol < rel.cols(); ++rcol)
            for (long xx = 0; xx < blk.cols; ++xx) {
                for (long s = 0; s < blk.rows; ++s)
                    if (!(rel.at(s, rcol) == 0))
                        z.set(blk.offset + s * blk.cols + xx, zc, rel.at(s, rcol));
                ++zc;
            }
    }
    out.zfams = z;

    Matrix coords(ring, out.fams.cols(), z.cols());
    if (z.cols() > 0) {
        LinearSolution ls = solve_linear(out.fams, z);
        if (!ls.solution) throw error("hom: zero family outside the solution space");
        coords = *ls.solution;
    }
    out.rel = hstack(coords, kernel_basis(out.fams));
    return out;
}

// coordinates of image families, verifying zero-ness honestly when the
// target degree carries no generators
Matrix coords_in(const Ring& ring, const std::map<int, DegreeData>& data, int k,
                 const Matrix& fams) {
    auto it = data.find(k);
    if (it == data.end()) {
        if (!fams.is_zero()) throw error("hom: image family at an empty degree");
        return Matrix(ring, 0, fams.cols());
    }
    const DegreeData& d = it->second;
    if (d.fams.cols() == 0) {
        bool ok = fams.is_zero();
        if (!ok && d.zfams.cols() > 0) ok = solve_linear(d.zfams, fams).solution.has_value();
        if (!ok) throw error("hom: image family outside the solution space");
        return Matrix(ring, 0, fams.cols());
    }
    std::optional<Matrix> c = d.zfams.cols() > 0 ? solve_mod(d.fams, d.zfams, fams)
                                                 : solve_linear(d.fams, fams).solution;
    if (!c) throw error("hom: image family outside the solution space");
    return *c;
}

struct HomTables {
    std::map<int, FPModule> pieces;
    std::map<int, Matrix> diffs;
    std::map<std::pair<int, int>, Matrix> lact, ract;
};

}  // namespace

long HomResult::length(int n) const {
    auto it = layout.length.find(n);
    return it == layout.length.end() ? 0 : it->second;
}

Matrix HomResult::component(int n, const Matrix& fam, int p) const {
    if (fam.cols() != 1) throw error("hom component: expected one family column");
    long rows = coef.ngens(p + n), cols = arg.ngens(p);
    auto it = layout.blocks.find(n);
    if (it == layout.blocks.end()) return Matrix(arg.ring(), rows, cols);
    for (const auto& blk : it->second)
        if (blk.p == p) {
            Matrix out(arg.ring(), rows, cols);
            for (long r = 0; r < rows; ++r)
                for (long c = 0; c < cols; ++c) out.set(r, c, fam.at(blk.offset + r * cols + c, 0));
            return out;
        }
    return Matrix(arg.ring(), rows, cols);
}

Matrix HomResult::family_of(int n, const Matrix& coords) const {
    auto it = families.find(n);
    if (it == families.end() || it->second.cols() == 0)
        return Matrix(arg.ring(), length(n), coords.cols());
    return it->second * coords;
}

Matrix HomResult::coords(int n, const Matrix& fams) const {
    if (fams.rows() != length(n)) throw error("hom coords: family length mismatch");
    auto it = families.find(n);
    if (it == families.end() || it->second.cols() == 0) {
        bool ok = fams.is_zero();
        if (!ok) {
            auto zit = zero_families.find(n);
            if (zit != zero_families.end() && zit->second.cols() > 0)
                ok = solve_linear(zit->second, fams).solution.has_value();
        }
        if (!ok) throw error("hom coords: family outside the solution space");
        return Matrix(arg.ring(), 0, fams.cols());
    }
    const Matrix& z = zero_families.at(n);
    std::optional<Matrix> c =
        z.cols() > 0 ? solve_mod(it->second, z, fams) : solve_linear(it->second, fams).solution;
    if (!c) throw error("hom coords: family outside the solution space");
    return *c;
}

namespace {

HomResult build_hom(const Bimodule& x, const Bimodule& y, bool left_side) {
    const Ring& ring = x.ring();
    std::map<int, DegreeData> data;
    if (!x.pieces().empty() && !y.pieces().empty())
        for (int n = y.lo() - x.hi(); n <= y.hi() - x.lo(); ++n) {
            DegreeData d = hom_degree(x, y, n, left_side);
            if (!d.blocks.empty()) data.emplace(n, std::move(d));
        }

    HomTables t;
    for (const auto& [n, d] : data) t.pieces.emplace(n, FPModule(ring, d.fams.cols(), d.rel));

    for (const auto& [n, d] : data) {
        long gens = d.fams.cols();
        if (gens == 0) continue;

        // d(F)_p = d_Y o F_p - (-1)^n F_{p-1} o d_X
        auto dit = data.find(n - 1);
        if (dit != data.end()) {
            const DegreeData& td = dit->second;
            Matrix im(ring, td.length, gens);
            for (long g = 0; g < gens; ++g)
                for (const auto& tb : td.blocks) {
                    int p = tb.p;
                    Matrix fp = comp_of(ring, d, d.fams, g, p, y.ngens(p + n), x.ngens(p));
                    Matrix fprev =
                        comp_of(ring, d, d.fams, g, p - 1, y.ngens(p - 1 + n), x.ngens(p - 1));
                    Matrix blk = y.diff(p + n) * fp -
                                 (fprev * x.diff(p)).scaled(parity_sign(n));
                    scatter(im, tb.offset, blk, g);
                }
            Matrix dm = coords_in(ring, data, n - 1, im);
            if (dm.rows() > 0 && !dm.is_zero()) t.diffs.emplace(n, std::move(dm));
        }

        const DGAlgebra& lalg = left_side ? x.right() : y.left();
        for (const auto& [i, di] : lalg.dims()) {
            auto tit = data.find(n + i);
            if (tit == data.end()) continue;
            const DegreeData& td = tit->second;
            Matrix im(ring, td.length, di * gens);
            for (long aa = 0; aa < di; ++aa)
                for (long g = 0; g < gens; ++g)
                    for (const auto& tb : td.blocks) {
                        int p = tb.p;
                        Matrix blk(ring, 0, 0);
                        if (left_side) {
                            // (b f)_p = (-1)^{|b|(|f| + p)} f_{p+i} o (. b)
                            Matrix fnext = comp_of(ring, d, d.fams, g, p + i,
                                                   y.ngens(p + i + n), x.ngens(p + i));
                            blk = (fnext * ract_slice(x, p, i, aa))
                                      .scaled(parity_sign(static_cast<long>(i) * (n + p)));
                        } else {
                            // (c F)_p = c . F_p
                            Matrix fp = comp_of(ring, d, d.fams, g, p, y.ngens(p + n), x.ngens(p));
                            blk = lact_slice(y, i, p + n, aa) * fp;
                        }
                        scatter(im, tb.offset, blk, aa * gens + g);
                    }
            Matrix lm = coords_in(ring, data, n + i, im);
            if (lm.rows() > 0 && !lm.is_zero()) t.lact.emplace(std::make_pair(i, n), std::move(lm));
        }

        const DGAlgebra& ralg = left_side ? y.right() : x.left();
        for (const auto& [i, di] : ralg.dims()) {
            auto tit = data.find(n + i);
            if (tit == data.end()) continue;
            const DegreeData& td = tit->second;
            Matrix im(ring, td.length, gens * di);
            for (long g = 0; g < gens; ++g)
                for (long aa = 0; aa < di; ++aa)
                    for (const auto& tb : td.blocks) {
                        int p = tb.p;
                        Matrix blk(ring, 0, 0);
                        if (left_side) {
                            // (f c)_p = (-1)^{p |c|} (. c) o f_p
                            Matrix fp = comp_of(ring, d, d.fams, g, p, y.ngens(p + n), x.ngens(p));
                            blk = (ract_slice(y, p + n, i, aa) * fp)
                                      .scaled(parity_sign(static_cast<long>(p) * i));
                        } else {
                            // (F a)_p = F_{p+i} o (a .)
                            Matrix fnext = comp_of(ring, d, d.fams, g, p + i,
                                                   y.ngens(p + i + n), x.ngens(p + i));
                            blk = fnext * lact_slice(x, i, p, aa);
                        }
                        scatter(im, tb.offset, blk, g * di + aa);
                    }
            Matrix rm = coords_in(ring, data, n + i, im);
            if (rm.rows() > 0 && !rm.is_zero()) t.ract.emplace(std::make_pair(n, i), std::move(rm));
        }
    }

    const DGAlgebra& left = left_side ? x.right() : y.left();
    const DGAlgebra& right = left_side ? y.right() : x.left();
    Bimodule module(left, right, std::move(t.pieces), std::move(t.diffs), std::move(t.lact),
                    std::move(t.ract));

    HomLayout layout;
    std::map<int, Matrix> fams, zfams;
    for (auto& [n, d] : data) {
        layout.blocks.emplace(n, std::move(d.blocks));
        layout.length.emplace(n, d.length);
        fams.emplace(n, std::move(d.fams));
        zfams.emplace(n, std::move(d.zfams));
    }
    return {x, y, std::move(module), std::move(layout), std::move(fams), std::move(zfams)};
}

}  // namespace

HomResult rhom(const Bimodule& x, const Bimodule& m) {
    if (x.ring() != m.ring()) throw error("rhom: ring mismatch");
    if (!(x.right() == m.right())) throw error("rhom: right algebras differ");
    return build_hom(x, m, false);
}

HomResult lhom(const Bimodule& x, const Bimodule& n) {
    if (x.ring() != n.ring()) throw error("lhom: ring mismatch");
    if (!(x.left() == n.left())) throw error("lhom: left algebras differ");
    return build_hom(x, n, true);
}

TwoCell ev_rhom(const HomResult& h) {
    OdotResult hx = odot_tensor(h.module, h.arg);
    std::map<int, Matrix> mats;
    for (const auto& [t, blocks] : hx.layout.blocks) {
        Matrix f(h.arg.ring(), h.coef.ngens(t), hx.module.ngens(t));
        for (const auto& [n, off] : blocks) {
            int p = t - n;
            long gx = h.arg.ngens(p);
            for (long g = 0; g < h.module.ngens(n); ++g) {
                Matrix comp = h.component(n, h.families.at(n).col(g), p);
                for (long xx = 0; xx < gx; ++xx)
                    for (long r = 0; r < comp.rows(); ++r)
                        if (!(comp.at(r, xx) == 0)) f.add_at(r, off + g * gx + xx, comp.at(r, xx));
            }
        }
        if (!f.is_zero()) mats.emplace(t, std::move(f));
    }
    return TwoCell(hx.module, h.coef, std::move(mats));
}

TwoCell ev_lhom(const HomResult& h) {
    OdotResult xh = odot_tensor(h.arg, h.module);
    std::map<int, Matrix> mats;
    for (const auto& [t, blocks] : xh.layout.blocks) {
        Matrix f(h.arg.ring(), h.coef.ngens(t), xh.module.ngens(t));
        for (const auto& [p, off] : blocks) {
            int n = t - p;
            long gh = h.module.ngens(n);
            Scalar sg = parity_sign(static_cast<long>(p) * n);
            for (long g = 0; g < gh; ++g) {
                Matrix comp = h.component(n, h.families.at(n).col(g), p);
                for (long xx = 0; xx < h.arg.ngens(p); ++xx)
                    for (long r = 0; r < comp.rows(); ++r)
                        if (!(comp.at(r, xx) == 0))
                            f.add_at(r, off + xx * gh + g, h.arg.ring().mul(sg, comp.at(r, xx)));
            }
        }
        if (!f.is_zero()) mats.emplace(t, std::move(f));
    }
    return TwoCell(xh.module, h.coef, std::move(mats));
}

TwoCell curry_rhom(const HomResult& h, const Bimodule& w, const TwoCell& phi) {
    OdotResult wx = odot_tensor(w, h.arg);
    if (!(phi.source() == wx.module) || !(phi.target() == h.coef))
        throw error("curry: cell does not run W . X -> M");
    std::map<int, Matrix> mats;
    for (const auto& [nw, wp] : w.pieces()) {
        long gw = wp.ngens();
        Matrix fams(w.ring(), h.length(nw), gw);
        auto bit = h.layout.blocks.find(nw);
        if (bit != h.layout.blocks.end())
            for (const auto& blk : bit->second) {
                auto off = find_off(wx.layout, nw + blk.p, nw);
                if (!off) continue;
                Matrix pm = phi.mat(nw + blk.p);
                for (long wg = 0; wg < gw; ++wg)
                    for (long xx = 0; xx < blk.cols; ++xx)
                        for (long r = 0; r < blk.rows; ++r) {
                            const Scalar& v = pm.at(r, *off + wg * blk.cols + xx);
                            if (!(v == 0)) fams.add_at(blk.offset + r * blk.cols + xx, wg, v);
                        }
            }
        Matrix c = h.coords(nw, fams);
        if (c.rows() > 0 && !c.is_zero()) mats.emplace(nw, std::move(c));
    }
    return TwoCell(w, h.module, std::move(mats));
}

TwoCell uncurry_rhom(const HomResult& h, const TwoCell& psi) {
    if (!(psi.target() == h.module)) throw error("uncurry: cell does not land in the hom module");
    const Bimodule& w = psi.source();
    OdotResult wx = odot_tensor(w, h.arg);
    std::map<int, Matrix> mats;
    for (const auto& [t, blocks] : wx.layout.blocks) {
        Matrix f(w.ring(), h.coef.ngens(t), wx.module.ngens(t));
        for (const auto& [nw, off] : blocks) {
            int p = t - nw;
            long gx = h.arg.ngens(p);
            Matrix fams = h.family_of(nw, psi.mat(nw));
            for (long wg = 0; wg < w.ngens(nw); ++wg) {
                Matrix comp = h.component(nw, fams.col(wg), p);
                for (long xx = 0; xx < gx; ++xx)
                    for (long r = 0; r < comp.rows(); ++r)
                        if (!(comp.at(r, xx) == 0)) f.add_at(r, off + wg * gx + xx, comp.at(r, xx));
            }
        }
        if (!f.is_zero()) mats.emplace(t, std::move(f));
    }
    return TwoCell(wx.module, h.coef, std::move(mats));
}

TwoCell curry_lhom(const HomResult& h, const Bimodule& w, const TwoCell& phi) {
    OdotResult xw = odot_tensor(h.arg, w);
    if (!(phi.source() == xw.module) || !(phi.target() == h.coef))
        throw error("curry: cell does not run X . W -> N");
    std::map<int, Matrix> mats;
    for (const auto& [nw, wp] : w.pieces()) {
        long gw = wp.ngens();
        Matrix fams(w.ring(), h.length(nw), gw);
        auto bit = h.layout.blocks.find(nw);
        if (bit != h.layout.blocks.end())
            for (const auto& blk : bit->second) {
                auto off = find_off(xw.layout, nw + blk.p, blk.p);
                if (!off) continue;
                Matrix pm = phi.mat(nw + blk.p);
                Scalar sg = parity_sign(static_cast<long>(blk.p) * nw);
                for (long wg = 0; wg < gw; ++wg)
                    for (long xx = 0; xx < blk.cols; ++xx)
                        for (long r = 0; r < blk.rows; ++r) {
                            const Scalar& v = pm.at(r, *off + xx * gw + wg);
                            if (!(v == 0))
                                fams.add_at(blk.offset + r * blk.cols + xx, wg,
                                            w.ring().mul(sg, v));
                        }
            }
        Matrix c = h.coords(nw, fams);
        if (c.rows() > 0 && !c.is_zero()) mats.emplace(nw, std::move(c));
    }
    return TwoCell(w, h.module, std::move(mats));
}

TwoCell uncurry_lhom(const HomResult& h, const TwoCell& psi) {
    if (!(psi.target() == h.module)) throw error("uncurry: cell does not land in the hom module");
    const Bimodule& w = psi.source();
    OdotResult xw = odot_tensor(h.arg, w);
    std::map<int, Matrix> mats;
    for (const auto& [t, blocks] : xw.layout.blocks) {
        Matrix f(w.ring(), h.coef.ngens(t), xw.module.ngens(t));
        for (const auto& [p, off] : blocks) {
            int nw = t - p;
            long gw = w.ngens(nw);
            Matrix fams = h.family_of(nw, psi.mat(nw));
            Scalar sg = parity_sign(static_cast<long>(p) * nw);
            for (long wg = 0; wg < gw; ++wg) {
                Matrix comp = h.component(nw, fams.col(wg), p);
                for (long xx = 0; xx < h.arg.ngens(p); ++xx)
                    for (long r = 0; r < comp.rows(); ++r)
                        if (!(comp.at(r, xx) == 0))
                            f.add_at(r, off + xx * gw + wg, w.ring().mul(sg, comp.at(r, xx)));
            }
        }
        if (!f.is_zero()) mats.emplace(t, std::move(f));
    }
    return TwoCell(xw.module, h.coef, std::move(mats));
}

TwoCell compose_rhom(const HomResult& outer, const HomResult& inner, const HomResult& total) {
    if (!(inner.coef == outer.arg) || !(total.arg == inner.arg) || !(total.coef == outer.coef))
        throw error("compose: hom modules do not chain");
    OdotResult gf = odot_tensor(outer.module, inner.module);
    std::map<int, Matrix> mats;
    for (const auto& [t, blocks] : gf.layout.blocks) {
        long cols = gf.module.ngens(t);
        Matrix fams(total.arg.ring(), total.length(t), cols);
        for (const auto& [n, off] : blocks) {
            int m = t - n;
            long gi = inner.module.ngens(m);
            auto bit = total.layout.blocks.find(t);
            if (bit == total.layout.blocks.end()) continue;
            for (long g = 0; g < outer.module.ngens(n); ++g) {
                Matrix gfam = outer.families.at(n).col(g);
                for (long ff = 0; ff < gi; ++ff) {
                    Matrix ffam = inner.families.at(m).col(ff);
                    for (const auto& blk : bit->second) {
                        int p = blk.p;
                        Matrix gcomp = outer.component(n, gfam, p + m);
                        Matrix fcomp = inner.component(m, ffam, p);
                        Matrix comp = gcomp * fcomp;
                        for (long r = 0; r < comp.rows(); ++r)
                            for (long c = 0; c < comp.cols(); ++c)
                                if (!(comp.at(r, c) == 0))
                                    fams.add_at(blk.offset + r * blk.cols + c, off + g * gi + ff,
                                                comp.at(r, c));
                    }
                }
            }
        }
        Matrix c = total.coords(t, fams);
        if (c.rows() > 0 && !c.is_zero()) mats.emplace(t, std::move(c));
    }
    return TwoCell(gf.module, total.module, std::move(mats));
}

}  // namespace odot
