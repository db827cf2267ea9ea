#pragma once

#include <map>
#include <optional>
#include <vector>

#include "odot/fpmodule.hpp"

namespace odot {

// Bounded chain complex of finitely presented modules.  Homological grading:
// the differential lowers degree by one, and d∘d vanishes as a map of
// presented modules (checked at construction).  Degrees outside the stored
// support are zero.
class ChainComplex {
public:
    explicit ChainComplex(Ring ring) : ring_(ring), zero_(ring, 0) {}
    ChainComplex(Ring ring, std::map<int, FPModule> pieces, std::map<int, Matrix> diffs);

    static ChainComplex single(Ring ring, const FPModule& m, int degree);
    static ChainComplex zero_complex(Ring ring) { return ChainComplex(ring); }

    const Ring& ring() const { return ring_; }
    const FPModule& piece(int n) const;
    bool has_piece(int n) const { return pieces_.count(n) != 0; }
    // d_n : piece(n) -> piece(n-1) on generator coordinates
    Matrix diff(int n) const;
    const std::map<int, FPModule>& pieces() const { return pieces_; }

    int lo() const;
    int hi() const;
    std::vector<int> degrees() const;
    bool is_zero() const { return pieces_.empty(); }

    bool operator==(const ChainComplex& o) const;

private:
    Ring ring_;
    std::map<int, FPModule> pieces_;
    std::map<int, Matrix> diffs_;
    FPModule zero_;
    void validate() const;
};

// Degree-zero chain map, stored as one generator matrix per degree.
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> mats);

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    Matrix mat(int n) const;
    const std::map<int, Matrix>& mats() const { return mats_; }

    ChainMap compose(const ChainMap& inner) const;
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap scaled(const Scalar& c) const;
    bool is_zero_map() const;
    bool equals(const ChainMap& o) const;

private:
    ChainComplex source_, target_;
    std::map<int, Matrix> mats_;
};

// Homology groups with explicit cycle representatives: column j of reps(n)
// is a cycle in piece(n) generating the j-th presentation generator of
// group(n).
class HomologyResult {
public:
    HomologyResult(Ring ring) : ring_(ring), zero_(ring, 0) {}

    const FPModule& group(int n) const;
    const Matrix& reps(int n) const;
    const std::map<int, FPModule>& groups() const { return groups_; }
    bool all_trivial() const;
    std::vector<int> nonzero_degrees() const;

    // presentation coordinates of a cycle's class; nullopt when the element
    // is not a cycle modulo relations
    std::optional<Matrix> classify(int n, const Matrix& cycle) const;

    friend HomologyResult homology(const ChainComplex& c);

private:
    Ring ring_;
    FPModule zero_;
    std::map<int, FPModule> groups_;
    std::map<int, Matrix> reps_;
    std::map<int, Matrix> bnd_;  // boundaries + ambient relations per degree
    std::map<int, long> piece_gens_;
};

HomologyResult homology(const ChainComplex& c);

// H_n(f) as a map of presented modules
ModuleMap induced_map(const HomologyResult& hs, const HomologyResult& ht, const ChainMap& f, int n);

// cone(f)_n = target_n ⊕ source_{n-1}, d(y, x) = (dy + fx, -dx)
struct ConeResult {
    ChainComplex complex;
    ChainMap incl;  // target -> cone
    ChainMap proj;  // cone -> shift(source, 1)
};
ConeResult cone(const ChainMap& f);

// (shift(C, k))_n = C_{n-k} with differential scaled by (-1)^k
ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift(const ChainMap& f, int k);

struct QuasiIsoReport {
    bool quasi_iso = false;
    std::vector<int> failing_degrees;
    std::map<int, FPModule> cone_homology;
};
QuasiIsoReport is_quasi_iso(const ChainMap& f);

// Chain homotopy h with d h + h d = f - g, each h_n well defined; nullopt
// when none exists.
std::optional<std::map<int, Matrix>> chain_homotopy_solve(const ChainMap& f, const ChainMap& g);
bool is_homotopy_between(const ChainMap& f, const ChainMap& g, const std::map<int, Matrix>& h);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// Offsets of the (i, n-i) blocks inside (A ⊗ B)_n; the tensor generator
// (x, y) with x in A_i sits at offset(n, i) + x * B_{n-i}.ngens() + y.
struct TensorLayout {
    std::map<int, std::vector<std::pair<int, long>>> blocks;  // degree -> [(i, offset)]
    long offset(int n, int i) const;
};

struct TensorComplex {
    ChainComplex complex;
    TensorLayout layout;
};
// tensor over the ground ring, Koszul sign on the second differential
TensorComplex tensor_k(const ChainComplex& a, const ChainComplex& b);

}  // namespace odot
