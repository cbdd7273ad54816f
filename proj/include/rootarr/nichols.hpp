/// @file nichols.hpp
/// @brief Diagonal braidings (matrices of roots of unity), the Cartan data
///        they induce, reflections of braidings, and graded Hilbert series of
///        the associated algebras in product form.

#pragma once

#include "rootarr/exact.hpp"
#include "rootarr/groupoid.hpp"
#include "rootarr/rootset.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace rootarr {

/// Braiding matrix (q_ij) of roots of unity.
struct BraidingMatrix {
    int rank = 0;
    std::vector<std::vector<UnityRoot>> q;

    friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) {
        return a.rank == b.rank && a.q == b.q;
    }
    friend bool operator!=(const BraidingMatrix& a, const BraidingMatrix& b) { return !(a == b); }
};

/// chi(v, w) = prod_ij q_ij^(v_i w_j); the extension of the braiding to the
/// root lattice as a bicharacter.
UnityRoot bicharacter(const BraidingMatrix& b, const IntVec& v, const IntVec& w);

/// chi(v, v).
UnityRoot selfbraiding(const BraidingMatrix& b, const IntVec& v);

/// Cartan matrix of a braiding: c_ii = 2 and, for i != j, c_ij = -m with m
/// the least nonnegative integer such that either q_ii^m * q_ij * q_ji == 1
/// or q_ii has order m+1.  Throws std::domain_error("not of finite Cartan
/// type at (i,j)") when q_ii == 1 and q_ij*q_ji != 1 (indices 1-based in the
/// message).
IntMat cartan_from_braiding(const BraidingMatrix& b);

/// Transport of the braiding to the chamber across wall i:
/// q'_jk = chi(s_i e_j, s_i e_k) with s_i taken from cartan_from_braiding.
BraidingMatrix reflect_braiding(const BraidingMatrix& b, int i);

/// One object of the braided reflection graph: the braiding in its local
/// basis, its Cartan matrix, and its positive roots (computed by closing the
/// unit vectors under all reflections transported around the graph).
struct BraidedObject {
    BraidingMatrix braiding;
    IntMat cartan;
    RootSet roots;
};

struct BraidedGraph {
    int rank = 0;
    std::vector<BraidedObject> objects;
    std::vector<std::vector<int>> edges;
};

/// Closure of a seed braiding under reflections.  Objects are deduplicated
/// by exact equality of braiding matrices (so distinct chambers carrying the
/// same braiding become one object).  Throws "not finite within bound" when
/// more than `max_objects` braidings or more than `max_roots` roots in one
/// object appear, and "not a Cartan-graph object: ..." when root propagation
/// produces a vector of mixed sign.
BraidedGraph enumerate_braided(const BraidingMatrix& seed, std::size_t max_objects = 100000,
                               std::size_t max_roots = 10000);

/// One factor (n)_{t^h} = 1 + t^h + ... + t^((n-1)h) of a Hilbert series.
struct HilbertFactor {
    long long order = 1;   // n
    long long height = 1;  // h

    friend bool operator==(const HilbertFactor& a, const HilbertFactor& b) {
        return a.order == b.order && a.height == b.height;
    }
    friend bool operator<(const HilbertFactor& a, const HilbertFactor& b) {
        return std::pair(a.height, a.order) < std::pair(b.height, b.order);
    }
};

/// Finite product of factors (n)_{t^h}; the empty product is the series 1.
class HilbertSeries {
public:
    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<HilbertFactor> factors);

    const std::vector<HilbertFactor>& factors() const { return factors_; }

    /// Value at t = 1: the product of the orders.
    ZZ dimension() const;

    /// Coefficients of the expanded polynomial, constant term first.
    std::vector<ZZ> expansion() const;

    /// Display form like "(2)_{t}^3 (3)_{t^2}".
    std::string str() const;

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const HilbertSeries& a, const HilbertSeries& b) { return !(a == b); }

private:
    std::vector<HilbertFactor> factors_;  // sorted by (height, order)
};

/// Full series: one factor per positive root beta, with n = ord(chi(beta,
/// beta)) and h = height(beta).  Throws std::domain_error
/// ("infinite-dimensional root direction: ...") when some chi(beta, beta)
/// == 1.
HilbertSeries hilbert_full(const BraidingMatrix& b, const RootSet& roots);

/// Series split along a coordinate-deletion restriction: roots supported
/// inside J keep their full height (`localized`); all other roots contribute
/// to `restricted` with the height of their image (the sum of the kept
/// coordinates).
struct RestrictedSeries {
    HilbertSeries localized;
    HilbertSeries restricted;
};

RestrictedSeries hilbert_restricted(const BraidingMatrix& b, const RootSet& roots,
                                    const std::vector<int>& J);

/// The braiding transported to every object of an enumerated graph (entry 0
/// is the seed braiding).  Throws std::domain_error when the braiding's
/// Cartan matrix differs from the graph seed's.
std::vector<BraidingMatrix> braidings_along(const CartanGraph& g, const BraidingMatrix& seed);

}  // namespace rootarr
