/// @file rootset.hpp
/// @brief Finite sets of positive roots, Cartan matrices read off from them,
///        and the simple reflections that move between chambers.

#pragma once

#include "rootarr/exact.hpp"

#include <string>
#include <vector>

namespace rootarr {

/// The positive half of a reduced root set, in the coordinates of one
/// chamber: every root is a nonnegative integer combination of the simple
/// roots e_1..e_rank.  `positive` is kept sorted lexicographically.
struct RootSet {
    int rank = 0;
    std::vector<IntVec> positive;

    friend bool operator==(const RootSet& a, const RootSet& b) {
        return a.rank == b.rank && a.positive == b.positive;
    }
    friend bool operator!=(const RootSet& a, const RootSet& b) { return !(a == b); }
};

/// Sort + validate in one step.  Throws std::domain_error("invalid root set:
/// ...") if the invariants fail: every vector has length `rank` and
/// nonnegative entries, all unit vectors are present, no root repeats, and no
/// two roots are proportional.
RootSet make_root_set(int rank, std::vector<IntVec> positive);

void validate_root_set(const RootSet& r);
bool is_valid_root_set(const RootSet& r, std::string* why = nullptr);

bool contains_root(const RootSet& r, const IntVec& v);

/// Sum of the coordinates of a positive root.
Coord height(const IntVec& v);

/// Cartan matrix of the chamber: c_ii = 2 and, for i != j,
/// c_ij = -max{ k >= 0 : k*e_i + e_j in R+ }.  The result always satisfies
/// c_ii == 2, c_ij <= 0 off the diagonal, and c_ij == 0 iff c_ji == 0.
IntMat cartan_from_roots(const RootSet& r);

/// Check the generalized-Cartan-matrix invariants of an integer matrix
/// (diagonal 2, off-diagonal <= 0, zeros symmetric).  Throws on failure.
void validate_cartan(const IntMat& c);

/// Matrix of the simple reflection s_i in the chamber with Cartan matrix c:
/// identity except row i, which becomes e_i - row_i(c), so that
/// s_i(v) = v - <row_i(c), v> e_i.
IntMat reflection_matrix(const IntMat& cartan, int i);

/// Apply s_i to every positive root (negating e_i back into the positive
/// cone), producing the root set of the adjacent chamber.  Throws
/// std::domain_error("not a Cartan-graph object: ...") if some image leaves
/// the nonnegative cone.
RootSet reflect_object(const RootSet& r, int i);

/// Serialization of the set that is invariant under relabelling the simple
/// roots: the lexicographically least serialization over all coordinate
/// permutations.  Intended for rank <= 8 (cost grows with rank!).
std::string canonical_form(const RootSet& r);

/// Plain deterministic serialization (sorted roots, no relabelling).
std::string serialize_roots(const std::vector<IntVec>& roots);

}  // namespace rootarr
