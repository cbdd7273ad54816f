/// @file groupoid.hpp
/// @brief Enumeration of all chambers reachable from a seed root set by
///        simple reflections, with the connecting data (Cartan matrices,
///        edges, changes of basis) and structural axiom checks.

#pragma once

#include "rootarr/rootset.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace rootarr {

/// One chamber: its positive roots in local coordinates, the local Cartan
/// matrix, and the change of basis from seed coordinates to local
/// coordinates (`frame`, with exact integer inverse `frame_inv`).
struct GroupoidObject {
    RootSet roots;
    IntMat cartan;
    IntMat frame;
    IntMat frame_inv;
};

/// The full reflection groupoid of a seed: objects, and for each object the
/// target of the reflection at every index (`edges[a][i]`).
struct CartanGraph {
    int rank = 0;
    std::vector<GroupoidObject> objects;
    std::vector<std::vector<int>> edges;
};

/// Breadth-first closure of the seed under all simple reflections.  Two
/// chambers are the same object when they have the same change of basis from
/// the seed, so the object count equals the chamber count of the arrangement.
/// Throws:
///  - "invalid root set: ..." if the seed fails validation;
///  - "not a Cartan-graph object: ..." if a reflection leaves the cone;
///  - "not finite within bound" if more than `max_objects` chambers appear.
CartanGraph enumerate_groupoid(const RootSet& seed, std::size_t max_objects = 100000);

/// Same closure, but hitting the object cap stops the search instead of
/// throwing: `complete` reports whether the closure finished (unexplored
/// reflections keep edge value -1).
CartanGraph enumerate_groupoid_partial(const RootSet& seed, std::size_t max_objects,
                                       bool& complete);

struct AxiomViolation {
    std::string axiom;  // "C1", "C2", "R2", "R3", "R4", or "valid"
    int object = -1;
    int i = -1;  // simple-root indices involved (0-based; -1 when unused)
    int j = -1;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Structural re-verification of an enumerated (or hand-built) graph:
/// object validity, involutivity of edges, invariance of Cartan entries
/// along their own reflection, reflection compatibility of the root sets,
/// absence of 2*root, and the bounded exchange cycles.
AxiomReport verify_axioms(const CartanGraph& g);

/// Shortest reflection word from object `from` to object `to`, with the
/// accumulated composite reflection.  `word[k]` is the index reflected at
/// step k (0-based).  `matrix` is the product of the local reflection
/// matrices in word order; its j-th column is the j-th simple root of `to`
/// written in `from` coordinates.  Empty word and identity matrix when
/// from == to.  Throws std::domain_error if `to` is unreachable.
struct WeylPath {
    std::vector<int> word;
    IntMat matrix;
};

WeylPath weyl_path(const CartanGraph& g, int from, int to);

/// Objects grouped by canonical_form of their root sets; keys are canonical
/// serializations, values are object ids in increasing order.
std::map<std::string, std::vector<int>> canonical_classes(const CartanGraph& g);

/// Graphviz DOT text with one node per canonical class and one edge per
/// reflection between classes (reflection indices 1-based in labels).
std::string object_change_dot(const CartanGraph& g);

}  // namespace rootarr
