/// @file cellcomplex.hpp
/// @brief The cell structure attached to an enumerated graph: cells are
///        classes of (object, index subset) pairs glued along the subset's
///        reflections, with restriction/series decorations per cell.

#pragma once

#include "rootarr/groupoid.hpp"
#include "rootarr/nichols.hpp"
#include "rootarr/restriction.hpp"

#include <map>
#include <vector>

namespace rootarr {

/// A cell of dimension rank - |J| - 1: an equivalence class of pairs
/// (object, J) under the reflections with indices in J.  `object` is the
/// least member id, `members` all member object ids (each paired with the
/// same J).
struct Cell {
    int dimension = 0;
    int object = 0;
    std::vector<int> J;
    std::vector<int> members;
};

struct CellComplex {
    int rank = 0;
    bool includes_empty_cell = false;
    std::vector<Cell> cells;  // sorted by (dimension desc, object, J)
};

/// Glue (object, J) pairs along the J-reflections.  J ranges over the
/// proper subsets of the index set; the single (-1)-dimensional cell (J =
/// everything) is added only when `include_empty_cell` is set.
CellComplex build_complex(const CartanGraph& g, bool include_empty_cell = false);

/// Number of cells in each dimension.
std::map<int, long long> cell_counts(const CellComplex& c);

/// Alternating sum over the dimensions >= 0.
long long euler_characteristic(const CellComplex& c);

/// Data attached to one cell, computed at its least member: the localization
/// (the deleted coordinates of the roots vanishing on the cell), the
/// coordinate-deletion restriction, and optionally the localized/restricted
/// Hilbert series when per-object braidings are supplied (see
/// braidings_along).  The true cell invariants — restricted multiset,
/// restricted series, localized count and localized dimension — are checked
/// for agreement across all members (std::domain_error on disagreement); the
/// localization itself and its series are representative data, invariant
/// only up to reflections inside the cell's parabolic.
struct CellDecoration {
    RootSet localization;  // rank |J|
    RestrictionReport restriction;
    bool has_series = false;
    HilbertSeries localized_series;
    HilbertSeries restricted_series;
};

CellDecoration decorate_cell(const CartanGraph& g, const Cell& cell,
                             const std::vector<BraidingMatrix>* braidings = nullptr);

}  // namespace rootarr
