/// @file json_io.hpp
/// @brief JSON (de)serialization for all public value types.  Output uses
///        insertion-ordered objects so serialization is byte-stable; big
///        integers are emitted as decimal strings; simple-root indices are
///        1-based in JSON, object ids 0-based.

#pragma once

#include "rootarr/catalog.hpp"
#include "rootarr/cellcomplex.hpp"
#include "rootarr/groupoid.hpp"
#include "rootarr/nichols.hpp"
#include "rootarr/restriction.hpp"
#include "rootarr/rootset.hpp"

#include <json.hpp>

namespace rootarr {

using ojson = nlohmann::ordered_json;

ojson to_json(const IntMat& m);
ojson to_json(const RootSet& r);
ojson to_json(const CartanGraph& g);
ojson to_json(const AxiomReport& report);
ojson to_json(const RestrictionReport& report);
ojson to_json(const FoldingDecomposition& d);
ojson to_json(const BraidingMatrix& b);
ojson to_json(const HilbertSeries& h);
ojson to_json(const SurveyResult& s);

/// Complex serialization; when `graph` and optional `braidings` are given,
/// every cell carries its decoration.
ojson to_json(const CellComplex& c);
ojson decorated_complex_json(const CellComplex& c, const CartanGraph& graph,
                             const std::vector<BraidingMatrix>* braidings = nullptr);

/// Parsers throw nlohmann::json exceptions on structural problems (missing
/// keys, wrong types); semantic validation stays with the library functions.
IntMat intmat_from_json(const ojson& j);
RootSet rootset_from_json(const ojson& j);
BraidingMatrix braiding_from_json(const ojson& j);

}  // namespace rootarr
