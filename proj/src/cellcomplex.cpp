#include "rootarr/cellcomplex.hpp"

#include <algorithm>
#include <numeric>

namespace rootarr {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<int> mask_to_indices(unsigned mask, int rank) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) J.push_back(i);
    return J;
}

}  // namespace

CellComplex build_complex(const CartanGraph& g, bool include_empty_cell) {
    if (g.rank > 30) throw std::domain_error("rank too large for the cell complex");
    const int n = static_cast<int>(g.objects.size());
    const unsigned full = (1u << g.rank) - 1u;

    CellComplex out;
    out.rank = g.rank;
    out.includes_empty_cell = include_empty_cell;

    for (unsigned mask = 0; mask <= full; ++mask) {
        if (mask == full && !include_empty_cell) continue;
        const std::vector<int> J = mask_to_indices(mask, g.rank);
        UnionFind uf(n);
        for (int a = 0; a < n; ++a)
            for (int i : J)
                if (g.edges[a][i] >= 0) uf.unite(a, g.edges[a][i]);
        std::map<int, std::vector<int>> classes;
        for (int a = 0; a < n; ++a) classes[uf.find(a)].push_back(a);
        for (auto& [rep, members] : classes) {
            Cell cell;
            cell.dimension = g.rank - static_cast<int>(J.size()) - 1;
            cell.object = rep;  // find() roots at the least member
            cell.J = J;
            cell.members = std::move(members);
            out.cells.push_back(std::move(cell));
        }
    }

    std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        if (a.object != b.object) return a.object < b.object;
        return a.J < b.J;
    });
    return out;
}

std::map<int, long long> cell_counts(const CellComplex& c) {
    std::map<int, long long> counts;
    for (const Cell& cell : c.cells) ++counts[cell.dimension];
    return counts;
}

long long euler_characteristic(const CellComplex& c) {
    long long chi = 0;
    for (const auto& [dim, count] : cell_counts(c))
        if (dim >= 0) chi += (dim % 2 == 0) ? count : -count;
    return chi;
}

namespace {

// The invariants a decoration must share at every member of a cell.  A
// J-reflection changes only J-coordinates, which the restriction deletes, so
// the restricted multiset (and with a braiding, the restricted series) is
// literally equal at all members.  The localized algebras, by contrast, are
// only reflections of one another inside the J-parabolic: equal dimension,
// but generally different series — so only the dimension is compared.
struct DecorationSummary {
    RootMultiset multiset;
    std::size_t localized_count = 0;
    std::vector<HilbertFactor> res;
    ZZ loc_dimension = 0;

    friend bool operator==(const DecorationSummary&, const DecorationSummary&) = default;
};

DecorationSummary summarize(const RestrictionReport& report, const RestrictedSeries* series) {
    DecorationSummary s;
    s.multiset = report.multiset;
    s.localized_count = report.localized.size();
    if (series) {
        s.res = series->restricted.factors();
        s.loc_dimension = series->localized.dimension();
    }
    return s;
}

}  // namespace

CellDecoration decorate_cell(const CartanGraph& g, const Cell& cell,
                             const std::vector<BraidingMatrix>* braidings) {
    if (cell.members.empty()) throw std::domain_error("cell has no members");
    if (braidings && braidings->size() != g.objects.size())
        throw std::domain_error("braidings do not match the graph");

    CellDecoration out;
    // On the (-1)-cell everything is localized: the restricted series is the
    // empty product and the localized series is the representative's full
    // series (its dimension, the cell invariant, is the full dimension).
    const bool want_series = braidings != nullptr;
    bool first = true;
    DecorationSummary reference;
    for (int member : cell.members) {
        const RootSet& roots = g.objects[member].roots;
        RestrictionReport report =
            static_cast<int>(cell.J.size()) == g.rank
                ? RestrictionReport{}  // the (-1)-cell restricts everything away
                : restrict_parabolic(roots, cell.J);
        RestrictedSeries series;
        if (want_series) series = hilbert_restricted((*braidings)[member], roots, cell.J);
        const DecorationSummary s = summarize(report, want_series ? &series : nullptr);
        if (first) {
            reference = s;
            first = false;
            // localization: the deleted coordinates of the localized roots
            std::vector<IntVec> loc_roots;
            if (static_cast<int>(cell.J.size()) == g.rank) {
                loc_roots = roots.positive;
            } else {
                for (const IntVec& v : report.localized) {
                    IntVec w(cell.J.size());
                    for (std::size_t t = 0; t < cell.J.size(); ++t) w[t] = v[cell.J[t]];
                    loc_roots.push_back(std::move(w));
                }
            }
            std::sort(loc_roots.begin(), loc_roots.end());
            out.localization = RootSet{static_cast<int>(cell.J.size()), std::move(loc_roots)};
            out.restriction = std::move(report);
            if (want_series) {
                out.has_series = true;
                out.localized_series = std::move(series.localized);
                out.restricted_series = std::move(series.restricted);
            }
        } else if (!(s == reference)) {
            throw std::domain_error("cell decoration differs between members of one cell");
        }
    }
    return out;
}

}  // namespace rootarr
