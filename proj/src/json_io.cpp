#include "rootarr/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace rootarr {

namespace {

ojson json_int(const ZZ& z) {
    // Big integers go out as decimal strings; everything that fits stays a
    // plain JSON number.
    static const ZZ lo = std::numeric_limits<long long>::min();
    static const ZZ hi = std::numeric_limits<long long>::max();
    if (z >= lo && z <= hi) return z.convert_to<long long>();
    return z.str();
}

ojson json_vec(const IntVec& v) {
    ojson a = ojson::array();
    for (Coord c : v) a.push_back(c);
    return a;
}

ojson json_vecs(const std::vector<IntVec>& vs) {
    ojson a = ojson::array();
    for (const auto& v : vs) a.push_back(json_vec(v));
    return a;
}

ojson json_indices(const std::vector<int>& idx) {
    ojson a = ojson::array();
    for (int i : idx) a.push_back(i + 1);
    return a;
}

ojson json_unity(const UnityRoot& u) {
    ojson j = ojson::object();
    j["num"] = json_int(u.exponent().num());
    j["den"] = json_int(u.exponent().den());
    return j;
}

ojson json_entries(const RootMultiset& m) {
    ojson a = ojson::array();
    for (const auto& e : m.entries) {
        ojson je = ojson::object();
        je["root"] = json_vec(e.root);
        je["k"] = e.multiple;
        je["mult"] = e.multiplicity;
        a.push_back(je);
    }
    return a;
}

}  // namespace

ojson to_json(const IntMat& m) {
    ojson a = ojson::array();
    for (const auto& row : m.rows) a.push_back(json_vec(row));
    return a;
}

ojson to_json(const RootSet& r) {
    ojson j = ojson::object();
    j["rank"] = r.rank;
    j["positive_roots"] = json_vecs(r.positive);
    return j;
}

ojson to_json(const CartanGraph& g) {
    ojson j = ojson::object();
    j["rank"] = g.rank;
    ojson objs = ojson::array();
    for (std::size_t a = 0; a < g.objects.size(); ++a) {
        ojson o = ojson::object();
        o["id"] = a;
        o["positive_roots"] = json_vecs(g.objects[a].roots.positive);
        o["cartan"] = to_json(g.objects[a].cartan);
        objs.push_back(o);
    }
    j["objects"] = objs;
    ojson edges = ojson::array();
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
        for (int i = 0; i < g.rank; ++i) {
            int b = g.edges[a][i];
            if (static_cast<int>(a) <= b) edges.push_back({a, i + 1, b});
        }
    }
    j["edges"] = edges;
    return j;
}

ojson to_json(const AxiomReport& report) {
    ojson j = ojson::object();
    j["ok"] = report.ok();
    ojson vs = ojson::array();
    for (const auto& v : report.violations) {
        ojson jv = ojson::object();
        jv["axiom"] = v.axiom;
        jv["object"] = v.object;
        if (v.i >= 0) jv["i"] = v.i + 1;
        if (v.j >= 0) jv["j"] = v.j + 1;
        jv["detail"] = v.detail;
        vs.push_back(jv);
    }
    j["violations"] = vs;
    return j;
}

ojson to_json(const RestrictionReport& report) {
    ojson j = ojson::object();
    j["entries"] = json_entries(report.multiset);
    j["localized"] = json_vecs(report.localized);
    ojson fibers = ojson::array();
    for (const auto& f : report.fibers) {
        ojson jf = ojson::object();
        jf["root"] = json_vec(f.root);
        jf["k"] = f.multiple;
        jf["preimages"] = json_vecs(f.preimages);
        fibers.push_back(jf);
    }
    j["fibers"] = fibers;
    return j;
}

ojson to_json(const FoldingDecomposition& d) {
    ojson j = ojson::object();
    j["chamber"] = to_json(d.chamber);
    j["frame"] = to_json(d.frame);
    j["delta1"] = json_indices(d.delta1);
    ojson sigma = ojson::array();
    for (int s : d.sigma) sigma.push_back(s + 1);
    j["sigma"] = sigma;
    return j;
}

ojson to_json(const BraidingMatrix& b) {
    ojson j = ojson::object();
    j["rank"] = b.rank;
    ojson q = ojson::array();
    for (const auto& row : b.q) {
        ojson jr = ojson::array();
        for (const auto& u : row) jr.push_back(json_unity(u));
        q.push_back(jr);
    }
    j["q"] = q;
    return j;
}

ojson to_json(const HilbertSeries& h) {
    ojson j = ojson::object();
    ojson factors = ojson::array();
    for (const auto& f : h.factors()) factors.push_back({f.order, f.height});
    j["factors"] = factors;
    j["dimension"] = h.dimension().str();
    return j;
}

ojson to_json(const SurveyResult& s) {
    ojson j = ojson::object();
    j["target_rank"] = s.target_rank;
    j["partial"] = s.partial;
    ojson classes = ojson::object();
    for (const auto& [fp, cls] : s.classes) {
        ojson jc = ojson::object();
        jc["reduced"] = to_json(cls.reduced);
        jc["entries"] = json_entries(cls.multiset);
        jc["hits"] = cls.hits;
        jc["witness_object"] = cls.witness_object;
        jc["witness_J"] = json_indices(cls.witness_J);
        classes[fp] = jc;
    }
    j["classes"] = classes;
    return j;
}

namespace {

ojson cell_json(const Cell& cell) {
    ojson jc = ojson::object();
    jc["dimension"] = cell.dimension;
    jc["object"] = cell.object;
    jc["J"] = json_indices(cell.J);
    ojson members = ojson::array();
    for (int m : cell.members) members.push_back(m);
    jc["members"] = members;
    return jc;
}

ojson complex_header(const CellComplex& c) {
    ojson j = ojson::object();
    j["rank"] = c.rank;
    j["includes_empty_cell"] = c.includes_empty_cell;
    ojson counts = ojson::object();
    for (const auto& [dim, n] : cell_counts(c)) counts[std::to_string(dim)] = n;
    j["counts"] = counts;
    j["euler_characteristic"] = euler_characteristic(c);
    return j;
}

}  // namespace

ojson to_json(const CellComplex& c) {
    ojson j = complex_header(c);
    ojson cells = ojson::array();
    for (const auto& cell : c.cells) cells.push_back(cell_json(cell));
    j["cells"] = cells;
    return j;
}

ojson decorated_complex_json(const CellComplex& c, const CartanGraph& graph,
                             const std::vector<BraidingMatrix>* braidings) {
    ojson j = complex_header(c);
    ojson cells = ojson::array();
    for (const auto& cell : c.cells) {
        ojson jc = cell_json(cell);
        CellDecoration d = decorate_cell(graph, cell, braidings);
        jc["localization"] = to_json(d.localization);
        jc["restriction"] = to_json(d.restriction);
        if (d.has_series) {
            jc["localized_series"] = to_json(d.localized_series);
            jc["restricted_series"] = to_json(d.restricted_series);
        }
        cells.push_back(jc);
    }
    j["cells"] = cells;
    return j;
}

IntMat intmat_from_json(const ojson& j) {
    IntMat m;
    for (const auto& row : j) {
        IntVec r;
        for (const auto& entry : row) r.push_back(entry.get<Coord>());
        m.rows.push_back(std::move(r));
    }
    for (const auto& row : m.rows)
        if (row.size() != m.rows.size())
            throw std::domain_error("invalid matrix: expected a square integer matrix");
    return m;
}

RootSet rootset_from_json(const ojson& j) {
    int rank = j.at("rank").get<int>();
    std::vector<IntVec> roots;
    for (const auto& row : j.at("positive_roots")) {
        IntVec v;
        for (const auto& entry : row) v.push_back(entry.get<Coord>());
        roots.push_back(std::move(v));
    }
    return make_root_set(rank, std::move(roots));
}

BraidingMatrix braiding_from_json(const ojson& j) {
    BraidingMatrix b;
    b.rank = j.at("rank").get<int>();
    for (const auto& row : j.at("q")) {
        std::vector<UnityRoot> r;
        for (const auto& entry : row)
            r.push_back(UnityRoot::from_exponent(entry.at("num").get<long long>(),
                                                 entry.at("den").get<long long>()));
        b.q.push_back(std::move(r));
    }
    if (b.rank <= 0 || b.q.size() != static_cast<std::size_t>(b.rank))
        throw std::domain_error("invalid braiding matrix: expected rank x rank entries");
    for (const auto& row : b.q)
        if (row.size() != static_cast<std::size_t>(b.rank))
            throw std::domain_error("invalid braiding matrix: expected rank x rank entries");
    return b;
}

}  // namespace rootarr
