#include "rootarr/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>

namespace rootarr {

namespace {

std::string frame_key(const IntMat& m) {
    std::string s;
    for (const IntVec& row : m.rows)
        for (Coord x : row) {
            s += std::to_string(x);
            s += ',';
        }
    return s;
}

// Positive roots supported on {i, j} only; this is the bound m_ij of the
// exchange cycle at (i, j).
int bond_count(const RootSet& r, int i, int j) {
    int m = 0;
    for (const IntVec& v : r.positive) {
        bool ok = true;
        for (int k = 0; k < r.rank; ++k)
            if (k != i && k != j && v[k] != 0) {
                ok = false;
                break;
            }
        if (ok) ++m;
    }
    return m;
}

}  // namespace

CartanGraph enumerate_groupoid_partial(const RootSet& seed, std::size_t max_objects,
                                       bool& complete) {
    validate_root_set(seed);
    complete = true;

    CartanGraph g;
    g.rank = seed.rank;

    RootSet start = seed;
    std::sort(start.positive.begin(), start.positive.end());

    std::unordered_map<std::string, int> seen;
    const IntMat id = IntMat::identity(seed.rank);
    g.objects.push_back({start, cartan_from_roots(start), id, id});
    g.edges.emplace_back(seed.rank, -1);
    seen.emplace(frame_key(id), 0);

    std::deque<int> queue{0};
    while (!queue.empty() && complete) {
        const int a = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank; ++i) {
            if (g.edges[a][i] >= 0) continue;
            // Copy, not reference: g.objects may reallocate below.
            const IntMat s = reflection_matrix(g.objects[a].cartan, i);
            const IntMat frame = s * g.objects[a].frame;
            const std::string key = frame_key(frame);
            auto it = seen.find(key);
            int b;
            if (it != seen.end()) {
                b = it->second;
            } else {
                if (g.objects.size() >= max_objects) {
                    complete = false;
                    break;
                }
                RootSet image = reflect_object(g.objects[a].roots, i);
                b = static_cast<int>(g.objects.size());
                g.objects.push_back(
                    {image, cartan_from_roots(image), frame, g.objects[a].frame_inv * s});
                g.edges.emplace_back(g.rank, -1);
                seen.emplace(key, b);
                queue.push_back(b);
            }
            g.edges[a][i] = b;
            g.edges[b][i] = a;
        }
    }
    return g;
}

CartanGraph enumerate_groupoid(const RootSet& seed, std::size_t max_objects) {
    bool complete = true;
    CartanGraph g = enumerate_groupoid_partial(seed, max_objects, complete);
    if (!complete) throw std::domain_error("not finite within bound");
    return g;
}

AxiomReport verify_axioms(const CartanGraph& g) {
    AxiomReport report;
    auto add = [&](const std::string& ax, int obj, int i, int j, const std::string& d) {
        report.violations.push_back({ax, obj, i, j, d});
    };

    for (int a = 0; a < static_cast<int>(g.objects.size()); ++a) {
        const GroupoidObject& ob = g.objects[a];
        std::string why;
        if (!is_valid_root_set(ob.roots, &why)) {
            add("valid", a, -1, -1, why);
            continue;
        }
        if (cartan_from_roots(ob.roots) != ob.cartan)
            add("valid", a, -1, -1, "stored Cartan matrix does not match the root set");

        // R2: no doubled roots.
        for (const IntVec& v : ob.roots.positive) {
            IntVec w(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) w[k] = 2 * v[k];
            if (contains_root(ob.roots, w)) {
                add("R2", a, -1, -1, "both " + to_string(v) + " and its double are roots");
                break;
            }
        }

        for (int i = 0; i < g.rank; ++i) {
            const int b = g.edges[a][i];
            if (b < 0 || b >= static_cast<int>(g.objects.size())) {
                add("C1", a, i, -1, "missing reflection target");
                continue;
            }
            // C1: the edge maps are involutions.
            if (g.edges[b][i] != a)
                add("C1", a, i, -1, "reflection at this index is not an involution");
            // C2: Cartan entries c_ij are stable along the i-th reflection.
            for (int j = 0; j < g.rank; ++j)
                if (g.objects[b].cartan.rows[i][j] != ob.cartan.rows[i][j])
                    add("C2", a, i, j, "Cartan entry changes along its own reflection");
            // R3: the neighbouring object carries exactly s_i of this root set.
            try {
                if (reflect_object(ob.roots, i) != g.objects[b].roots)
                    add("R3", a, i, -1, "neighbour root set is not the reflected set");
            } catch (const std::domain_error& e) {
                add("R3", a, i, -1, e.what());
            }
        }

        // R4: the (i, j) exchange walk returns after m_ij double steps.
        for (int i = 0; i < g.rank; ++i)
            for (int j = i + 1; j < g.rank; ++j) {
                const int m = bond_count(ob.roots, i, j);
                int b = a;
                bool fine = true;
                for (int step = 0; step < m; ++step) {
                    const int via = g.edges[b][j];
                    if (via < 0 || g.edges[via][i] < 0) {
                        fine = false;
                        break;
                    }
                    b = g.edges[via][i];
                }
                if (!fine || b != a)
                    add("R4", a, i, j,
                        "exchange walk of length " + std::to_string(m) + " does not close");
            }
    }
    return report;
}

WeylPath weyl_path(const CartanGraph& g, int from, int to) {
    const int n = static_cast<int>(g.objects.size());
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::domain_error("weyl_path: object id out of range");

    std::vector<int> parent(n, -2), via(n, -1);
    parent[from] = -1;
    std::deque<int> queue{from};
    while (!queue.empty() && parent[to] == -2) {
        const int a = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank; ++i) {
            const int b = g.edges[a][i];
            if (b >= 0 && parent[b] == -2) {
                parent[b] = a;
                via[b] = i;
                queue.push_back(b);
            }
        }
    }
    if (parent[to] == -2) throw std::domain_error("weyl_path: target not reachable");

    std::vector<int> word;
    for (int b = to; b != from; b = parent[b]) word.push_back(via[b]);
    std::reverse(word.begin(), word.end());

    WeylPath path{word, IntMat::identity(g.rank)};
    int b = from;
    for (int i : word) {
        path.matrix = path.matrix * reflection_matrix(g.objects[b].cartan, i);
        b = g.edges[b][i];
    }
    return path;
}

std::map<std::string, std::vector<int>> canonical_classes(const CartanGraph& g) {
    std::map<std::string, std::vector<int>> classes;
    for (int a = 0; a < static_cast<int>(g.objects.size()); ++a)
        classes[canonical_form(g.objects[a].roots)].push_back(a);
    return classes;
}

std::string object_change_dot(const CartanGraph& g) {
    // One node per canonical class, ordered by least member id; edges carry
    // the 1-based reflection indices that move between the classes.
    std::map<std::string, std::vector<int>> classes = canonical_classes(g);
    std::vector<std::pair<int, const std::vector<int>*>> ordered;
    std::unordered_map<int, int> class_of;  // object -> class index
    for (const auto& [key, members] : classes) ordered.push_back({members.front(), &members});
    std::sort(ordered.begin(), ordered.end());
    for (std::size_t c = 0; c < ordered.size(); ++c)
        for (int member : *ordered[c].second) class_of[member] = static_cast<int>(c);

    std::string dot = "graph object_changes {\n";
    for (std::size_t c = 0; c < ordered.size(); ++c) {
        dot += "  c" + std::to_string(c) + " [label=\"class " + std::to_string(c) + "\\n" +
               std::to_string(ordered[c].second->size()) + " object(s)\"];\n";
    }
    std::set<std::tuple<int, int, int>> drawn;
    for (int a = 0; a < static_cast<int>(g.objects.size()); ++a)
        for (int i = 0; i < g.rank; ++i) {
            const int b = g.edges[a][i];
            if (b < 0) continue;
            const int ca = class_of[a], cb = class_of[b];
            auto key = std::make_tuple(std::min(ca, cb), std::max(ca, cb), i);
            if (drawn.insert(key).second)
                dot += "  c" + std::to_string(std::min(ca, cb)) + " -- c" +
                       std::to_string(std::max(ca, cb)) + " [label=\"" + std::to_string(i + 1) +
                       "\"];\n";
        }
    dot += "}\n";
    return dot;
}

}  // namespace rootarr
