#include "rootarr/nichols.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace rootarr {

namespace {

void check_square(const BraidingMatrix& b) {
    if (b.rank <= 0 || static_cast<int>(b.q.size()) != b.rank)
        throw std::domain_error("braiding matrix is not square");
    for (const auto& row : b.q)
        if (static_cast<int>(row.size()) != b.rank)
            throw std::domain_error("braiding matrix is not square");
}

std::string braiding_key(const BraidingMatrix& b) {
    std::string s;
    for (const auto& row : b.q)
        for (const UnityRoot& x : row) {
            s += x.exponent().str();
            s += ';';
        }
    return s;
}

}  // namespace

UnityRoot bicharacter(const BraidingMatrix& b, const IntVec& v, const IntVec& w) {
    check_square(b);
    UnityRoot out;
    for (int i = 0; i < b.rank; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < b.rank; ++j) {
            if (w[j] == 0) continue;
            out *= b.q[i][j].pow(static_cast<long long>(v[i]) * w[j]);
        }
    }
    return out;
}

UnityRoot selfbraiding(const BraidingMatrix& b, const IntVec& v) { return bicharacter(b, v, v); }

IntMat cartan_from_braiding(const BraidingMatrix& b) {
    check_square(b);
    IntMat c;
    c.rows.assign(b.rank, IntVec(b.rank, 0));
    for (int i = 0; i < b.rank; ++i) {
        c.rows[i][i] = 2;
        const UnityRoot qii = b.q[i][i];
        const long long n = qii.order();
        for (int j = 0; j < b.rank; ++j) {
            if (i == j) continue;
            const UnityRoot prod = b.q[i][j] * b.q[j][i];
            if (qii.is_one()) {
                if (!prod.is_one())
                    throw std::domain_error("not of finite Cartan type at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
                c.rows[i][j] = 0;
                continue;
            }
            // minimal m with q_ii^m * q_ij * q_ji == 1 or ord(q_ii) | m+1;
            // the second condition fires at m = n-1 at the latest.
            for (long long m = 0; m < n; ++m) {
                if ((qii.pow(m) * prod).is_one() || (m + 1) % n == 0) {
                    c.rows[i][j] = -m;
                    break;
                }
            }
        }
    }
    return c;
}

BraidingMatrix reflect_braiding(const BraidingMatrix& b, int i) {
    check_square(b);
    if (i < 0 || i >= b.rank) throw std::domain_error("reflection index out of range");
    const IntMat c = cartan_from_braiding(b);
    const IntMat s = reflection_matrix(c, i);
    BraidingMatrix out;
    out.rank = b.rank;
    out.q.assign(b.rank, std::vector<UnityRoot>(b.rank));
    std::vector<IntVec> images(b.rank);
    for (int j = 0; j < b.rank; ++j) {
        IntVec unit(b.rank, 0);
        unit[j] = 1;
        images[j] = s * unit;
    }
    for (int j = 0; j < b.rank; ++j)
        for (int k = 0; k < b.rank; ++k) out.q[j][k] = bicharacter(b, images[j], images[k]);
    return out;
}

BraidedGraph enumerate_braided(const BraidingMatrix& seed, std::size_t max_objects,
                               std::size_t max_roots) {
    check_square(seed);
    BraidedGraph g;
    g.rank = seed.rank;

    std::map<std::string, int> seen;
    g.objects.push_back({seed, cartan_from_braiding(seed), RootSet{}});
    g.edges.emplace_back(g.rank, -1);
    seen.emplace(braiding_key(seed), 0);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank; ++i) {
            if (g.edges[a][i] >= 0) continue;
            const BraidingMatrix image = reflect_braiding(g.objects[a].braiding, i);
            const std::string key = braiding_key(image);
            auto it = seen.find(key);
            int b;
            if (it != seen.end()) {
                b = it->second;
            } else {
                if (g.objects.size() >= max_objects)
                    throw std::domain_error("not finite within bound");
                b = static_cast<int>(g.objects.size());
                g.objects.push_back({image, cartan_from_braiding(image), RootSet{}});
                g.edges.emplace_back(g.rank, -1);
                seen.emplace(key, b);
                queue.push_back(b);
            }
            g.edges[a][i] = b;
            g.edges[b][i] = a;
        }
    }

    // Root sets: close the unit vectors under transporting along every edge
    // (v in roots(a) implies s_i(v) in roots(edge target), sign-normalized),
    // iterating to a fixpoint.
    std::vector<std::set<IntVec>> rsets(g.objects.size());
    for (std::size_t a = 0; a < g.objects.size(); ++a)
        for (int i = 0; i < g.rank; ++i) {
            IntVec unit(g.rank, 0);
            unit[i] = 1;
            rsets[a].insert(unit);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < g.objects.size(); ++a)
            for (int i = 0; i < g.rank; ++i) {
                const int b = g.edges[a][i];
                const IntMat s = reflection_matrix(g.objects[a].cartan, i);
                for (const IntVec& v : rsets[a]) {
                    IntVec w = s * v;
                    bool nonneg = true, nonpos = true;
                    for (Coord x : w) {
                        if (x < 0) nonneg = false;
                        if (x > 0) nonpos = false;
                    }
                    if (nonpos)
                        for (Coord& x : w) x = -x;
                    else if (!nonneg)
                        throw std::domain_error(
                            "not a Cartan-graph object: transported root " + to_string(v) +
                            " has mixed sign");
                    if (rsets[b].insert(std::move(w)).second) {
                        grew = true;
                        if (rsets[b].size() > max_roots)
                            throw std::domain_error("not finite within bound");
                    }
                }
            }
    }
    for (std::size_t a = 0; a < g.objects.size(); ++a) {
        RootSet r;
        r.rank = g.rank;
        r.positive.assign(rsets[a].begin(), rsets[a].end());
        validate_root_set(r);
        g.objects[a].roots = std::move(r);
    }
    return g;
}

HilbertSeries::HilbertSeries(std::vector<HilbertFactor> factors) : factors_(std::move(factors)) {
    for (const HilbertFactor& f : factors_)
        if (f.order < 1 || f.height < 1)
            throw std::domain_error("Hilbert factor parameters must be positive");
    std::sort(factors_.begin(), factors_.end());
}

ZZ HilbertSeries::dimension() const {
    ZZ d = 1;
    for (const HilbertFactor& f : factors_) d *= f.order;
    return d;
}

std::vector<ZZ> HilbertSeries::expansion() const {
    std::vector<ZZ> poly{ZZ(1)};
    for (const HilbertFactor& f : factors_) {
        const std::size_t extra = static_cast<std::size_t>(f.height) * (f.order - 1);
        std::vector<ZZ> next(poly.size() + extra, ZZ(0));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (poly[d] == 0) continue;
            for (long long k = 0; k < f.order; ++k)
                next[d + static_cast<std::size_t>(k) * f.height] += poly[d];
        }
        poly = std::move(next);
    }
    return poly;
}

std::string HilbertSeries::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(factors_[i].order) + ")_{t";
        if (factors_[i].height != 1) s += "^" + std::to_string(factors_[i].height);
        s += "}";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

HilbertSeries hilbert_full(const BraidingMatrix& b, const RootSet& roots) {
    check_square(b);
    if (b.rank != roots.rank) throw std::domain_error("braiding and root set rank mismatch");
    std::vector<HilbertFactor> factors;
    factors.reserve(roots.positive.size());
    for (const IntVec& v : roots.positive) {
        const long long n = ord(selfbraiding(b, v));
        if (n == 1)
            throw std::domain_error("infinite-dimensional root direction: " + to_string(v));
        factors.push_back({n, height(v)});
    }
    return HilbertSeries(std::move(factors));
}

RestrictedSeries hilbert_restricted(const BraidingMatrix& b, const RootSet& roots,
                                    const std::vector<int>& J) {
    check_square(b);
    if (b.rank != roots.rank) throw std::domain_error("braiding and root set rank mismatch");
    std::vector<bool> in_J(roots.rank, false);
    for (int j : J) {
        if (j < 0 || j >= roots.rank)
            throw std::domain_error("index out of range: " + std::to_string(j + 1));
        in_J[j] = true;
    }
    std::vector<HilbertFactor> loc, res;
    for (const IntVec& v : roots.positive) {
        const long long n = ord(selfbraiding(b, v));
        if (n == 1)
            throw std::domain_error("infinite-dimensional root direction: " + to_string(v));
        Coord kept = 0;
        for (int i = 0; i < roots.rank; ++i)
            if (!in_J[i]) kept += v[i];
        if (kept == 0)
            loc.push_back({n, height(v)});
        else
            res.push_back({n, kept});
    }
    return {HilbertSeries(std::move(loc)), HilbertSeries(std::move(res))};
}

std::vector<BraidingMatrix> braidings_along(const CartanGraph& g, const BraidingMatrix& seed) {
    check_square(seed);
    if (seed.rank != g.rank) throw std::domain_error("braiding and graph rank mismatch");
    if (g.objects.empty()) throw std::domain_error("empty graph");
    if (cartan_from_braiding(seed) != g.objects[0].cartan)
        throw std::domain_error("braiding is not compatible with the seed object");

    std::vector<BraidingMatrix> out(g.objects.size());
    std::vector<bool> have(g.objects.size(), false);
    out[0] = seed;
    have[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank; ++i) {
            const int b = g.edges[a][i];
            if (b < 0 || have[b]) continue;
            out[b] = reflect_braiding(out[a], i);
            have[b] = true;
            queue.push_back(b);
        }
    }
    for (std::size_t a = 0; a < g.objects.size(); ++a)
        if (!have[a]) throw std::domain_error("graph is not connected");
    return out;
}

}  // namespace rootarr
