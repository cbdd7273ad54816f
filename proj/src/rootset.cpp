#include "rootarr/rootset.hpp"

#include <algorithm>
#include <numeric>

namespace rootarr {

namespace {

bool is_unit_vector(const IntVec& v, int* index = nullptr) {
    int ones = 0, at = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 1) {
            ++ones;
            at = static_cast<int>(j);
        } else if (v[j] != 0) {
            return false;
        }
    }
    if (ones != 1) return false;
    if (index) *index = at;
    return true;
}

bool proportional(const IntVec& a, const IntVec& b) {
    // Both nonzero with nonnegative entries; a ~ b iff cross ratios agree.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

}  // namespace

RootSet make_root_set(int rank, std::vector<IntVec> positive) {
    std::sort(positive.begin(), positive.end());
    RootSet r{rank, std::move(positive)};
    validate_root_set(r);
    return r;
}

bool is_valid_root_set(const RootSet& r, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (r.rank <= 0) return fail("rank must be positive");
    std::vector<bool> unit_seen(r.rank, false);
    for (const IntVec& v : r.positive) {
        if (static_cast<int>(v.size()) != r.rank)
            return fail("root " + to_string(v) + " has wrong length");
        bool zero = true;
        for (Coord x : v) {
            if (x < 0) return fail("root " + to_string(v) + " has a negative entry");
            if (x != 0) zero = false;
        }
        if (zero) return fail("zero vector is not a root");
        int idx;
        if (is_unit_vector(v, &idx)) unit_seen[idx] = true;
    }
    for (int i = 0; i < r.rank; ++i)
        if (!unit_seen[i])
            return fail("missing simple root e_" + std::to_string(i + 1));
    for (std::size_t a = 0; a < r.positive.size(); ++a)
        for (std::size_t b = a + 1; b < r.positive.size(); ++b) {
            if (r.positive[a] == r.positive[b])
                return fail("duplicate root " + to_string(r.positive[a]));
            if (proportional(r.positive[a], r.positive[b]))
                return fail("proportional roots " + to_string(r.positive[a]) + " and " +
                            to_string(r.positive[b]));
        }
    return true;
}

void validate_root_set(const RootSet& r) {
    std::string why;
    if (!is_valid_root_set(r, &why)) throw std::domain_error("invalid root set: " + why);
}

bool contains_root(const RootSet& r, const IntVec& v) {
    return std::binary_search(r.positive.begin(), r.positive.end(), v);
}

Coord height(const IntVec& v) {
    Coord h = 0;
    for (Coord x : v) h += x;
    return h;
}

IntMat cartan_from_roots(const RootSet& r) {
    IntMat c;
    c.rows.assign(r.rank, IntVec(r.rank, 0));
    // Sorting guarantees binary search works; roots stay sorted by invariant,
    // but enforce here for robustness on hand-built structs.
    RootSet s = r;
    std::sort(s.positive.begin(), s.positive.end());
    for (int i = 0; i < s.rank; ++i) {
        c.rows[i][i] = 2;
        for (int j = 0; j < s.rank; ++j) {
            if (i == j) continue;
            Coord k = 0;
            IntVec v(s.rank, 0);
            v[j] = 1;
            for (;;) {
                v[i] += 1;
                if (!contains_root(s, v)) break;
                ++k;
            }
            c.rows[i][j] = -k;
        }
    }
    return c;
}

void validate_cartan(const IntMat& c) {
    const int n = c.size();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c.rows[i].size()) != n)
            throw std::domain_error("Cartan matrix is not square");
        if (c.rows[i][i] != 2)
            throw std::domain_error("Cartan matrix diagonal entry is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c.rows[i][j] > 0)
                throw std::domain_error("Cartan matrix has a positive off-diagonal entry");
            if ((c.rows[i][j] == 0) != (c.rows[j][i] == 0))
                throw std::domain_error("Cartan matrix zeros are not symmetric");
        }
    }
}

IntMat reflection_matrix(const IntMat& cartan, int i) {
    IntMat m = IntMat::identity(cartan.size());
    for (int j = 0; j < cartan.size(); ++j) m.rows[i][j] -= cartan.rows[i][j];
    return m;
}

RootSet reflect_object(const RootSet& r, int i) {
    const IntMat c = cartan_from_roots(r);
    IntVec unit(r.rank, 0);
    unit[i] = 1;
    std::vector<IntVec> out;
    out.reserve(r.positive.size());
    for (const IntVec& v : r.positive) {
        if (v == unit) {
            out.push_back(unit);  // s_i(e_i) = -e_i, folded back
            continue;
        }
        // s_i(v) = v - <row_i(C), v> * e_i
        Coord pairing = 0;
        for (int j = 0; j < r.rank; ++j) pairing += c.rows[i][j] * v[j];
        IntVec w = v;
        w[i] -= pairing;
        if (w[i] < 0)
            throw std::domain_error("not a Cartan-graph object: reflection of " + to_string(v) +
                                    " at index " + std::to_string(i + 1) +
                                    " leaves the positive cone");
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    for (std::size_t a = 0; a + 1 < out.size(); ++a)
        if (out[a] == out[a + 1])
            throw std::domain_error("not a Cartan-graph object: reflection at index " +
                                    std::to_string(i + 1) + " is not injective");
    return RootSet{r.rank, std::move(out)};
}

std::string serialize_roots(const std::vector<IntVec>& roots) {
    std::string s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < roots[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(roots[i][j]);
        }
    }
    return s;
}

std::string canonical_form(const RootSet& r) {
    std::vector<int> perm(r.rank);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<IntVec> best;
    bool have = false;
    do {
        std::vector<IntVec> image;
        image.reserve(r.positive.size());
        for (const IntVec& v : r.positive) {
            IntVec w(r.rank);
            for (int j = 0; j < r.rank; ++j) w[perm[j]] = v[j];
            image.push_back(std::move(w));
        }
        std::sort(image.begin(), image.end());
        if (!have || image < best) {
            best = std::move(image);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return serialize_roots(best);
}

}  // namespace rootarr
