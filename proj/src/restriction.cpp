#include "rootarr/restriction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rootarr {

namespace {

void check_index_list(int rank, const std::vector<int>& J) {
    for (std::size_t k = 0; k < J.size(); ++k) {
        if (J[k] < 0 || J[k] >= rank)
            throw std::domain_error("index out of range: " + std::to_string(J[k] + 1));
        if (k > 0 && J[k] <= J[k - 1])
            throw std::domain_error("index list must be strictly increasing");
    }
}

std::vector<int> complement(int rank, const std::vector<int>& J) {
    std::vector<bool> drop(rank, false);
    for (int j : J) drop[j] = true;
    std::vector<int> keep;
    for (int i = 0; i < rank; ++i)
        if (!drop[i]) keep.push_back(i);
    return keep;
}

bool all_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](Coord x) { return x == 0; });
}

// Orbits of a permutation, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits_of(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        for (int j = i; !seen[j]; j = sigma[j]) {
            seen[j] = true;
            orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

void check_permutation(int rank, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != rank)
        throw std::domain_error("permutation has wrong length");
    std::vector<bool> hit(rank, false);
    for (int s : sigma) {
        if (s < 0 || s >= rank || hit[s])
            throw std::domain_error("not a permutation of the indices");
        hit[s] = true;
    }
}

RestrictionReport bucket(const std::vector<std::pair<IntVec, IntVec>>& images, int new_rank) {
    // images: (original root, raw image vector); zero images are localized.
    RestrictionReport report;
    report.multiset.rank = new_rank;
    std::map<std::pair<IntVec, Coord>, Fiber> fibers;
    for (const auto& [orig, img] : images) {
        if (all_zero(img)) {
            report.localized.push_back(orig);
            continue;
        }
        auto [p, k] = primitive(img);
        Fiber& f = fibers[{p, k}];
        f.root = p;
        f.multiple = k;
        f.preimages.push_back(orig);
    }
    for (auto& [key, f] : fibers) {
        report.multiset.entries.push_back(
            {key.first, key.second, static_cast<long long>(f.preimages.size())});
        std::sort(f.preimages.begin(), f.preimages.end());
        report.fibers.push_back(std::move(f));
    }
    std::sort(report.localized.begin(), report.localized.end());
    return report;
}

}  // namespace

long long RootMultiset::total() const {
    long long t = 0;
    for (const RootMultisetEntry& e : entries) t += e.multiplicity;
    return t;
}

std::vector<IntVec> RootMultiset::reduced_roots() const {
    // entries are sorted by (root, multiple), so duplicates are adjacent
    std::vector<IntVec> roots;
    for (const RootMultisetEntry& e : entries)
        if (roots.empty() || roots.back() != e.root) roots.push_back(e.root);
    return roots;
}

RestrictionReport restrict_parabolic(const RootSet& r, const std::vector<int>& J) {
    check_index_list(r.rank, J);
    if (static_cast<int>(J.size()) == r.rank) throw std::domain_error("restriction to origin");
    const std::vector<int> keep = complement(r.rank, J);
    std::vector<std::pair<IntVec, IntVec>> images;
    images.reserve(r.positive.size());
    for (const IntVec& v : r.positive) {
        IntVec img(keep.size());
        for (std::size_t t = 0; t < keep.size(); ++t) img[t] = v[keep[t]];
        images.push_back({v, std::move(img)});
    }
    return bucket(images, static_cast<int>(keep.size()));
}

MultisetRestriction restrict_parabolic(const RootMultiset& m, const std::vector<int>& J) {
    check_index_list(m.rank, J);
    if (static_cast<int>(J.size()) == m.rank) throw std::domain_error("restriction to origin");
    const std::vector<int> keep = complement(m.rank, J);
    MultisetRestriction out;
    out.multiset.rank = static_cast<int>(keep.size());
    std::map<std::pair<IntVec, Coord>, long long> acc;
    for (const RootMultisetEntry& e : m.entries) {
        IntVec img(keep.size());
        for (std::size_t t = 0; t < keep.size(); ++t) img[t] = e.root[keep[t]];
        if (all_zero(img)) {
            out.localized.push_back(e);
            continue;
        }
        auto [p, k] = primitive(img);
        acc[{p, e.multiple * k}] += e.multiplicity;
    }
    for (const auto& [key, mult] : acc)
        out.multiset.entries.push_back({key.first, key.second, mult});
    return out;
}

std::optional<IntVec> automorphism_witness(const RootSet& r, const IntMat& g) {
    std::set<IntVec> images;
    for (const IntVec& v : r.positive) {
        IntVec w = g * v;
        bool nonneg = true, nonpos = true;
        for (Coord x : w) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (nonpos && !nonneg)
            for (Coord& x : w) x = -x;
        else if (!nonneg)
            return v;  // mixed signs: not plus or minus a root
        if (!contains_root(r, w)) return v;
        if (!images.insert(w).second) return v;  // not injective on rays
    }
    return std::nullopt;
}

bool validate_automorphism(const RootSet& r, const IntMat& g) {
    return !automorphism_witness(r, g).has_value();
}

RestrictionReport restrict_permutation(const RootSet& r, const std::vector<int>& sigma) {
    check_permutation(r.rank, sigma);
    IntMat p;
    p.rows.assign(r.rank, IntVec(r.rank, 0));
    for (int i = 0; i < r.rank; ++i) p.rows[sigma[i]][i] = 1;
    if (auto w = automorphism_witness(r, p))
        throw std::domain_error("not an automorphism of the root set: witness " + to_string(*w));

    const std::vector<std::vector<int>> orbits = orbits_of(sigma);
    std::vector<std::pair<IntVec, IntVec>> images;
    images.reserve(r.positive.size());
    for (const IntVec& v : r.positive) {
        IntVec img(orbits.size(), 0);
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int i : orbits[o]) img[o] += v[i];
        images.push_back({v, std::move(img)});
    }
    return bucket(images, static_cast<int>(orbits.size()));
}

RootMultiset restrict_permutation(const RootMultiset& m, const std::vector<int>& sigma) {
    check_permutation(m.rank, sigma);
    // sigma must permute the multiset: each entry's permuted root must occur
    // with the same multiple and multiplicity.
    std::map<std::pair<IntVec, Coord>, long long> table;
    for (const RootMultisetEntry& e : m.entries) table[{e.root, e.multiple}] = e.multiplicity;
    for (const RootMultisetEntry& e : m.entries) {
        IntVec w(m.rank);
        for (int i = 0; i < m.rank; ++i) w[sigma[i]] = e.root[i];
        auto it = table.find({w, e.multiple});
        if (it == table.end() || it->second != e.multiplicity)
            throw std::domain_error("not an automorphism of the root set: witness " +
                                    to_string(e.root));
    }

    const std::vector<std::vector<int>> orbits = orbits_of(sigma);
    RootMultiset out;
    out.rank = static_cast<int>(orbits.size());
    std::map<std::pair<IntVec, Coord>, long long> acc;
    for (const RootMultisetEntry& e : m.entries) {
        IntVec img(orbits.size(), 0);
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int i : orbits[o]) img[o] += e.root[i];
        auto [p, k] = primitive(img);  // img nonzero: entries are nonzero nonneg
        acc[{p, e.multiple * k}] += e.multiplicity;
    }
    for (const auto& [key, mult] : acc) out.entries.push_back({key.first, key.second, mult});
    return out;
}

namespace {

// A simple root of `roots` sent to the negative of a different positive root
// by gb, if any: reflecting there walks towards the chamber where the
// negative part of gb is concentrated on the -1 block.
int pick_descent_move(const RootSet& roots, const IntMat& gb) {
    for (int i = 0; i < roots.rank; ++i) {
        IntVec unit(roots.rank, 0);
        unit[i] = 1;
        IntVec w = gb * unit;
        bool nonpos = true;
        for (Coord x : w) nonpos = nonpos && x <= 0;
        if (!nonpos) continue;
        for (Coord& x : w) x = -x;
        if (w == unit) continue;  // already acts as -1 here
        if (contains_root(roots, w)) return i;
    }
    return -1;
}

}  // namespace

FoldingDecomposition folding_decompose(const RootSet& seed, const IntMat& gmat) {
    validate_root_set(seed);
    if (gmat * gmat != IntMat::identity(seed.rank))
        throw std::domain_error("folding lemma requires involution");
    if (auto w = automorphism_witness(seed, gmat))
        throw std::domain_error("not an automorphism of the root set: witness " + to_string(*w));

    FoldingDecomposition out;
    out.chamber = seed;
    std::sort(out.chamber.positive.begin(), out.chamber.positive.end());
    out.frame = IntMat::identity(seed.rank);
    out.frame_inv = IntMat::identity(seed.rank);

    IntMat gb = gmat;
    const long long n_roots = static_cast<long long>(seed.positive.size());
    const long long step_bound = 4 * (n_roots + 2) * (n_roots + 2);
    long long steps = 0;
    for (;;) {
        const int i = pick_descent_move(out.chamber, gb);
        if (i < 0) break;
        const IntMat s = reflection_matrix(cartan_from_roots(out.chamber), i);
        out.chamber = reflect_object(out.chamber, i);
        out.frame = s * out.frame;
        out.frame_inv = out.frame_inv * s;
        gb = out.frame * gmat * out.frame_inv;
        if (++steps > step_bound)
            throw std::domain_error("folding descent failed to make progress");
    }

    out.sigma.assign(seed.rank, -1);
    std::vector<bool> in_delta(seed.rank, false);
    for (int i = 0; i < seed.rank; ++i) {
        IntVec unit(seed.rank, 0);
        unit[i] = 1;
        IntVec w = gb * unit;
        for (Coord& x : w) x = -x;
        if (w == unit) {
            out.delta1.push_back(i);
            in_delta[i] = true;
            out.sigma[i] = i;
        }
    }
    for (int i = 0; i < seed.rank; ++i) {
        if (in_delta[i]) continue;
        IntVec unit(seed.rank, 0);
        unit[i] = 1;
        const IntVec w = gb * unit;
        // Off the -1 part the image is a simple root plus a tail supported
        // on delta1; zeroing those coordinates must leave a unit vector.
        int at = -1;
        bool unit_like = true;
        for (int j = 0; j < seed.rank; ++j) {
            if (in_delta[j]) continue;
            if (w[j] == 1 && at < 0)
                at = j;
            else if (w[j] != 0)
                unit_like = false;
        }
        if (!unit_like || at < 0)
            throw std::domain_error("folding decomposition failed: residue is not a permutation");
        out.sigma[i] = at;
    }
    std::vector<bool> hit(seed.rank, false);
    for (int i = 0; i < seed.rank; ++i) {
        if (out.sigma[i] < 0 || hit[out.sigma[i]])
            throw std::domain_error("folding decomposition failed: residue is not a permutation");
        hit[out.sigma[i]] = true;
    }
    return out;
}

RestrictionReport restrict_folding(const RootSet& seed, const IntMat& gmat) {
    const FoldingDecomposition d = folding_decompose(seed, gmat);
    if (static_cast<int>(d.delta1.size()) == seed.rank)
        throw std::domain_error("restriction to origin");

    std::vector<bool> drop(seed.rank, false);
    for (int i : d.delta1) drop[i] = true;
    std::vector<int> keep;
    for (int i = 0; i < seed.rank; ++i)
        if (!drop[i]) keep.push_back(i);
    // sigma induced on positions of `keep`
    std::vector<int> pos(seed.rank, -1);
    for (std::size_t t = 0; t < keep.size(); ++t) pos[keep[t]] = static_cast<int>(t);
    std::vector<int> sub_sigma(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) sub_sigma[t] = pos[d.sigma[keep[t]]];
    const std::vector<std::vector<int>> orbits = orbits_of(sub_sigma);

    std::vector<std::pair<IntVec, IntVec>> images;
    images.reserve(d.chamber.positive.size());
    for (const IntVec& v : d.chamber.positive) {
        IntVec img(orbits.size(), 0);
        for (std::size_t o = 0; o < orbits.size(); ++o)
            for (int t : orbits[o]) img[o] += v[keep[t]];
        images.push_back({v, std::move(img)});
    }
    return bucket(images, static_cast<int>(orbits.size()));
}

std::optional<IntMat> parabolic_equals_folding(const RootSet& r, const std::vector<int>& J) {
    validate_root_set(r);
    check_index_list(r.rank, J);
    if (J.empty()) return std::nullopt;

    // Walk to the far side of the J-parabolic: repeatedly reflect at an
    // index of J whose simple root currently sits on an unflipped root of
    // the parabolic.  After |parabolic| steps every root of the parabolic
    // has been flipped exactly once and `a` is the matrix of the longest
    // word (its columns are the final chamber's simple roots in seed
    // coordinates).
    RootSet current = r;
    std::sort(current.positive.begin(), current.positive.end());
    std::set<IntVec> parabolic;
    std::vector<bool> in_J(r.rank, false);
    for (int j : J) in_J[j] = true;
    for (const IntVec& v : current.positive) {
        bool inside = true;
        for (int i = 0; i < r.rank; ++i)
            if (!in_J[i] && v[i] != 0) inside = false;
        if (inside) parabolic.insert(v);
    }

    IntMat a = IntMat::identity(r.rank);
    std::set<IntVec> flipped;
    while (flipped.size() < parabolic.size()) {
        int pick = -1;
        for (int i : J) {
            IntVec u(r.rank);
            for (int row = 0; row < r.rank; ++row) u[row] = a.rows[row][i];
            if (parabolic.count(u) && !flipped.count(u)) {
                flipped.insert(u);
                pick = i;
                break;
            }
        }
        if (pick < 0) return std::nullopt;  // walk stuck; no candidate
        const IntMat s = reflection_matrix(cartan_from_roots(current), pick);
        a = a * s;
        current = reflect_object(current, pick);
    }

    // Candidate involution: the longest word composed with the simple-root
    // correction that makes it act as -1 exactly on the parabolic block.
    IntMat f = IntMat::identity(r.rank);
    for (int j : J)
        for (int row = 0; row < r.rank; ++row) f.rows[row][j] = -a.rows[row][j];
    IntMat candidate = a * f;

    if (candidate * candidate != IntMat::identity(r.rank)) return std::nullopt;
    if (!validate_automorphism(r, candidate)) return std::nullopt;

    if (static_cast<int>(J.size()) == r.rank) return candidate;  // nothing left to compare

    try {
        const RestrictionReport fold = restrict_folding(r, candidate);
        const RestrictionReport para = restrict_parabolic(r, J);
        if (fold.multiset != para.multiset) return std::nullopt;
        if (fold.localized.size() != para.localized.size()) return std::nullopt;
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    return candidate;
}

AutomorphismFactorization factor_automorphism(const CartanGraph& g, const IntMat& gmat,
                                              int object) {
    if (object < 0 || object >= static_cast<int>(g.objects.size()))
        throw std::domain_error("factor_automorphism: object id out of range");
    if (auto w = automorphism_witness(g.objects[object].roots, gmat))
        throw std::domain_error("not an automorphism of the root set: witness " + to_string(*w));

    // Express g in seed coordinates and match the image of the simple basis
    // of `object` against each chamber's simple basis (as a set of columns).
    const IntMat g_seed = g.objects[object].frame_inv * gmat * g.objects[object].frame;
    const IntMat image = g_seed * g.objects[object].frame_inv;
    auto columns_sorted = [](const IntMat& m) {
        std::vector<IntVec> cols(m.size(), IntVec(m.size()));
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) cols[j][i] = m.rows[i][j];
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    const std::vector<IntVec> target = columns_sorted(image);
    int dest = -1;
    for (int c = 0; c < static_cast<int>(g.objects.size()); ++c)
        if (columns_sorted(g.objects[c].frame_inv) == target) {
            dest = c;
            break;
        }
    if (dest < 0)
        throw std::domain_error("not an automorphism of the root set: no chamber matches");

    const WeylPath path = weyl_path(g, object, dest);
    AutomorphismFactorization out;
    out.word = path.word;
    out.f = inverse_unimodular(path.matrix) * gmat;
    if (!is_permutation_matrix(out.f))
        throw std::domain_error(
            "not an automorphism of the root set: residue is not a simple-root permutation");
    return out;
}

}  // namespace rootarr
