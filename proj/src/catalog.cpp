#include "rootarr/catalog.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

namespace rootarr {

namespace {

[[noreturn]] void bad_rank(char type, int rank) {
    throw std::domain_error("invalid rank " + std::to_string(rank) + " for type " +
                            std::string(1, type));
}

}  // namespace

IntMat classical_cartan(char type, int rank) {
    auto chain = [](IntMat& c, const std::vector<int>& nodes) {
        for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
            c.rows[nodes[k]][nodes[k + 1]] = -1;
            c.rows[nodes[k + 1]][nodes[k]] = -1;
        }
    };
    IntMat c = IntMat::identity(rank);
    for (int i = 0; i < rank; ++i) c.rows[i][i] = 2;
    std::vector<int> all(rank);
    std::iota(all.begin(), all.end(), 0);

    switch (type) {
        case 'A':
            if (rank < 1) bad_rank(type, rank);
            chain(c, all);
            break;
        case 'B':  // last node short: alpha_{r-1} long, alpha_r short
            if (rank < 2) bad_rank(type, rank);
            chain(c, all);
            c.rows[rank - 2][rank - 1] = -1;
            c.rows[rank - 1][rank - 2] = -2;
            break;
        case 'C':  // last node long
            if (rank < 2) bad_rank(type, rank);
            chain(c, all);
            c.rows[rank - 2][rank - 1] = -2;
            c.rows[rank - 1][rank - 2] = -1;
            break;
        case 'D':
            if (rank < 3) bad_rank(type, rank);
            all.pop_back();
            chain(c, all);
            c.rows[rank - 3][rank - 1] = -1;
            c.rows[rank - 1][rank - 3] = -1;
            break;
        case 'E': {
            if (rank < 6 || rank > 8) bad_rank(type, rank);
            // Bourbaki: alpha_2 hangs off alpha_4 of the chain
            // alpha_1 - alpha_3 - alpha_4 - ... - alpha_rank.
            std::vector<int> nodes{0};
            for (int i = 2; i < rank; ++i) nodes.push_back(i);
            chain(c, nodes);
            c.rows[1][3] = -1;
            c.rows[3][1] = -1;
            break;
        }
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            if (rank != 4) bad_rank(type, rank);
            chain(c, all);
            c.rows[1][2] = -1;
            c.rows[2][1] = -2;
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            if (rank != 2) bad_rank(type, rank);
            c.rows[0][1] = -3;
            c.rows[1][0] = -1;
            break;
        default:
            throw std::domain_error("unknown type " + std::string(1, type));
    }
    return c;
}

RootSet classical(char type, int rank) {
    const IntMat c = classical_cartan(type, rank);
    // Close the simple roots under all reflections; Lie-type systems carry a
    // single Cartan matrix, so the reflections never leave the lattice.
    std::set<IntVec> all;
    std::deque<IntVec> queue;
    for (int i = 0; i < rank; ++i) {
        IntVec unit(rank, 0);
        unit[i] = 1;
        all.insert(unit);
        queue.push_back(unit);
    }
    while (!queue.empty()) {
        IntVec v = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            Coord pairing = 0;
            for (int j = 0; j < rank; ++j) pairing += c.rows[i][j] * v[j];
            IntVec w = v;
            w[i] -= pairing;
            bool nonpos = true;
            for (Coord x : w) nonpos = nonpos && x <= 0;
            if (nonpos)
                for (Coord& x : w) x = -x;
            if (all.insert(w).second) queue.push_back(w);
        }
    }
    RootSet r;
    r.rank = rank;
    r.positive.assign(all.begin(), all.end());
    validate_root_set(r);
    return r;
}

RootSet classical(const std::string& name) {
    if (name.size() < 2) throw std::domain_error("unknown type " + name);
    const char type = name[0];
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) throw std::invalid_argument(name);
    } catch (const std::exception&) {
        throw std::domain_error("unknown type " + name);
    }
    return classical(type, rank);
}

IntVec cartan_symmetrizer(const IntMat& cartan) {
    const int n = cartan.size();
    // Solve d_i c_ij = d_j c_ji over the positive rationals by spreading
    // along the bonds, then clear denominators per connected component.
    std::vector<Fraction> d(n, Fraction(0));
    for (int start = 0; start < n; ++start) {
        if (!d[start].is_zero()) continue;
        d[start] = Fraction(1);
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan.rows[i][j] == 0) continue;
                const Fraction dj =
                    d[i] * Fraction(ZZ(cartan.rows[i][j]), ZZ(cartan.rows[j][i]));
                if (d[j].is_zero()) {
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw std::domain_error("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    ZZ lcm_den = 1;
    for (const Fraction& f : d) lcm_den = boost::multiprecision::lcm(lcm_den, f.den());
    IntVec out(n);
    ZZ g = 0;
    for (int i = 0; i < n; ++i) {
        ZZ x = d[i].num() * (lcm_den / d[i].den());
        g = boost::multiprecision::gcd(g, x);
        out[i] = x.convert_to<Coord>();
    }
    for (Coord& x : out) x /= g.convert_to<Coord>();
    return out;
}

BraidingMatrix braiding_cycle_rank3() {
    BraidingMatrix b;
    b.rank = 3;
    b.q.assign(3, std::vector<UnityRoot>(3));
    for (int i = 0; i < 3; ++i) b.q[i][i] = UnityRoot::from_exponent(1, 2);
    // q_ij q_ji = zeta_3, realized as q_ij = zeta_3, q_ji = 1 for i < j.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            b.q[i][j] = UnityRoot::from_exponent(1, 3);
            b.q[j][i] = UnityRoot();
        }
    return b;
}

BraidingMatrix braiding_b2_generic(long long ell) {
    if (ell < 5) throw std::domain_error("b2_generic needs ell >= 5");
    BraidingMatrix b;
    b.rank = 2;
    b.q.assign(2, std::vector<UnityRoot>(2));
    b.q[0][0] = UnityRoot::from_exponent(2, ell);
    b.q[0][1] = UnityRoot::from_exponent(-2, ell);
    b.q[1][0] = UnityRoot::from_exponent(-2, ell);
    b.q[1][1] = UnityRoot::from_exponent(4, ell);
    return b;
}

BraidingMatrix braiding_a2_minus_one() {
    BraidingMatrix b;
    b.rank = 2;
    b.q.assign(2, std::vector<UnityRoot>(2));
    b.q[0][0] = UnityRoot::from_exponent(1, 2);
    b.q[0][1] = UnityRoot::from_exponent(1, 2);
    b.q[1][0] = UnityRoot();
    b.q[1][1] = UnityRoot::from_exponent(1, 2);
    return b;
}

BraidingMatrix braiding_uq_plus(char type, int rank, long long ell) {
    if (ell < 2) throw std::domain_error("uq_plus needs ell >= 2");
    const IntMat c = classical_cartan(type, rank);
    const IntVec d = cartan_symmetrizer(c);
    BraidingMatrix b;
    b.rank = rank;
    b.q.assign(rank, std::vector<UnityRoot>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            b.q[i][j] = UnityRoot::from_exponent(d[i] * c.rows[i][j], ell);
    return b;
}

BraidingMatrix named_braiding(const std::string& name) {
    if (name == "cycle_rank3") return braiding_cycle_rank3();
    if (name == "a2_minus_one") return braiding_a2_minus_one();
    auto args_of = [&](const std::string& prefix) -> std::optional<std::vector<std::string>> {
        if (name.size() < prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
            name[prefix.size()] != '(' || name.back() != ')')
            return std::nullopt;
        std::vector<std::string> args{""};
        for (std::size_t i = prefix.size() + 1; i + 1 < name.size(); ++i) {
            if (name[i] == ',')
                args.push_back("");
            else if (name[i] != ' ')
                args.back() += name[i];
        }
        return args;
    };
    try {
        if (auto args = args_of("b2_generic"); args && args->size() == 1)
            return braiding_b2_generic(std::stoll((*args)[0]));
        if (auto args = args_of("uq_plus"); args && args->size() == 3 && (*args)[0].size() == 1)
            return braiding_uq_plus((*args)[0][0], std::stoi((*args)[1]),
                                    std::stoll((*args)[2]));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw std::domain_error("unknown braiding name: " + name);
}

SurveyResult survey_restrictions(const RootSet& seed, int target_rank, SurveyScope scope,
                                 std::size_t max_objects) {
    validate_root_set(seed);
    if (target_rank < 1 || target_rank >= seed.rank)
        throw std::domain_error("target rank must be between 1 and rank-1");

    SurveyResult result;
    result.target_rank = target_rank;

    CartanGraph g;
    const bool seed_only =
        scope == SurveyScope::seed_only || (scope == SurveyScope::automatic && seed.rank >= 6);
    if (seed_only) {
        RootSet start = seed;
        std::sort(start.positive.begin(), start.positive.end());
        g.rank = seed.rank;
        g.objects.push_back(
            {start, cartan_from_roots(start), IntMat::identity(seed.rank),
             IntMat::identity(seed.rank)});
        g.edges.emplace_back(seed.rank, -1);
    } else {
        bool complete = true;
        g = enumerate_groupoid_partial(seed, max_objects, complete);
        result.partial = !complete;
    }

    // All (rank - target_rank)-subsets in lexicographic order.
    const int pick = seed.rank - target_rank;
    std::vector<int> J(pick);
    for (int obj = 0; obj < static_cast<int>(g.objects.size()); ++obj) {
        std::iota(J.begin(), J.end(), 0);
        for (;;) {
            const RestrictionReport report = restrict_parabolic(g.objects[obj].roots, J);
            RootSet reduced{target_rank, report.multiset.reduced_roots()};
            const std::string key = canonical_form(reduced);
            auto [it, fresh] = result.classes.try_emplace(key);
            SurveyClass& cl = it->second;
            if (fresh) {
                cl.multiset = report.multiset;
                cl.reduced = std::move(reduced);
                cl.witness_object = obj;
                cl.witness_J = J;
            }
            ++cl.hits;

            int t = pick - 1;
            while (t >= 0 && J[t] == seed.rank - pick + t) --t;
            if (t < 0) break;
            ++J[t];
            for (int u = t + 1; u < pick; ++u) J[u] = J[u - 1] + 1;
        }
    }
    return result;
}

}  // namespace rootarr
