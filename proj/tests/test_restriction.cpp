#include <doctest.h>

#include "rootarr/catalog.hpp"
#include "rootarr/groupoid.hpp"
#include "rootarr/restriction.hpp"

#include <algorithm>
#include <vector>

using namespace rootarr;

namespace {

RootSet a3() {
    return make_root_set(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
}

// The rank-3 arrangement whose Cartan matrix is a triangle (all bonds).
RootSet cycle7() {
    return make_root_set(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

IntMat perm_matrix(const std::vector<int>& sigma) {
    IntMat p;
    p.rows.assign(sigma.size(), IntVec(sigma.size(), 0));
    for (std::size_t i = 0; i < sigma.size(); ++i) p.rows[sigma[i]][i] = 1;
    return p;
}

IntMat neg_identity(int n) {
    IntMat m = IntMat::identity(n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = -1;
    return m;
}

// Chain reversal of the six-root chain arrangement: -1 on the middle simple
// root, the outer two swapped modulo the middle one.  Flips exactly one
// positive root, so the seed chamber is already minimizing.
IntMat chain_reversal() { return IntMat{{{0, 0, 1}, {1, -1, 1}, {1, 0, 0}}}; }

}  // namespace

TEST_SUITE("restriction") {

TEST_CASE("deleting one end of a chain with a doubled bond") {
    RootSet r = classical('B', 3);
    RestrictionReport rep = restrict_parabolic(r, {0});

    CHECK(rep.multiset.rank == 2);
    std::vector<RootMultisetEntry> expected{{{0, 1}, 1, 1},
                                            {{1, 0}, 1, 2},
                                            {{1, 1}, 1, 2},
                                            {{1, 1}, 2, 1},
                                            {{1, 2}, 1, 2}};
    CHECK(rep.multiset.entries == expected);
    CHECK(rep.localized == std::vector<IntVec>{{1, 0, 0}});
    CHECK(rep.multiset.total() == 8);
    // Every deleted root is accounted for: kept rays plus localized roots.
    CHECK(rep.multiset.total() + static_cast<long long>(rep.localized.size()) ==
          static_cast<long long>(r.positive.size()));
    CHECK(rep.multiset.reduced_roots() ==
          std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});

    // Fibers name the original roots behind each ray, sorted.
    REQUIRE(rep.fibers.size() == 5);
    const Fiber& same_ray = rep.fibers[2];  // ((1,1), multiple 1)
    CHECK(same_ray.root == IntVec{1, 1});
    CHECK(same_ray.multiple == 1);
    CHECK(same_ray.preimages == std::vector<IntVec>{{0, 1, 1}, {1, 1, 1}});
    const Fiber& stretched = rep.fibers[3];  // ((1,1), multiple 2)
    CHECK(stretched.multiple == 2);
    CHECK(stretched.preimages == std::vector<IntVec>{{1, 2, 2}});
}

TEST_CASE("deleting the middle node of a chain") {
    RestrictionReport rep = restrict_parabolic(a3(), {1});
    std::vector<RootMultisetEntry> expected{{{0, 1}, 1, 2}, {{1, 0}, 1, 2}, {{1, 1}, 1, 1}};
    CHECK(rep.multiset.entries == expected);
    CHECK(rep.localized == std::vector<IntVec>{{0, 1, 0}});
}

TEST_CASE("empty index list restricts by the identity") {
    RootSet r = a3();
    RestrictionReport rep = restrict_parabolic(r, {});
    CHECK(rep.multiset.rank == 3);
    CHECK(rep.localized.empty());
    CHECK(rep.multiset.total() == static_cast<long long>(r.positive.size()));
    for (const RootMultisetEntry& e : rep.multiset.entries) {
        CHECK(e.multiple == 1);
        CHECK(e.multiplicity == 1);
        CHECK(contains_root(r, e.root));
    }
}

TEST_CASE("restriction to the origin is rejected") {
    CHECK_THROWS_WITH_AS(restrict_parabolic(a3(), {0, 1, 2}), "restriction to origin",
                         std::domain_error);
    RootMultiset m = restrict_parabolic(a3(), {1}).multiset;
    CHECK_THROWS_WITH_AS(restrict_parabolic(m, {0, 1}), "restriction to origin",
                         std::domain_error);
}

TEST_CASE("index lists are validated") {
    CHECK_THROWS_WITH_AS(restrict_parabolic(a3(), {3}), "index out of range: 4",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(restrict_parabolic(a3(), {0, 0}),
                         "index list must be strictly increasing", std::domain_error);
    CHECK_THROWS_WITH_AS(restrict_parabolic(a3(), {1, 0}),
                         "index list must be strictly increasing", std::domain_error);
}

TEST_CASE("orbit sums across a swapped pair of lines") {
    RootSet r = make_root_set(2, {{1, 0}, {0, 1}});
    RestrictionReport rep = restrict_permutation(r, {1, 0});
    CHECK(rep.multiset.rank == 1);
    CHECK(rep.multiset.entries == std::vector<RootMultisetEntry>{{{1}, 1, 2}});
    CHECK(rep.localized.empty());
}

TEST_CASE("orbit sums across two swapped triangles") {
    RootSet r = make_root_set(4, {{1, 0, 0, 0},
                                  {0, 1, 0, 0},
                                  {0, 0, 1, 0},
                                  {0, 0, 0, 1},
                                  {1, 0, 1, 0},
                                  {0, 1, 0, 1}});
    RestrictionReport rep = restrict_permutation(r, {1, 0, 3, 2});
    std::vector<RootMultisetEntry> expected{{{0, 1}, 1, 2}, {{1, 0}, 1, 2}, {{1, 1}, 1, 2}};
    CHECK(rep.multiset.entries == expected);
}

TEST_CASE("orbit sums folding a chain in half") {
    RestrictionReport rep = restrict_permutation(a3(), {2, 1, 0});
    std::vector<RootMultisetEntry> expected{
        {{0, 1}, 1, 1}, {{1, 0}, 1, 2}, {{1, 1}, 1, 2}, {{2, 1}, 1, 1}};
    CHECK(rep.multiset.entries == expected);
    CHECK(rep.localized.empty());
}

TEST_CASE("orbit sums can produce a non-reduced ray") {
    RestrictionReport rep = restrict_permutation(cycle7(), {2, 1, 0});
    std::vector<RootMultisetEntry> expected{
        {{0, 1}, 1, 1}, {{1, 0}, 1, 2}, {{1, 0}, 2, 1}, {{1, 1}, 1, 2}, {{2, 1}, 1, 1}};
    CHECK(rep.multiset.entries == expected);
    // The ray through (1,0) carries both the primitive root and its double.
    CHECK(rep.multiset.reduced_roots() ==
          std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}, {2, 1}});
}

TEST_CASE("permutation restrictions validate their input") {
    CHECK_THROWS_WITH_AS(restrict_permutation(a3(), {0, 1}), "permutation has wrong length",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(restrict_permutation(a3(), {0, 0, 1}),
                         "not a permutation of the indices", std::domain_error);
    CHECK_THROWS_WITH_AS(restrict_permutation(a3(), {0, 1, 3}),
                         "not a permutation of the indices", std::domain_error);
    // Swapping adjacent chain nodes is a relabeling but not a symmetry.
    CHECK_THROWS_WITH_AS(restrict_permutation(a3(), {1, 0, 2}),
                         "not an automorphism of the root set: witness (0,1,1)",
                         std::domain_error);
}

TEST_CASE("automorphism witnesses point at the first broken root") {
    RootSet r = a3();
    CHECK(automorphism_witness(r, perm_matrix({1, 0, 2})) == IntVec{0, 1, 1});
    CHECK_FALSE(automorphism_witness(r, perm_matrix({2, 1, 0})).has_value());
    CHECK(validate_automorphism(r, neg_identity(3)));
    CHECK(validate_automorphism(r, chain_reversal()));
    // Sign flip of one coordinate sends (0,1,1) to a mixed-sign vector.
    IntMat flip = IntMat::identity(3);
    flip.rows[2][2] = -1;
    CHECK(automorphism_witness(r, flip) == IntVec{0, 1, 1});
}

TEST_CASE("two-step deletion composes with multiplied stretch factors") {
    RootSet r = classical('B', 3);
    RestrictionReport direct = restrict_parabolic(r, {0, 1});
    CHECK(direct.multiset.entries ==
          std::vector<RootMultisetEntry>{{{1}, 1, 3}, {{1}, 2, 3}});
    CHECK(direct.localized == std::vector<IntVec>{{0, 1, 0}, {1, 0, 0}, {1, 1, 0}});

    RestrictionReport first = restrict_parabolic(r, {0});
    MultisetRestriction second = restrict_parabolic(first.multiset, {0});
    CHECK(second.multiset == direct.multiset);
    // The rays localized in step two had already been deleted down to the
    // first surviving coordinate: here the doubled ray over (1,0).
    CHECK(second.localized == std::vector<RootMultisetEntry>{{{1, 0}, 1, 2}});
}

TEST_CASE("multiset orbit sums validate and compose") {
    // Deleting the middle node leaves a symmetric pair of rays; summing the
    // halves afterwards collapses them onto one line with a doubled ray.
    RootMultiset m = restrict_parabolic(a3(), {1}).multiset;
    RootMultiset folded = restrict_permutation(m, {1, 0});
    CHECK(folded.entries == std::vector<RootMultisetEntry>{{{1}, 1, 4}, {{1}, 2, 1}});

    // An asymmetric multiset rejects the swap and names the failing ray.
    RootMultiset lopsided = restrict_parabolic(classical('B', 3), {0}).multiset;
    CHECK_THROWS_WITH_AS(restrict_permutation(lopsided, {1, 0}),
                         "not an automorphism of the root set: witness (0,1)",
                         std::domain_error);
}

TEST_CASE("involution folding splits into a deletion and a relabeling") {
    FoldingDecomposition d = folding_decompose(a3(), chain_reversal());
    CHECK(d.chamber.positive == a3().positive);
    CHECK(d.frame == IntMat::identity(3));
    CHECK(d.frame_inv == IntMat::identity(3));
    CHECK(d.delta1 == std::vector<int>{1});
    CHECK(d.sigma == std::vector<int>{2, 1, 0});

    RestrictionReport rep = restrict_folding(a3(), chain_reversal());
    CHECK(rep.multiset.rank == 1);
    CHECK(rep.multiset.entries == std::vector<RootMultisetEntry>{{{1}, 1, 4}, {{1}, 2, 1}});
    CHECK(rep.localized == std::vector<IntVec>{{0, 1, 0}});

    // Same answer as doing the two steps by hand.
    RootMultiset by_hand =
        restrict_permutation(restrict_parabolic(a3(), {1}).multiset, {1, 0});
    CHECK(rep.multiset == by_hand);
}

TEST_CASE("folding walks to the minimizing chamber first") {
    // Conjugate the chain reversal across the first wall: the seed now sees
    // three flipped roots and the walk must undo that one reflection.
    IntMat s0 = reflection_matrix(cartan_from_roots(a3()), 0);
    IntMat g = s0 * chain_reversal() * s0;
    FoldingDecomposition d = folding_decompose(a3(), g);
    CHECK(d.frame == s0);
    CHECK(d.frame_inv == s0);
    CHECK(d.chamber.positive == a3().positive);
    CHECK(d.delta1 == std::vector<int>{1});
    CHECK(d.sigma == std::vector<int>{2, 1, 0});
    // In the minimizing chamber the conjugated map is -1 on the deleted
    // block and a permutation modulo it.
    IntMat gb = d.frame * g * d.frame_inv;
    CHECK(gb == chain_reversal());

    RestrictionReport rep = restrict_folding(a3(), g);
    CHECK(rep.multiset.entries == std::vector<RootMultisetEntry>{{{1}, 1, 4}, {{1}, 2, 1}});
}

TEST_CASE("folding with the identity keeps every ray") {
    RestrictionReport rep = restrict_folding(a3(), IntMat::identity(3));
    CHECK(rep.multiset.rank == 3);
    CHECK(rep.localized.empty());
    CHECK(rep.multiset.total() == 6);
    FoldingDecomposition d = folding_decompose(a3(), IntMat::identity(3));
    CHECK(d.delta1.empty());
    CHECK(d.sigma == std::vector<int>{0, 1, 2});
}

TEST_CASE("folding by minus the identity localizes everything") {
    FoldingDecomposition d = folding_decompose(a3(), neg_identity(3));
    CHECK(d.delta1 == std::vector<int>{0, 1, 2});
    CHECK_THROWS_WITH_AS(restrict_folding(a3(), neg_identity(3)), "restriction to origin",
                         std::domain_error);
}

TEST_CASE("folding rejects non-involutions and non-automorphisms") {
    IntMat c = cartan_from_roots(a3());
    IntMat rot = reflection_matrix(c, 0) * reflection_matrix(c, 1);  // order three
    CHECK_THROWS_WITH_AS(folding_decompose(a3(), rot), "folding lemma requires involution",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(folding_decompose(a3(), perm_matrix({1, 0, 2})),
                         "not an automorphism of the root set: witness (0,1,1)",
                         std::domain_error);
}

TEST_CASE("folding of a pure permutation matches the orbit-sum restriction") {
    RestrictionReport fold = restrict_folding(cycle7(), perm_matrix({2, 1, 0}));
    RestrictionReport perm = restrict_permutation(cycle7(), {2, 1, 0});
    CHECK(fold.multiset == perm.multiset);
    CHECK(fold.localized == perm.localized);
    REQUIRE(fold.fibers.size() == perm.fibers.size());
    for (std::size_t k = 0; k < fold.fibers.size(); ++k) {
        CHECK(fold.fibers[k].root == perm.fibers[k].root);
        CHECK(fold.fibers[k].multiple == perm.fibers[k].multiple);
        CHECK(fold.fibers[k].preimages == perm.fibers[k].preimages);
    }
}

TEST_CASE("deletions that arise as foldings are recognized") {
    // Deleting the middle chain node is a folding: the involution is the
    // reflection there, and both restrictions coincide.
    auto g = parabolic_equals_folding(a3(), {1});
    REQUIRE(g.has_value());
    CHECK(*g * *g == IntMat::identity(3));
    CHECK(validate_automorphism(a3(), *g));
    CHECK(restrict_folding(a3(), *g).multiset == restrict_parabolic(a3(), {1}).multiset);

    // Deleting the two-node block fails: acting as -1 on a bonded pair
    // while fixing the rest is not a symmetry of the chain.
    CHECK_FALSE(parabolic_equals_folding(a3(), {0, 1}).has_value());

    // Deleting everything leaves only the involution test, satisfied by the
    // global point reflection.
    auto all = parabolic_equals_folding(a3(), {0, 1, 2});
    REQUIRE(all.has_value());
    CHECK(*all == neg_identity(3));
    auto line = parabolic_equals_folding(classical('A', 1), {0});
    REQUIRE(line.has_value());
    CHECK(*line == neg_identity(1));

    CHECK_FALSE(parabolic_equals_folding(a3(), {}).has_value());
}

TEST_CASE("automorphisms factor into a reflection word and a relabeling") {
    CartanGraph g = enumerate_groupoid(classical('A', 2));
    REQUIRE(g.objects.size() == 6);

    // The diagram flip fixes the chamber: empty word, pure relabeling.
    IntMat flip = perm_matrix({1, 0});
    AutomorphismFactorization f1 = factor_automorphism(g, flip, 0);
    CHECK(f1.word.empty());
    CHECK(f1.f == flip);

    // A simple reflection crosses one wall and needs no relabeling.
    IntMat s0 = reflection_matrix(g.objects[0].cartan, 0);
    AutomorphismFactorization f2 = factor_automorphism(g, s0, 0);
    CHECK(f2.word == std::vector<int>{0});
    CHECK(f2.f == IntMat::identity(2));

    // Mixed case: recompose the word's reflection matrices (in word order,
    // following the edges) and check word times relabeling reproduces g.
    IntMat gmat = s0 * flip;
    AutomorphismFactorization f3 = factor_automorphism(g, gmat, 0);
    CHECK(is_permutation_matrix(f3.f));
    IntMat m = IntMat::identity(2);
    int at = 0;
    for (int i : f3.word) {
        m = m * reflection_matrix(g.objects[at].cartan, i);
        at = g.edges[at][i];
    }
    CHECK(m * f3.f == gmat);

    CHECK_THROWS_WITH_AS(factor_automorphism(g, gmat, 17),
                         "factor_automorphism: object id out of range", std::domain_error);
    IntMat skew = IntMat::identity(2);
    skew.rows[0][1] = 1;
    CHECK_THROWS_WITH_AS(factor_automorphism(g, skew, 0),
                         "not an automorphism of the root set: witness (1,1)",
                         std::domain_error);
}

TEST_CASE("every deleted root is accounted for across systems and choices") {
    const std::vector<RootSet> systems{a3(), cycle7(), classical('B', 3),
                                       classical('D', 4)};
    for (const RootSet& r : systems) {
        for (int a = 0; a < r.rank; ++a) {
            for (int b = a; b < r.rank; ++b) {
                std::vector<int> J{a};
                if (b > a) J.push_back(b);
                if (static_cast<int>(J.size()) == r.rank) continue;
                RestrictionReport rep = restrict_parabolic(r, J);
                CHECK(rep.multiset.total() + static_cast<long long>(rep.localized.size()) ==
                      static_cast<long long>(r.positive.size()));
                long long fiber_total = 0;
                for (const Fiber& f : rep.fibers)
                    fiber_total += static_cast<long long>(f.preimages.size());
                CHECK(fiber_total == rep.multiset.total());
            }
        }
    }
}

}  // TEST_SUITE
