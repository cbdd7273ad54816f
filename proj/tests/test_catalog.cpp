#include <doctest.h>

#include "rootarr/catalog.hpp"

#include <numeric>
#include <string>
#include <vector>

using namespace rootarr;

namespace {

// The rank-3 arrangement whose Cartan matrix is a triangle (all bonds).
RootSet cycle7() {
    return make_root_set(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

UnityRoot e(long long num, long long den) { return UnityRoot::from_exponent(num, den); }

long long hits_total(const SurveyResult& s) {
    long long t = 0;
    for (const auto& [key, cl] : s.classes) t += cl.hits;
    return t;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("classical systems have the textbook root counts") {
    for (int n = 1; n <= 8; ++n)
        CHECK(classical('A', n).positive.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    for (int n = 2; n <= 8; ++n) {
        CHECK(classical('B', n).positive.size() == static_cast<std::size_t>(n * n));
        CHECK(classical('C', n).positive.size() == static_cast<std::size_t>(n * n));
    }
    for (int n = 3; n <= 8; ++n)
        CHECK(classical('D', n).positive.size() == static_cast<std::size_t>(n * (n - 1)));
    CHECK(classical('E', 6).positive.size() == 36);
    CHECK(classical('E', 7).positive.size() == 63);
    CHECK(classical('E', 8).positive.size() == 120);
    CHECK(classical('F', 4).positive.size() == 24);
    CHECK(classical('G', 2).positive.size() == 6);

    // The roots reproduce the Cartan matrix they were built from.
    for (std::string name : {"A4", "B3", "C3", "D4", "F4", "G2", "E6"}) {
        RootSet r = classical(name);
        CHECK(is_valid_root_set(r));
        CHECK(cartan_from_roots(r) == classical_cartan(name[0], name[1] - '0'));
    }
}

TEST_CASE("type names parse or fail loudly") {
    CHECK(classical("B3").positive == classical('B', 3).positive);
    CHECK_THROWS_WITH_AS(classical("A"), "unknown type A", std::domain_error);
    CHECK_THROWS_WITH_AS(classical("Ax"), "unknown type Ax", std::domain_error);
    CHECK_THROWS_WITH_AS(classical("A3x"), "unknown type A3x", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('X', 3), "unknown type X", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('A', 0), "invalid rank 0 for type A", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('B', 1), "invalid rank 1 for type B", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('D', 2), "invalid rank 2 for type D", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('E', 5), "invalid rank 5 for type E", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('F', 3), "invalid rank 3 for type F", std::domain_error);
    CHECK_THROWS_WITH_AS(classical('G', 4), "invalid rank 4 for type G", std::domain_error);
}

TEST_CASE("symmetrizers balance the off-diagonal entries") {
    CHECK(cartan_symmetrizer(classical_cartan('A', 3)) == IntVec{1, 1, 1});
    CHECK(cartan_symmetrizer(classical_cartan('B', 3)) == IntVec{2, 2, 1});
    CHECK(cartan_symmetrizer(classical_cartan('C', 3)) == IntVec{1, 1, 2});
    CHECK(cartan_symmetrizer(classical_cartan('D', 4)) == IntVec{1, 1, 1, 1});
    CHECK(cartan_symmetrizer(classical_cartan('F', 4)) == IntVec{2, 2, 1, 1});
    CHECK(cartan_symmetrizer(classical_cartan('G', 2)) == IntVec{1, 3});

    // Components scale independently; the global gcd is cleared.
    IntMat mixed{{{2, 0, 0}, {0, 2, -3}, {0, -1, 2}}};
    CHECK(cartan_symmetrizer(mixed) == IntVec{1, 1, 3});

    IntMat lopsided{{{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}};
    CHECK_THROWS_WITH_AS(cartan_symmetrizer(lopsided), "Cartan matrix is not symmetrizable",
                         std::domain_error);
}

TEST_CASE("the worked-example braidings have the advertised entries") {
    BraidingMatrix cyc = braiding_cycle_rank3();
    for (int i = 0; i < 3; ++i) {
        CHECK(cyc.q[i][i] == e(1, 2));
        for (int j = i + 1; j < 3; ++j) CHECK(cyc.q[i][j] * cyc.q[j][i] == e(1, 3));
    }

    BraidingMatrix b2 = braiding_b2_generic(5);
    CHECK(b2.q[0][0] == e(2, 5));
    CHECK(b2.q[1][1] == e(4, 5));
    CHECK(b2.q[0][1] * b2.q[1][0] == e(-4, 5));
    CHECK_THROWS_WITH_AS(braiding_b2_generic(4), "b2_generic needs ell >= 5",
                         std::domain_error);

    BraidingMatrix a2 = braiding_a2_minus_one();
    CHECK(a2.q[0][0] == e(1, 2));
    CHECK(a2.q[0][1] == e(1, 2));
    CHECK(a2.q[1][0].is_one());
    CHECK(a2.q[1][1] == e(1, 2));

    // q_ij = q^(d_i c_ij): the squared short root gives e(2/ell) and the
    // doubled bond entries multiply to e(-4/ell).
    BraidingMatrix uq = braiding_uq_plus('B', 2, 5);
    CHECK(uq.q[0][0] == e(4, 5));
    CHECK(uq.q[1][1] == e(2, 5));
    CHECK(uq.q[0][1] == e(3, 5));
    CHECK(uq.q[1][0] == e(3, 5));
    CHECK_THROWS_WITH_AS(braiding_uq_plus('A', 2, 1), "uq_plus needs ell >= 2",
                         std::domain_error);
}

TEST_CASE("braiding names parse or fail loudly") {
    CHECK(named_braiding("cycle_rank3") == braiding_cycle_rank3());
    CHECK(named_braiding("a2_minus_one") == braiding_a2_minus_one());
    CHECK(named_braiding("b2_generic(7)") == braiding_b2_generic(7));
    CHECK(named_braiding("b2_generic( 7 )") == braiding_b2_generic(7));
    CHECK(named_braiding("uq_plus(B,3,7)") == braiding_uq_plus('B', 3, 7));
    CHECK(named_braiding("uq_plus(G, 2, 5)") == braiding_uq_plus('G', 2, 5));

    for (std::string bad : {"nope", "b2_generic", "b2_generic()", "b2_generic(x)",
                            "uq_plus(B,3)", "uq_plus(BB,3,7)"})
        CHECK_THROWS_WITH_AS(named_braiding(bad), ("unknown braiding name: " + bad).c_str(),
                             std::domain_error);
}

TEST_CASE("surveys group restrictions by the reduced fingerprint") {
    // Every single-node deletion of the plain chain leaves the same three
    // rays (the long root survives as the sum of the outer coordinates), so
    // all 24 chambers and all three choices land in one class.
    SurveyResult s = survey_restrictions(classical('A', 3), 2);
    CHECK_FALSE(s.partial);
    REQUIRE(s.classes.size() == 1);
    REQUIRE(s.classes.count("0,1;1,0;1,1") == 1);
    CHECK(hits_total(s) == 72);

    const SurveyClass& cl = s.classes.at("0,1;1,0;1,1");
    CHECK(cl.witness_J.size() == 1);
    RestrictionReport at_witness = restrict_parabolic(
        enumerate_groupoid(classical('A', 3)).objects[cl.witness_object].roots,
        cl.witness_J);
    CHECK(at_witness.multiset == cl.multiset);

    // All three deletions of the doubled-bond chain look alike too.
    SurveyResult b3 = survey_restrictions(classical('B', 3), 2);
    REQUIRE(b3.classes.size() == 1);
    CHECK(b3.classes.count("0,1;1,0;1,1;1,2") == 1);
    CHECK(hits_total(b3) == 144);

    // The triangle-bond arrangement genuinely splits: chambers with seven
    // roots restrict to a triangle, those with eight mostly to the
    // doubled-bond shape.
    SurveyResult cyc = survey_restrictions(cycle7(), 2);
    REQUIRE(cyc.classes.size() == 2);
    REQUIRE(cyc.classes.count("0,1;1,0;1,1") == 1);
    REQUIRE(cyc.classes.count("0,1;1,0;1,1;1,2") == 1);
    CHECK(cyc.classes.at("0,1;1,0;1,1").hits == 48);
    CHECK(cyc.classes.at("0,1;1,0;1,1;1,2").hits == 48);
}

TEST_CASE("survey scopes trade coverage for speed") {
    SurveyResult seed = survey_restrictions(classical('A', 3), 2, SurveyScope::seed_only);
    CHECK(hits_total(seed) == 3);  // one object, three single-index deletions
    CHECK(seed.classes.size() == 1);

    SurveyResult full = survey_restrictions(classical('A', 3), 2, SurveyScope::full_orbit);
    CHECK(hits_total(full) == 72);

    // Automatic scope stays at the seed for larger ranks.
    SurveyResult d6 = survey_restrictions(classical('D', 6), 2, SurveyScope::automatic);
    CHECK_FALSE(d6.partial);
    CHECK(hits_total(d6) == 15);  // C(6,4) subsets at one object

    // A capped orbit is reported as partial.
    SurveyResult capped =
        survey_restrictions(cycle7(), 1, SurveyScope::full_orbit, 3);
    CHECK(capped.partial);
    CHECK(hits_total(capped) == 9);  // three objects times C(3,2)

    CHECK_THROWS_WITH_AS(survey_restrictions(classical('A', 3), 0),
                         "target rank must be between 1 and rank-1", std::domain_error);
    CHECK_THROWS_WITH_AS(survey_restrictions(classical('A', 3), 3),
                         "target rank must be between 1 and rank-1", std::domain_error);
}

TEST_CASE("a deep survey still covers every subset once") {
    SurveyResult s = survey_restrictions(classical('E', 7), 3);  // seed-only automatically
    CHECK_FALSE(s.partial);
    CHECK(hits_total(s) == 35);  // C(7,4)
    // The four-index deletion hitting the sporadic 13-root shape is present.
    RestrictionReport rep = restrict_parabolic(classical('E', 7), {0, 1, 5, 6});
    RootSet reduced{3, rep.multiset.reduced_roots()};
    CHECK(s.classes.count(canonical_form(reduced)) == 1);
}

}  // TEST_SUITE
