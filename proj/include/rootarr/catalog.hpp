/// @file catalog.hpp
/// @brief Classical root systems, the worked-example braidings, and
///        desk-scale restriction surveys keyed by canonical fingerprints.

#pragma once

#include "rootarr/nichols.hpp"
#include "rootarr/restriction.hpp"
#include "rootarr/rootset.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace rootarr {

/// Positive roots of the classical systems in simple-root coordinates,
/// Bourbaki node numbering.  Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3,
/// E in {6,7,8}, F = 4, G = 2.  Throws std::domain_error("invalid rank ...").
RootSet classical(char type, int rank);

/// "A3", "E7", "G2", ... parsed form of the above.
RootSet classical(const std::string& name);

/// Cartan matrix of a classical type (same validity rules).
IntMat classical_cartan(char type, int rank);

/// Diagonal d_i with d_i * c_ij symmetric (minimal positive integers).
IntVec cartan_symmetrizer(const IntMat& cartan);

/// The worked-example braidings.
BraidingMatrix braiding_cycle_rank3();                 // q_ii = -1, q_ij q_ji = zeta_3
BraidingMatrix braiding_b2_generic(long long ell);     // q_11 = q^2, q_22 = q^4, q_12 q_21 = q^-4
BraidingMatrix braiding_a2_minus_one();                // [[-1,-1],[1,-1]]
/// q_ij = q^(alpha_i, alpha_j) with the form normalized to (alpha,alpha)=2
/// for short roots and q a primitive ell-th root of unity.  Intended for ell
/// coprime to the entries of the symmetrized Cartan matrix (e.g. any prime
/// >= 5 for types A-F, >= 5 and not 3 for G2).
BraidingMatrix braiding_uq_plus(char type, int rank, long long ell);

/// String entry point used by the CLI: "cycle_rank3", "a2_minus_one",
/// "b2_generic(5)", "uq_plus(B,3,7)".  Throws std::domain_error("unknown
/// braiding name: ...").
BraidingMatrix named_braiding(const std::string& name);

enum class SurveyScope {
    automatic,  ///< full orbit for rank <= 5, standard chamber only above
    seed_only,  ///< restrict only at the seed chamber
    full_orbit  ///< enumerate all chambers (subject to the object cap)
};

struct SurveyClass {
    RootMultiset multiset;   // from the first witness
    RootSet reduced;         // the fingerprinted reduced root set
    long long hits = 0;      // number of (object, J) pairs with this fingerprint
    int witness_object = 0;
    std::vector<int> witness_J;
};

struct SurveyResult {
    int target_rank = 0;
    bool partial = false;  // object cap hit before the orbit closed
    std::map<std::string, SurveyClass> classes;
};

/// Restrict at every (rank - target_rank)-subset of simple indices over all
/// surveyed objects and group the outcomes by canonical_form of the reduced
/// root set.  Requires 1 <= target_rank < rank.
SurveyResult survey_restrictions(const RootSet& seed, int target_rank,
                                 SurveyScope scope = SurveyScope::automatic,
                                 std::size_t max_objects = 100000);

}  // namespace rootarr
