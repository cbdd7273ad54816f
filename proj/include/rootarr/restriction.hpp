/// @file restriction.hpp
/// @brief Restriction of root sets to smaller rank: deleting coordinates
///        (parabolic localization), summing coordinates along an
///        automorphism's orbits, and the two-step folding restriction, with
///        multiplicity bookkeeping throughout.

#pragma once

#include "rootarr/groupoid.hpp"
#include "rootarr/rootset.hpp"

#include <optional>
#include <vector>

namespace rootarr {

/// One ray of a restricted system: `root` is primitive, the actual image
/// vector is `multiple * root`, and `multiplicity` counts how many roots of
/// the original system land there.
struct RootMultisetEntry {
    IntVec root;
    Coord multiple = 1;
    long long multiplicity = 0;

    friend bool operator==(const RootMultisetEntry& a, const RootMultisetEntry& b) {
        return a.root == b.root && a.multiple == b.multiple && a.multiplicity == b.multiplicity;
    }
};

/// Restricted system with multiplicities, sorted by (root, multiple).
struct RootMultiset {
    int rank = 0;
    std::vector<RootMultisetEntry> entries;

    friend bool operator==(const RootMultiset& a, const RootMultiset& b) {
        return a.rank == b.rank && a.entries == b.entries;
    }

    /// Total multiplicity over all entries.
    long long total() const;

    /// The distinct primitive roots, sorted (each exactly once even when it
    /// occurs with several multiples).
    std::vector<IntVec> reduced_roots() const;
};

struct Fiber {
    IntVec root;
    Coord multiple = 1;
    std::vector<IntVec> preimages;  // original roots mapping onto this entry
};

struct RestrictionReport {
    RootMultiset multiset;
    std::vector<IntVec> localized;  // original roots with zero image
    std::vector<Fiber> fibers;
};

/// Delete the coordinates listed in J (0-based, strictly increasing).
/// Roots supported inside J have zero image and are collected in
/// `localized`; every other root contributes (primitive image, multiple) to
/// the multiset.  J may be empty (identity restriction).  Throws
/// std::domain_error("restriction to origin") when J is everything.
RestrictionReport restrict_parabolic(const RootSet& r, const std::vector<int>& J);

/// The same rule applied to an already-restricted multiset; `localized`
/// returns the entries whose image vanished.
struct MultisetRestriction {
    RootMultiset multiset;
    std::vector<RootMultisetEntry> localized;
};
MultisetRestriction restrict_parabolic(const RootMultiset& m, const std::vector<int>& J);

/// True iff g maps the root set bijectively onto itself up to sign;
/// `automorphism_witness` returns a root whose image breaks that, if any.
bool validate_automorphism(const RootSet& r, const IntMat& g);
std::optional<IntVec> automorphism_witness(const RootSet& r, const IntMat& g);

/// Sum coordinates along the orbits of the permutation sigma
/// (sigma[i] = image of index i, 0-based).  The permutation must be an
/// automorphism of the root set; otherwise std::domain_error("not an
/// automorphism of the root set: ...") carries a witness root.  Orbits are
/// ordered by their smallest element; the image never vanishes, so
/// `localized` is always empty here.
RestrictionReport restrict_permutation(const RootSet& r, const std::vector<int>& sigma);

/// Orbit-sum restriction of a multiset; sigma must permute the entries.
RootMultiset restrict_permutation(const RootMultiset& m, const std::vector<int>& sigma);

/// Decomposition of an involutive automorphism g (in the coordinates of the
/// given root set): walk to a chamber minimizing the number of positive
/// roots sent negative; there the conjugated map acts as -1 on the simple
/// roots listed in `delta1` and permutes the remaining indices by `sigma`
/// (sigma[i] == i on delta1).  `chamber` is that object's root set and
/// `frame` the change of basis onto it (`frame_inv` its inverse).  Throws:
///  - "folding lemma requires involution" unless g*g == 1;
///  - "not an automorphism of the root set: ..." with a witness root.
struct FoldingDecomposition {
    RootSet chamber;
    IntMat frame;
    IntMat frame_inv;
    std::vector<int> delta1;
    std::vector<int> sigma;
};

FoldingDecomposition folding_decompose(const RootSet& seed, const IntMat& gmat);

/// Two-step restriction attached to an involution: delete the delta1
/// coordinates at the minimizing chamber, then sum along sigma's orbits.
/// The report is in the coordinates of that chamber (fibers and localized
/// refer to its root set).  Throws "restriction to origin" when delta1 is
/// everything.
RestrictionReport restrict_folding(const RootSet& seed, const IntMat& gmat);

/// Search for an involution g whose folding restriction reproduces the
/// coordinate-deletion restriction at J.  The candidate is built from the
/// longest reflection word of the J-parabolic; returns std::nullopt when the
/// candidate fails (not an involution, not an automorphism, or the two
/// restrictions differ).  When J is all of the rank, the restrictions are
/// both undefined and the candidate is returned on the strength of the
/// involution/automorphism checks alone.
std::optional<IntMat> parabolic_equals_folding(const RootSet& r, const std::vector<int>& J);

/// Factor an automorphism given in the coordinates of `object` as
/// (reflection word) * (simple-root permutation): `word` is a shortest
/// reflection word from `object` to the chamber g maps it to, and `f` is the
/// permutation matrix with g == matrix(word) * f.  Throws "not an
/// automorphism of the root set: ..." when g does not preserve the roots.
struct AutomorphismFactorization {
    std::vector<int> word;
    IntMat f;
};

AutomorphismFactorization factor_automorphism(const CartanGraph& g, const IntMat& gmat,
                                              int object);

}  // namespace rootarr
