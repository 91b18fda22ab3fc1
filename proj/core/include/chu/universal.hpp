#pragma once

#include <optional>
#include <vector>

#include "chu/chain.hpp"
#include "chu/morphism.hpp"
#include "chu/space.hpp"

namespace chu {

/// Extensional with at least one attribute. (Concrete values are always
/// finite, so this is the full strong-finiteness predicate.)
bool is_strongly_finite(const Space& space);

struct AmalgamationSquare {
    Space base, left, right, apex;
    Morphism into_left, into_right;  // base -> left / right
    Morphism from_left, from_right;  // left / right -> apex
    /// Apex attribute t is the compatible pair (pairs[t].first in left,
    /// pairs[t].second in right).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Pushout-style amalgamation of two monic-iC morphisms out of a common
/// base: apex objects are the union (right-only objects relabeled with .r
/// suffixes on collision), apex attributes the pairs (x1, x2) whose backward
/// images in the base agree, labeled "(<x1>,<x2>)". The legs are
/// identity-forward / projection-backward, both monic in iC, and the square
/// commutes. Throws NotMonic / InvalidMorphism / AlphabetMismatch on bad
/// inputs and EmptyApexAttributes if no compatible pair exists (impossible
/// for monic-iC legs between strongly finite spaces).
AmalgamationSquare amalgamate(const Space& base, const Morphism& into_left,
                              const Morphism& into_right);

/// Shrinks the apex to a covering subset of its attribute pairs: for every
/// left attribute the first pair carrying it, then first pairs for any right
/// attributes still uncovered. Keeps both legs monic in iC, the square
/// commuting, and the apex extensional, while growing attribute counts
/// additively instead of multiplicatively under iteration.
AmalgamationSquare reduce_apex(const AmalgamationSquare& square);

/// Colimit of a chain of strongly finite spaces with monic-iC links (checked
/// regardless of the chain's own claim: NotStronglyFinite / NotMonic). For
/// explicit chains additionally asserts that every injection has a
/// surjective backward map.
ColimitResult bifinite_from_chain(const Chain& chain, std::size_t depth,
                                  const Budget& budget = {});

struct FraisseResolution {
    std::size_t step = 0;        // 1-based; stage step+1 is the new apex
    std::size_t stage = 0;       // index of e's target stage
    std::size_t catalog_f = 0;   // catalog index of F
    std::size_t catalog_g = 0;   // catalog index of G
    Morphism e;                  // F -> stages[stage], monic iC
    Morphism g;                  // F -> catalog[catalog_g], monic iC
    Morphism e_top;              // e composed up to the stage being extended
    Morphism embed;              // G -> the new stage, monic iC
};

struct FraisseState {
    Alphabet alphabet;
    std::vector<Space> catalog;  // strongly finite iso classes within bounds
    std::vector<Space> stages;   // U_1 = ({}, {}, {x}), then one per step
    std::vector<Morphism> links; // monic-iC connecting morphisms
    std::vector<FraisseResolution> log;

    Chain chain() const;         // the stage chain as an explicit iC-chain
};

/// Fraissé-style construction of approximants to the universal homogeneous
/// bifinite space: starting from the initial object, repeatedly amalgamate
/// the top stage with a catalog object G over a shared subobject F. Tasks
/// (F, e: F -> U_n, g: F -> G) are drawn FIFO from a deterministic lazy
/// stream (stage creation order, then catalog order, then enumeration
/// order); each resolution appends the reduced apex as the next stage, so
/// every G acquires a verified monic embedding into the tower.
FraisseState fraisse_build(const Alphabet& alphabet, std::size_t max_objects,
                           std::size_t max_attributes, std::size_t steps,
                           const Budget& budget = {});

struct AlgebroidalReport {
    std::size_t catalog_size = 0;
    bool weakly_initial_ok = false;     // a morphism from ({}, {}, {x}) into every catalog object
    std::size_t chain_checks = 0;       // 2-stage catalog chains with a monic-iC link
    std::size_t chain_failures = 0;     // ... whose colimit or cocone failed
    std::size_t max_morphism_count = 0; // over all ordered catalog pairs (always finite)
};

/// Desk-scale witnesses for the axioms of an algebroidal category over the
/// strongly finite catalog at the given bounds.
AlgebroidalReport check_algebroidal_witnesses(const Alphabet& alphabet, std::size_t max_objects,
                                              std::size_t max_attributes,
                                              const Budget& budget = {});

}  // namespace chu
