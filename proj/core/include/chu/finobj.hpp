#pragma once

#include <optional>

#include "chu/chain.hpp"
#include "chu/space.hpp"

namespace chu {

/// Finite object of the category of all Chu spaces: a concrete value always
/// has finite object set, so the predicate reduces to extensionality.
bool classify_iC(const Space& space);

/// Finite object among extensional spaces: discreteness. The space must be
/// extensional (CategoryMembershipViolated otherwise); budget-guarded via
/// |Sigma|^|A|.
bool classify_iE(const Space& space, const Budget& budget = {});

/// Finite object among biextensional spaces: discrete, or a single object
/// with no attributes. The space must be biextensional
/// (CategoryMembershipViolated otherwise).
bool classify_iB(const Space& space, const Budget& budget = {});

/// |X| <= |Sigma|^|A| for extensional spaces; nullopt when the space is not
/// extensional (the bound is not asserted there).
std::optional<bool> attribute_bound(const Space& space);

struct FinitenessReport {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    bool extensional = false;
    bool separable = false;
    DiscretenessResult discreteness;
    bool finite_iC = false;
    std::optional<bool> finite_iE;  // absent when not extensional
    std::optional<bool> finite_iB;  // absent when not biextensional
    std::optional<bool> attribute_bound_holds;
};

FinitenessReport classify(const Space& space, const Budget& budget = {});

/// Definitional probe: the first stage index i < upto together with a
/// morphism psi: phi.source -> stage_i satisfying legs[i] o psi = phi, if
/// one exists. This is the factorization a finite object must admit for a
/// cocone (apex, legs) over the chain.
std::optional<std::pair<std::size_t, Morphism>> find_factorization(
    const Chain& chain, const std::vector<Morphism>& legs, const Morphism& phi,
    std::size_t upto, const Budget& budget = {});

}  // namespace chu
