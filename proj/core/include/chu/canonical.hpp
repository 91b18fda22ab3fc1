#pragma once

#include <optional>

#include "chu/morphism.hpp"
#include "chu/space.hpp"

namespace chu {

/// Canonical representative of the isomorphism class: the row/column
/// permutation minimizing the row-major matrix word, with generic labels
/// a1..an / x1..xm. Two spaces over the same alphabet have equal canonical
/// forms iff they are isomorphic; the map is idempotent.
Space canonical_form(const Space& space);

/// First isomorphism in canonical search order (object maps lexicographic),
/// or nullopt. Isomorphisms have bijective forward and backward components.
/// Throws AlphabetMismatch when the alphabets differ.
std::optional<Morphism> find_isomorphism(const Space& s1, const Space& s2);

}  // namespace chu
