#pragma once

#include <functional>
#include <vector>

#include "chu/space.hpp"

namespace chu {

enum class SpaceFilter { All, Extensional, Biextensional, Separable, StronglyFinite };

bool satisfies(const Space& space, SpaceFilter filter);

/// All spaces with |A| <= max_objects, |X| <= max_attributes over the given
/// alphabet, up to isomorphism (canonical representatives), satisfying the
/// filter. Order: by (|A|, |X|), then by canonical matrix word. Each
/// (|A|,|X|) cell scans |Sigma|^(|A|*|X|) raw matrices, so the call is
/// budget-guarded per cell.
std::vector<Space> enumerate_spaces(const Alphabet& alphabet, std::size_t max_objects,
                                    std::size_t max_attributes, SpaceFilter filter = SpaceFilter::All,
                                    const Budget& budget = {});

/// Streaming variant in the same order; return false to stop early.
bool for_each_space(const Alphabet& alphabet, std::size_t max_objects, std::size_t max_attributes,
                    SpaceFilter filter, const std::function<bool(const Space&)>& visit,
                    const Budget& budget = {});

}  // namespace chu
