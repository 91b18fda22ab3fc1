#pragma once

#include <random>

#include "chu/chain.hpp"
#include "chu/enumerate.hpp"
#include "chu/space.hpp"

namespace chu {
namespace sweeps {

/// Uniform-ish random space within the bounds, rejection-sampled against the
/// filter (at least one object and one attribute). Falls back to shrinking
/// the attribute count when the filter keeps rejecting.
Space random_space(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_objects,
                   std::size_t max_attributes, SpaceFilter filter = SpaceFilter::All);

/// Random explicit chain whose links are monic in the claimed category by
/// construction: forward maps are inclusions (old rows forced by
/// adjointness), backward maps are random (surjective for iC), and stage
/// membership (iE extensional, iB biextensional) is rejection-sampled.
/// Length is uniform in [2, max_length].
Chain random_chain(std::mt19937_64& rng, ChainCategory claim, std::size_t max_length,
                   std::size_t max_objects, std::size_t max_attributes);

}  // namespace sweeps
}  // namespace chu
