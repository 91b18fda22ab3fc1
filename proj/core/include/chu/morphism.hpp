#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chu/space.hpp"

namespace chu {

/// A Chu morphism: a forward map on objects and a backward map on attributes,
/// tied together by the adjointness condition
///   target(forward(a), y) = source(a, backward(y))   for all a, y.
/// Maps are stored positionally: forward[i] is the target object index of
/// source object i, backward[j] is the source attribute index of target
/// attribute j.
struct Morphism {
    Space source;
    Space target;
    std::vector<std::size_t> forward;
    std::vector<std::size_t> backward;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity(const Space& space);

/// Adjointness at every (object, target attribute) cell. Throws on alphabet
/// mismatch or maps of the wrong shape.
bool validate(const Morphism& m);

bool forward_injective(const Morphism& m);
bool forward_surjective(const Morphism& m);
bool backward_injective(const Morphism& m);
bool backward_surjective(const Morphism& m);

/// m2 after m1. Forward components compose forward, backward components
/// compose the other way around.
Morphism compose(const Morphism& m2, const Morphism& m1);

enum class MorphismFilter { All, MonicC, MonicE };

/// Visits every valid morphism source -> target in deterministic order
/// (forward maps lexicographic by object index, then backward maps
/// lexicographic by target attribute index). Return false from the visitor to
/// stop early. Returns true if the visit ran to completion.
bool for_each_morphism(const Space& source, const Space& target, MorphismFilter filter,
                       const std::function<bool(const Morphism&)>& visit, const Budget& budget = {});

std::vector<Morphism> enumerate_morphisms(const Space& source, const Space& target,
                                          MorphismFilter filter = MorphismFilter::All,
                                          const Budget& budget = {});

std::size_t count_morphisms(const Space& source, const Space& target,
                            MorphismFilter filter = MorphismFilter::All, const Budget& budget = {});

/// First morphism with injective forward and surjective backward, if any.
/// Decides existence without odometer expansion of the backward maps.
std::optional<Morphism> find_monic_c(const Space& source, const Space& target, const Budget& budget = {});

struct ForwardCompletion {
    Morphism morphism;
    /// False when the source is not extensional and more than one backward
    /// map completes the given forward map; the returned one is the least.
    bool unique = true;
};

/// Completes an object map to a full morphism by matching each pulled-back
/// target column against the source columns. Unique whenever the source is
/// extensional.
std::optional<ForwardCompletion> complete_forward(const Space& source, const Space& target,
                                                  const std::vector<std::size_t>& forward);

/// Lazy morphism stream with the same ordering as for_each_morphism. Used
/// where the full list must never be materialized.
class MorphismEnumerator {
public:
    MorphismEnumerator(Space source, Space target, MorphismFilter filter);

    std::optional<Morphism> next();

private:
    bool advance_forward();
    bool prepare_backward();  // candidate sets for the current forward map

    Space source_;
    Space target_;
    MorphismFilter filter_;
    std::vector<std::size_t> forward_;
    std::vector<std::vector<std::size_t>> candidates_;  // per target attribute
    std::vector<std::size_t> choice_;                   // index into candidates_
    bool forward_fresh_ = true;
    bool done_ = false;
};

}  // namespace chu
