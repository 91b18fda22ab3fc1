#pragma once

#include <optional>

#include "chu/morphism.hpp"
#include "chu/space.hpp"

namespace chu {

/// The categories with distinct monicity characterizations. C is all Chu
/// spaces; E extensional, B biextensional, Separable separable spaces (each
/// with all Chu morphisms between them).
enum class Category { C, E, B, Separable };

const char* category_name(Category c);

/// Membership predicate of the category's object class.
bool in_category(const Space& space, Category category);

/// A definitional certificate that a morphism m is not monic: two distinct
/// morphisms test_space -> m.source whose composites with m agree.
struct RefutationWitness {
    Space test_space;
    Morphism first;
    Morphism second;
};

/// Checks the witness on its own terms: both members are valid morphisms out
/// of the witness's test space into m.source, the test space lies in the
/// category, the members differ, and their composites with m are equal.
bool witness_refutes(const Morphism& m, Category category, const RefutationWitness& w);

struct MonicVerdict {
    Category category = Category::C;
    bool monic = false;
    // Measured components and whether the category's characterization needs
    // them. monic is the conjunction of the required measured components.
    bool forward_injective = false;
    bool backward_surjective = false;
    bool forward_injectivity_required = false;
    bool backward_surjectivity_required = false;
    /// The characterizations assume an alphabet with at least two symbols;
    /// verdicts over a smaller alphabet are flagged rather than refused.
    bool alphabet_assumption_met = true;
    std::optional<RefutationWitness> witness;  // present iff !monic and witnesses enabled
};

/// Decides monicity by the per-category characterization:
///   C: forward injective and backward surjective;
///   E, B: forward injective;
///   Separable: backward surjective.
/// For E/B/Separable both endpoints must lie in the category. When the verdict
/// is negative a RefutationWitness is attached (forward witness preferred):
///   - forward non-injective: test space ({a}, r*, Sigma) with r*(a, s) = s
///     and the two point embeddings of a clashing object pair;
///   - backward non-surjective: the source with every attribute outside the
///     backward image duplicated (labels x.copy1 / x.copy2), with the two
///     evident backward maps.
MonicVerdict is_monic(const Morphism& m, Category category, bool build_witness = true);

struct BackwardInjectivityCheck {
    bool applied = false;  // forward surjective (target extensionality is a precondition)
    bool holds = true;     // applied implies backward injective
};

/// Surjective forward forces injective backward when the target is
/// extensional. Throws CategoryMembershipViolated if the target is not.
BackwardInjectivityCheck check_surjective_forward_implies_injective_backward(const Morphism& m);

/// Bounded definitional search for a refutation: enumerates category members
/// up to the given size as test spaces, streams all morphisms into m.source,
/// and returns the first parallel pair with equal composites through m.
std::optional<RefutationWitness> definitional_refutation(const Morphism& m, Category category,
                                                         std::size_t max_test_objects,
                                                         std::size_t max_test_attributes,
                                                         const Budget& budget = {});

}  // namespace chu
