#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "chu/morphism.hpp"
#include "chu/space.hpp"

namespace chu {

/// Which category's monic characterization the connecting morphisms are
/// claimed to satisfy: iC (forward injective, backward surjective), iE
/// (extensional stages, forward injective), iB (biextensional stages,
/// forward injective).
enum class ChainCategory { iC, iE, iB };

const char* chain_category_name(ChainCategory c);

/// An omega-chain of Chu spaces C_1 -> C_2 -> ... Either explicit (a finite
/// list of stages and links) or generated on demand by stage/link rules.
/// Stages and links are cached; generated rules may refuse large indices
/// (windowed truncations throw WindowExhausted).
class Chain {
public:
    using StageFn = std::function<Space(std::size_t)>;     // 0-based stage index
    using LinkFn = std::function<Morphism(std::size_t)>;   // link i: stage i -> stage i+1

    static Chain explicit_chain(std::vector<Space> stages, std::vector<Morphism> links,
                                ChainCategory claim);
    static Chain generated(StageFn stage, LinkFn link, ChainCategory claim, bool windowed,
                           std::string rule = {}, std::optional<std::size_t> window = {});

    bool is_explicit() const;
    /// Number of stages for an explicit chain, nullopt for generated ones.
    std::optional<std::size_t> length() const;
    ChainCategory claim() const;
    bool windowed() const;
    const std::string& rule() const;               // empty for explicit chains
    std::optional<std::size_t> window() const;

    const Space& stage(std::size_t i) const;       // 0-based
    const Morphism& link(std::size_t i) const;     // stage i -> stage i+1

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Checks, for stages/links 0..upto-1, that each link is a valid morphism
/// between consecutive stages and satisfies the claim: monic characterization
/// plus (iE/iB) the stages' membership predicate. Throws InvalidChain /
/// CategoryMembershipViolated / NotMonic on the first failure.
void validate(const Chain& chain, std::size_t upto);

/// Isomorphic explicit chain whose forward maps preserve object labels, so
/// each A_i is literally a subset of A_{i+1}. Labels are threaded from the
/// earliest stage; genuinely new objects keep their own label, suffixed with
/// ' until distinct. Throws ForwardNotInjective. For generated chains `upto`
/// (stage count) is required.
Chain normalize_to_inclusions(const Chain& chain, std::optional<std::size_t> upto = {});

struct ColimitResult {
    Space space;
    /// Injections psi_i: C_i -> space, i = 0..depth-1. Forward maps are the
    /// label-threaded inclusions, backward maps send a thread to its stage-i
    /// entry.
    std::vector<Morphism> injections;
    std::size_t depth = 0;
    /// Thread count and one-step extendability unchanged from depth-1 to
    /// depth. Heuristic convergence signal only; false whenever the stages
    /// needed to measure it are unavailable.
    bool stabilized = false;
    bool exact = false;  // explicit chain consumed in full
    /// Per colimit attribute, the thread (x_1..x_depth) as stage attribute
    /// indices, in lexicographic order.
    std::vector<std::vector<std::size_t>> threads;
};

/// The chain's colimit over the first `depth` stages. Attributes are the
/// compatible threads (x_j) with link_j^-(x_{j+1}) = x_j, labeled
/// "x_1|x_2|...|x_depth"; a thread is determined by its last entry, so the
/// space is the last stage with relabeled attributes and label-threaded
/// objects. Exact for explicit chains consumed in full (depth is clamped to
/// the chain length); a depth-k approximant otherwise.
ColimitResult colimit(const Chain& chain, std::size_t depth, const Budget& budget = {});

/// Cocone law legs[i+1] o link_i == legs[i] for i+1 < upto. Legs must be
/// valid morphisms stage_i -> apex (InvalidLeg otherwise).
bool validate_cocone(const Chain& chain, const Space& apex, const std::vector<Morphism>& legs,
                     std::size_t upto);

/// All stages up to result.depth must be extensional
/// (CategoryMembershipViolated otherwise); asserts the colimit space is too.
bool check_extensionality_preserved(const Chain& chain, const ColimitResult& result);

/// All stages up to result.depth must be biextensional
/// (NotBiextensionalChain otherwise). Reports whether every object pair of
/// the colimit space is separated by some thread; for explicit chains
/// consumed in full this decides separability of the colimit.
bool check_separability_preserved(const Chain& chain, const ColimitResult& result);

/// The mediating morphism from result.space to another cocone's apex:
/// forward via the stage where each object first appears, backward by
/// assembling the thread (other_legs_m^-(x'))_m and looking it up among
/// result's threads. nullopt when the assembled thread is not a thread of
/// the approximant (possible only in truncated mode). Throws InvalidCocone
/// when the other legs do not form a cocone up to result.depth.
std::optional<Morphism> mediate(const Chain& chain, const ColimitResult& result,
                                const Space& other_apex, const std::vector<Morphism>& other_legs);

}  // namespace chu
