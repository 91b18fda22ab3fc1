#pragma once

#include <map>
#include <string>
#include <vector>

#include "chu/chain.hpp"
#include "chu/space.hpp"

namespace chu {
namespace gallery {

/// The order chain: stage i is ({1..i}, <=, {1..i}) over {0,1}, forward maps
/// inclusions, backward maps clip the new top attribute (j -> min(j, i)).
/// Stages past the window throw WindowExhausted. Claim iC.
Chain order_chain(std::size_t window);

/// The windowed divisibility chain: every stage has objects {1..W}; stage i
/// (1-based) has attributes {1..W-i+1} with r_i(a, x) = 1 iff
/// (x + i - 1) mod a = 0. Forward maps are identities, backward maps shift
/// x -> x+1 into the shrinking window, so each is total but never surjective:
/// threads die as depth grows (W-k+1 at depth k, none past W). Claim iE.
Chain divisibility_chain(std::size_t window);

/// Stage j is (A_j, r_j, {1..j}) with r_j(a, i) = 1 iff a is in A_i; forward
/// maps inclusions, backward maps j -> min(j, i). Requires strictly
/// increasing sets (NotStrictlyIncreasing otherwise). Claim iC.
Chain subset_chain(const std::vector<std::vector<std::string>>& sets);

/// The discrete space with objects a1..an and one attribute per function
/// A -> Sigma (columns in lexicographic order, labeled by their symbol
/// strings). Budget-guarded via |Sigma|^n.
Space discrete_space(const Alphabet& alphabet, std::size_t n_objects, const Budget& budget = {});

/// A chain cocone plus a morphism phi from a probe space into the apex, used
/// to exercise the categorical-finiteness definition: the probe is a finite
/// object iff phi factors through some stage.
struct FactorizationDemo {
    Space probe;
    Chain chain;
    Space apex;
    std::vector<Morphism> legs;  // legs[i]: stage i -> apex
    Morphism phi;                // probe -> apex
    std::size_t window = 0;
};

/// Windowed chain showing a space with duplicated columns y1, y2 is not a
/// finite object: stage i repeats the y1 column i times; the apex keeps all
/// W copies and phi's backward map alternates the copies between y1 and y2,
/// so phi cannot factor through stages i <= W-2.
FactorizationDemo repeated_column_demo(const Space& probe, std::size_t y1, std::size_t y2,
                                       std::size_t window);

/// Windowed chain showing a non-discrete extensional space is not a finite
/// object among extensional spaces. Stage i extends the probe with W fresh
/// objects and W-i+1 extra attributes: the probe matrix in the top-left, the
/// missing-function column v repeated on the top-right, zeros bottom-left,
/// and the shifting divisibility matrix bottom-right. The apex drops the
/// extra attributes; factoring phi through a stage would realize v as a
/// probe column. Throws InvalidSpace if the probe is not extensional, and
/// works vacuously (demo still built, factorization succeeds) if discrete.
FactorizationDemo nondiscrete_demo(const Space& probe, std::size_t window);

/// Biextensional variant: additionally pads with a block of fresh objects J
/// carrying a bijective "unit matrix" against |Y|*|J| copies of the probe's
/// attribute block, keeping every stage separable. Requires a biextensional
/// probe with exactly 2 attributes and window >= |A| + 2 (InvalidSpace
/// otherwise; the bijection needs |Y'| = |J| + W).
FactorizationDemo nondiscrete_demo_biextensional(const Space& probe, std::size_t window);

struct NoColimitReport {
    std::size_t window = 0;
    bool cocones_valid = false;           // both apexes are cocones over the order chain
    std::size_t commuting_count = 0;      // morphisms C' -> C commuting with both cocones
    std::size_t commuting_monic_count = 0;  // ... that are monic in iC (must be 0)
    bool obstruction_confirmed = false;   // commuting morphisms exist, none monic
    bool ie_mediator_exists = false;      // forward identity, backward inclusion works
};

/// Desk-scale replay of the failure of colimits in iC: over the order chain
/// prefix of length W, both the windowed apex C = ({1..W}, <=, {1..W}) and
/// C' (with the extra all-ones attribute t) are cocones, C' receives no
/// commuting monic-iC morphism into C, yet the commuting iE morphism
/// (identity, inclusion) exists.
NoColimitReport demo_no_colimit_in_iC(std::size_t window);

/// Builds a generated-chain rule by id: "order-chain" (param window),
/// "divisibility-M" (param window), "subset-chain" (param sets, e.g.
/// "a;a,b;a,b,c"). Throws ParseError for unknown ids or bad params.
Chain make_rule_chain(const std::string& id, const std::map<std::string, std::string>& params);

}  // namespace gallery
}  // namespace chu
