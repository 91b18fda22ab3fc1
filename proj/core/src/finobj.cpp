#include "chu/finobj.hpp"

#include "chu/morphism.hpp"

namespace chu {

bool classify_iC(const Space& space) { return is_extensional(space); }

bool classify_iE(const Space& space, const Budget& budget) {
    if (!is_extensional(space))
        throw Error(Errc::CategoryMembershipViolated, "classify_iE needs an extensional space");
    return is_discrete(space, budget).discrete;
}

bool classify_iB(const Space& space, const Budget& budget) {
    if (!is_biextensional(space))
        throw Error(Errc::CategoryMembershipViolated, "classify_iB needs a biextensional space");
    if (space.object_count() == 1 && space.attribute_count() == 0) return true;
    return is_discrete(space, budget).discrete;
}

std::optional<bool> attribute_bound(const Space& space) {
    if (!is_extensional(space)) return std::nullopt;
    // |X| <= |Sigma|^|A|, compared without overflow.
    const std::size_t k = space.alphabet().size();
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < space.object_count(); ++i) {
        if (bound >= space.attribute_count()) return true;  // already large enough
        if (k != 0 && bound > UINT64_MAX / k) return true;
        bound *= k;
    }
    return space.attribute_count() <= bound;
}

FinitenessReport classify(const Space& space, const Budget& budget) {
    FinitenessReport r;
    r.objects = space.object_count();
    r.attributes = space.attribute_count();
    r.extensional = is_extensional(space);
    r.separable = is_separable(space);
    r.discreteness = is_discrete(space, budget);
    r.finite_iC = r.extensional;
    if (r.extensional) r.finite_iE = r.discreteness.discrete;
    if (r.extensional && r.separable)
        r.finite_iB = r.discreteness.discrete ||
                      (space.object_count() == 1 && space.attribute_count() == 0);
    r.attribute_bound_holds = attribute_bound(space);
    return r;
}

std::optional<std::pair<std::size_t, Morphism>> find_factorization(
    const Chain& chain, const std::vector<Morphism>& legs, const Morphism& phi,
    std::size_t upto, const Budget& budget) {
    std::optional<std::pair<std::size_t, Morphism>> found;
    for (std::size_t i = 0; i < upto && i < legs.size() && !found; ++i) {
        for_each_morphism(
            phi.source, chain.stage(i), MorphismFilter::All,
            [&](const Morphism& psi) {
                Morphism composite = compose(legs[i], psi);
                if (composite.forward == phi.forward && composite.backward == phi.backward) {
                    found = std::make_pair(i, psi);
                    return false;
                }
                return true;
            },
            budget);
    }
    return found;
}

}  // namespace chu
