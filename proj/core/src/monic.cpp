#include "chu/monic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chu/enumerate.hpp"

namespace chu {

const char* category_name(Category c) {
    switch (c) {
        case Category::C: return "C";
        case Category::E: return "E";
        case Category::B: return "B";
        case Category::Separable: return "Separable";
    }
    return "?";
}

bool in_category(const Space& space, Category category) {
    switch (category) {
        case Category::C: return true;
        case Category::E: return is_extensional(space);
        case Category::B: return is_biextensional(space);
        case Category::Separable: return is_separable(space);
    }
    return false;
}

bool witness_refutes(const Morphism& m, Category category, const RefutationWitness& w) {
    if (!in_category(w.test_space, category)) return false;
    if (w.first.source != w.test_space || w.second.source != w.test_space) return false;
    if (w.first.target != m.source || w.second.target != m.source) return false;
    if (!validate(w.first) || !validate(w.second)) return false;
    if (w.first.forward == w.second.forward && w.first.backward == w.second.backward) return false;
    Morphism c1 = compose(m, w.first), c2 = compose(m, w.second);
    return c1.forward == c2.forward && c1.backward == c2.backward;
}

namespace {

std::string fresh_label(std::set<std::string>& used, std::string base) {
    while (!used.insert(base).second) base += "'";
    return base;
}

// Test space ({a}, r*, Sigma) with r*(a, s) = s, plus the two point embeddings
// of a clashing object pair i, j (forward[i] == forward[j], i < j).
RefutationWitness forward_witness(const Morphism& m, std::size_t i, std::size_t j) {
    const Alphabet& alphabet = m.source.alphabet();
    std::vector<Symbol> row(alphabet.size());
    for (std::size_t s = 0; s < alphabet.size(); ++s) row[s] = static_cast<Symbol>(s);
    Space test(alphabet, {"a"}, alphabet.symbols(), row);

    auto embed = [&](std::size_t obj) {
        Morphism phi{test, m.source, {obj}, {}};
        phi.backward.resize(m.source.attribute_count());
        for (std::size_t x = 0; x < phi.backward.size(); ++x) phi.backward[x] = m.source.at(obj, x);
        return phi;
    };
    return RefutationWitness{test, embed(i), embed(j)};
}

// The source with every attribute outside the backward image doubled; the two
// members agree on the image and split on the copies.
RefutationWitness backward_witness(const Morphism& m) {
    const Space& src = m.source;
    std::vector<char> in_image(src.attribute_count(), 0);
    for (std::size_t x : m.backward) in_image[x] = 1;

    std::set<std::string> used;
    std::vector<std::string> attrs;
    std::vector<Symbol> matrix;
    std::vector<std::size_t> g1(src.attribute_count()), g2(src.attribute_count());
    for (std::size_t x = 0; x < src.attribute_count(); ++x) {
        const std::string& base = src.attributes()[x];
        if (in_image[x]) {
            g1[x] = g2[x] = attrs.size();
            attrs.push_back(fresh_label(used, base));
        } else {
            g1[x] = attrs.size();
            attrs.push_back(fresh_label(used, base + ".copy1"));
            g2[x] = attrs.size();
            attrs.push_back(fresh_label(used, base + ".copy2"));
        }
    }
    matrix.resize(src.object_count() * attrs.size());
    std::size_t col = 0;
    for (std::size_t x = 0; x < src.attribute_count(); ++x) {
        std::size_t copies = in_image[x] ? 1 : 2;
        for (std::size_t c = 0; c < copies; ++c, ++col)
            for (std::size_t a = 0; a < src.object_count(); ++a)
                matrix[a * attrs.size() + col] = src.at(a, x);
    }
    Space test(src.alphabet(), src.objects(), std::move(attrs), std::move(matrix));

    std::vector<std::size_t> id(src.object_count());
    for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
    return RefutationWitness{test, Morphism{test, src, id, g1}, Morphism{test, src, id, g2}};
}

}  // namespace

MonicVerdict is_monic(const Morphism& m, Category category, bool build_witness) {
    if (!validate(m)) throw Error(Errc::InvalidMorphism, "is_monic requires a valid morphism");
    if (category != Category::C && (!in_category(m.source, category) || !in_category(m.target, category)))
        throw Error(Errc::CategoryMembershipViolated,
                    std::string("endpoints are not both in category ") + category_name(category));

    MonicVerdict v;
    v.category = category;
    v.forward_injective = forward_injective(m);
    v.backward_surjective = backward_surjective(m);
    v.forward_injectivity_required = category != Category::Separable;
    v.backward_surjectivity_required = category == Category::C || category == Category::Separable;
    v.alphabet_assumption_met = m.source.alphabet().size() >= 2;
    v.monic = (!v.forward_injectivity_required || v.forward_injective) &&
              (!v.backward_surjectivity_required || v.backward_surjective);

    if (!v.monic && build_witness) {
        if (v.forward_injectivity_required && !v.forward_injective) {
            std::vector<std::size_t> first_at(m.target.object_count(), SIZE_MAX);
            for (std::size_t a = 0; a < m.forward.size(); ++a) {
                if (first_at[m.forward[a]] != SIZE_MAX) {
                    v.witness = forward_witness(m, first_at[m.forward[a]], a);
                    break;
                }
                first_at[m.forward[a]] = a;
            }
        } else {
            v.witness = backward_witness(m);
        }
    }
    return v;
}

BackwardInjectivityCheck check_surjective_forward_implies_injective_backward(const Morphism& m) {
    if (!is_extensional(m.target))
        throw Error(Errc::CategoryMembershipViolated, "check requires an extensional target");
    BackwardInjectivityCheck out;
    out.applied = forward_surjective(m);
    out.holds = !out.applied || backward_injective(m);
    return out;
}

std::optional<RefutationWitness> definitional_refutation(const Morphism& m, Category category,
                                                         std::size_t max_test_objects,
                                                         std::size_t max_test_attributes,
                                                         const Budget& budget) {
    SpaceFilter filter = SpaceFilter::All;
    if (category == Category::E) filter = SpaceFilter::Extensional;
    if (category == Category::B) filter = SpaceFilter::Biextensional;
    if (category == Category::Separable) filter = SpaceFilter::Separable;

    std::optional<RefutationWitness> found;
    for_each_space(
        m.source.alphabet(), max_test_objects, max_test_attributes, filter,
        [&](const Space& test) {
            using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
            std::map<Key, Morphism> by_composite;
            for_each_morphism(
                test, m.source, MorphismFilter::All,
                [&](const Morphism& phi) {
                    Morphism c = compose(m, phi);
                    auto [it, inserted] = by_composite.try_emplace(Key{c.forward, c.backward}, phi);
                    if (!inserted) {
                        found = RefutationWitness{test, it->second, phi};
                        return false;
                    }
                    return true;
                },
                budget);
            return !found;
        },
        budget);
    return found;
}

}  // namespace chu
