#include "chu/suites.hpp"

#include <map>
#include <random>

#include "chu/chain.hpp"
#include "chu/enumerate.hpp"
#include "chu/io.hpp"
#include "chu/monic.hpp"
#include "chu/morphism.hpp"
#include "chu/sweeps.hpp"
#include "chu/universal.hpp"

namespace chu {
namespace suites {

namespace {

std::string tag(const Space& s, const Space& t) {
    return std::to_string(s.object_count()) + "x" + std::to_string(s.attribute_count()) + "->" +
           std::to_string(t.object_count()) + "x" + std::to_string(t.attribute_count());
}

}  // namespace

SuiteReport characterization_agreement(const Alphabet& alphabet, std::size_t max_objects,
                                       std::size_t max_attributes, std::size_t test_objects,
                                       std::size_t test_attributes, const Budget& budget) {
    SuiteReport report{.suite = "characterization-agreement"};
    std::vector<Space> all =
        enumerate_spaces(alphabet, max_objects, max_attributes, SpaceFilter::All, budget);
    for (const Space& s : all)
        for (const Space& t : all)
            for (const Morphism& m : enumerate_morphisms(s, t, MorphismFilter::All, budget))
                for (Category cat : {Category::C, Category::E, Category::B}) {
                    if (cat != Category::C && !(in_category(s, cat) && in_category(t, cat)))
                        continue;
                    ++report.cases;
                    MonicVerdict v = is_monic(m, cat);
                    if (v.monic == v.witness.has_value()) {
                        report.fail("witness presence disagrees with verdict at " + tag(s, t));
                        continue;
                    }
                    if (v.witness && !witness_refutes(m, cat, *v.witness))
                        report.fail("constructed witness does not refute at " + tag(s, t));
                    auto found =
                        definitional_refutation(m, cat, test_objects, test_attributes, budget);
                    if (found.has_value() == v.monic)
                        report.fail("definitional search disagrees with verdict at " + tag(s, t));
                    else if (found && !witness_refutes(m, cat, *found))
                        report.fail("searched witness does not refute at " + tag(s, t));
                }
    return report;
}

SuiteReport determination_sweep(const Alphabet& alphabet, std::size_t max_objects,
                                std::size_t max_attributes, const Budget& budget) {
    SuiteReport report{.suite = "component-determination"};
    std::vector<Space> all =
        enumerate_spaces(alphabet, max_objects, max_attributes, SpaceFilter::All, budget);
    for (const Space& s : all)
        for (const Space& t : all) {
            std::vector<Morphism> morphs = enumerate_morphisms(s, t, MorphismFilter::All, budget);
            const bool ext_s = is_extensional(s);
            const bool sep_t = is_separable(t);
            const bool biext = is_biextensional(s) && is_biextensional(t);
            for (std::size_t i = 0; i < morphs.size(); ++i)
                for (std::size_t j = i + 1; j < morphs.size(); ++j) {
                    ++report.cases;
                    const bool fwd_eq = morphs[i].forward == morphs[j].forward;
                    const bool bwd_eq = morphs[i].backward == morphs[j].backward;
                    if (ext_s && fwd_eq && !bwd_eq)
                        report.fail("forward did not determine backward at " + tag(s, t));
                    if (sep_t && bwd_eq && !fwd_eq)
                        report.fail("backward did not determine forward at " + tag(s, t));
                    if (biext && fwd_eq != bwd_eq)
                        report.fail("biextensional components disagree at " + tag(s, t));
                }
        }
    return report;
}

SuiteReport mediator_sweep(std::uint64_t seed, std::size_t runs, std::size_t max_length,
                           std::size_t max_objects, std::size_t max_attributes,
                           std::size_t apex_objects, std::size_t apex_attributes,
                           const Budget& budget) {
    SuiteReport report{.suite = "colimit-mediator"};
    std::vector<Space> apexes = enumerate_spaces(Alphabet::binary(), apex_objects,
                                                 apex_attributes, SpaceFilter::Extensional, budget);
    std::mt19937_64 rng(seed);
    using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
    for (std::size_t run = 0; run < runs; ++run) {
        ++report.cases;
        Chain ch = sweeps::random_chain(rng, ChainCategory::iE, max_length, max_objects,
                                        max_attributes);
        const std::size_t n = *ch.length();
        ColimitResult res = colimit(ch, n, budget);
        std::string at = "run " + std::to_string(run);
        if (!res.exact) {
            report.fail("colimit not exact at " + at);
            continue;
        }
        if (!check_extensionality_preserved(ch, res)) {
            report.fail("colimit not extensional at " + at);
            continue;
        }
        if (!validate_cocone(ch, res.space, res.injections, n)) {
            report.fail("injections violate the cocone law at " + at);
            continue;
        }
        const Morphism& psi_top = res.injections[n - 1];
        bool chain_ok = true;
        for (const Space& apex : apexes) {
            // Every cocone over the chain is determined by its top leg, and
            // a candidate mediator commutes with all legs iff it does with
            // the top one; group candidates by that composite.
            std::map<Key, std::size_t> count;
            std::map<Key, Morphism> rep;
            for (const Morphism& mu :
                 enumerate_morphisms(res.space, apex, MorphismFilter::All, budget)) {
                Morphism comp = compose(mu, psi_top);
                Key key{comp.forward, comp.backward};
                if (++count[key] == 1) rep.emplace(std::move(key), mu);
            }
            for (const Morphism& psi :
                 enumerate_morphisms(ch.stage(n - 1), apex, MorphismFilter::All, budget)) {
                auto it = count.find(Key{psi.forward, psi.backward});
                if (it == count.end()) {
                    report.fail("no mediator by enumeration at " + at);
                    chain_ok = false;
                    break;
                }
                if (it->second != 1) {
                    report.fail("mediator not unique by enumeration at " + at);
                    chain_ok = false;
                    break;
                }
                std::vector<Morphism> legs(n);
                legs[n - 1] = psi;
                for (std::size_t i = n - 1; i-- > 0;) legs[i] = compose(legs[i + 1], ch.link(i));
                auto med = mediate(ch, res, apex, legs);
                if (!med) {
                    report.fail("mediate() failed at " + at);
                    chain_ok = false;
                    break;
                }
                Morphism comp = compose(*med, psi_top);
                if (comp.forward != psi.forward || comp.backward != psi.backward) {
                    report.fail("mediator does not commute at " + at);
                    chain_ok = false;
                    break;
                }
            }
            if (!chain_ok) break;
        }
    }
    return report;
}

SuiteReport biextensional_colimit_sweep(std::uint64_t seed, std::size_t runs,
                                        std::size_t max_length, std::size_t max_objects,
                                        std::size_t max_attributes, const Budget& budget) {
    SuiteReport report{.suite = "biextensional-colimit"};
    std::mt19937_64 rng(seed);
    for (std::size_t run = 0; run < runs; ++run) {
        ++report.cases;
        Chain ch = sweeps::random_chain(rng, ChainCategory::iB, max_length, max_objects,
                                        max_attributes);
        ColimitResult res = colimit(ch, *ch.length(), budget);
        std::string at = "run " + std::to_string(run);
        if (!check_extensionality_preserved(ch, res))
            report.fail("colimit not extensional at " + at);
        else if (!check_separability_preserved(ch, res))
            report.fail("no separating threads at " + at);
    }
    return report;
}

SuiteReport amalgamation_sweep(const Alphabet& alphabet, std::size_t max_objects,
                               std::size_t max_attributes, std::size_t max_triples,
                               std::uint64_t seed, const Budget& budget) {
    SuiteReport report{.suite = "amalgamation"};
    std::vector<Space> catalog = enumerate_spaces(alphabet, max_objects, max_attributes,
                                                  SpaceFilter::StronglyFinite, budget);
    // All monic-iC legs out of each base; a triple is a base plus two legs.
    std::vector<std::vector<Morphism>> legs(catalog.size());
    std::size_t total = 0;
    for (std::size_t b = 0; b < catalog.size(); ++b) {
        for (const Space& target : catalog)
            for (Morphism& m :
                 enumerate_morphisms(catalog[b], target, MorphismFilter::MonicC, budget))
                legs[b].push_back(std::move(m));
        total += legs[b].size() * legs[b].size();
    }

    std::mt19937_64 rng(seed);
    auto run_triple = [&](std::size_t b, const Morphism& l, const Morphism& r) {
        ++report.cases;
        std::string at = "base " + std::to_string(b);
        try {
            AmalgamationSquare sq = amalgamate(catalog[b], l, r);
            Morphism via_l = compose(sq.from_left, sq.into_left);
            Morphism via_r = compose(sq.from_right, sq.into_right);
            if (via_l.forward != via_r.forward || via_l.backward != via_r.backward)
                report.fail("square does not commute at " + at);
            else if (!is_strongly_finite(sq.apex) || !is_extensional(sq.apex))
                report.fail("apex not strongly finite at " + at);
            else if (!forward_injective(sq.from_left) || !backward_surjective(sq.from_left) ||
                     !forward_injective(sq.from_right) || !backward_surjective(sq.from_right))
                report.fail("apex leg not monic at " + at);
        } catch (const Error& e) {
            report.fail(std::string("amalgamate threw at ") + at + ": " + e.what());
        }
    };

    if (total <= max_triples) {
        for (std::size_t b = 0; b < catalog.size(); ++b)
            for (const Morphism& l : legs[b])
                for (const Morphism& r : legs[b]) run_triple(b, l, r);
    } else {
        // Seeded subsample, weighted like the full triple set.
        std::vector<std::size_t> weights;
        for (const auto& v : legs) weights.push_back(v.size() * v.size());
        std::discrete_distribution<std::size_t> pick_base(weights.begin(), weights.end());
        for (std::size_t i = 0; i < max_triples; ++i) {
            std::size_t b = pick_base(rng);
            std::uniform_int_distribution<std::size_t> pick(0, legs[b].size() - 1);
            run_triple(b, legs[b][pick(rng)], legs[b][pick(rng)]);
        }
    }
    return report;
}

SuiteReport roundtrip_sweep(const Alphabet& alphabet, std::size_t max_objects,
                            std::size_t max_attributes, const Budget& budget) {
    SuiteReport report{.suite = "format-roundtrip"};
    for_each_space(
        alphabet, max_objects, max_attributes, SpaceFilter::All,
        [&](const Space& s) {
            ++report.cases;
            std::string at = tag(s, s);
            try {
                if (io::parse_space_text(io::emit_space_text(s)) != s)
                    report.fail("text round-trip not identity at " + at);
                if (io::parse_space_json(io::emit_space_json(s)) != s)
                    report.fail("JSON round-trip not identity at " + at);
            } catch (const Error& e) {
                report.fail("round-trip threw at " + at + ": " + e.what());
            }
            return true;
        },
        budget);
    return report;
}

}  // namespace suites
}  // namespace chu
