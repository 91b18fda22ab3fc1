#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chu/space.hpp"

namespace chu {
namespace suites {

struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool passed() const { return cases > 0 && failures == 0; }
    void fail(const std::string& note) {
        ++failures;
        if (notes.size() < 8) notes.push_back(note);
    }
};

/// Monic characterization agreement: over all iso classes within the bounds
/// and all valid morphisms between them, per category C/E/B, (a) a
/// refutation witness is constructed exactly when the verdict is non-monic
/// and validates definitionally, (b) bounded definitional search (test
/// spaces within the test bounds) finds a refuting parallel pair iff the
/// verdict is non-monic.
SuiteReport characterization_agreement(const Alphabet& alphabet, std::size_t max_objects,
                                       std::size_t max_attributes, std::size_t test_objects,
                                       std::size_t test_attributes, const Budget& budget = {});

/// Component determination sweep: for all parallel morphism pairs within the
/// bounds, (1) extensional source: equal forward implies equal backward,
/// (2) separable target: equal backward implies equal forward,
/// (3) biextensional endpoints: the components determine each other.
SuiteReport determination_sweep(const Alphabet& alphabet, std::size_t max_objects,
                                std::size_t max_attributes, const Budget& budget = {});

/// Seeded random extensional chains: colimit extensional, injections satisfy
/// the cocone law, and against every enumerated extensional apex within the
/// apex bounds the mediating morphism to every cocone exists and is unique
/// by enumeration.
SuiteReport mediator_sweep(std::uint64_t seed, std::size_t runs, std::size_t max_length,
                           std::size_t max_objects, std::size_t max_attributes,
                           std::size_t apex_objects, std::size_t apex_attributes,
                           const Budget& budget = {});

/// Seeded random biextensional chains: the colimit is biextensional.
SuiteReport biextensional_colimit_sweep(std::uint64_t seed, std::size_t runs,
                                        std::size_t max_length, std::size_t max_objects,
                                        std::size_t max_attributes, const Budget& budget = {});

/// Every monic-iC cospan triple over the strongly finite catalog within the
/// bounds amalgamates: square commutes, apex strongly finite and
/// extensional, both legs monic in iC. Subsamples with the seed when the
/// triple count exceeds max_triples (never below 10000).
SuiteReport amalgamation_sweep(const Alphabet& alphabet, std::size_t max_objects,
                               std::size_t max_attributes, std::size_t max_triples,
                               std::uint64_t seed, const Budget& budget = {});

/// parse(emit(space)) == space, text and JSON, over the full enumeration
/// within the bounds.
SuiteReport roundtrip_sweep(const Alphabet& alphabet, std::size_t max_objects,
                            std::size_t max_attributes, const Budget& budget = {});

}  // namespace suites
}  // namespace chu
