#include "doctest.h"

#include "chu/canonical.hpp"
#include "chu/enumerate.hpp"

using namespace chu;

// Class counts cross-checked against a raw-matrix enumeration with pairwise
// isomorphism dedup.
TEST_CASE("iso class counts over the binary alphabet") {
    Alphabet bin = Alphabet::binary();
    CHECK(enumerate_spaces(bin, 2, 2, SpaceFilter::All).size() == 20);
    CHECK(enumerate_spaces(bin, 2, 3, SpaceFilter::All).size() == 38);
    CHECK(enumerate_spaces(bin, 2, 2, SpaceFilter::Extensional).size() == 14);
    CHECK(enumerate_spaces(bin, 2, 2, SpaceFilter::Biextensional).size() == 10);
    CHECK(enumerate_spaces(bin, 2, 2, SpaceFilter::StronglyFinite).size() == 11);
    CHECK(enumerate_spaces(bin, 2, 3, SpaceFilter::StronglyFinite).size() == 14);
}

TEST_CASE("representatives are canonical, filtered, and pairwise distinct") {
    auto all = enumerate_spaces(Alphabet::binary(), 2, 2, SpaceFilter::Biextensional);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(satisfies(all[i], SpaceFilter::Biextensional));
        CHECK(canonical_form(all[i]) == all[i]);
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK(!find_isomorphism(all[i], all[j]));
    }
}

TEST_CASE("filters nest") {
    auto sf = enumerate_spaces(Alphabet::binary(), 2, 3, SpaceFilter::StronglyFinite);
    for (const Space& s : sf) {
        CHECK(satisfies(s, SpaceFilter::Extensional));
        CHECK(s.attribute_count() >= 1);
    }
}

TEST_CASE("streaming enumeration can stop early") {
    std::size_t seen = 0;
    bool complete = for_each_space(Alphabet::binary(), 2, 2, SpaceFilter::All,
                                   [&](const Space&) { return ++seen < 5; });
    CHECK(!complete);
    CHECK(seen == 5);
}

TEST_CASE("cell budget is enforced against the raw matrix count") {
    Budget tiny;
    tiny.max_raw_matrices = 8;  // the 2x2 cell alone scans 16 raw matrices
    CHECK_THROWS_AS(enumerate_spaces(Alphabet::binary(), 2, 2, SpaceFilter::All, tiny), Error);
}
