#include "doctest.h"

#include "chu/universal.hpp"

using namespace chu;

namespace {
Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}
}  // namespace

TEST_CASE("strong finiteness needs extensionality and an attribute") {
    CHECK(is_strongly_finite(make({"a"}, {"x"}, {0})));
    CHECK(!is_strongly_finite(make({"a"}, {}, {})));
    CHECK(!is_strongly_finite(make({"a"}, {"x", "y"}, {0, 0})));
}

TEST_CASE("amalgamation glues two extensions over a shared base") {
    Space base = make({"a"}, {"x"}, {0});
    Space left = make({"a", "b"}, {"x", "y"}, {0, 0, 0, 1});
    Space right = make({"a", "c"}, {"x"}, {0, 1});
    Morphism into_left{base, left, {0}, {0, 0}};
    Morphism into_right{base, right, {0}, {0}};

    AmalgamationSquare sq = amalgamate(base, into_left, into_right);
    CHECK(sq.apex.objects() == std::vector<std::string>{"a", "b", "c"});
    CHECK(sq.apex.attributes() == std::vector<std::string>{"(x,x)", "(y,x)"});
    CHECK(sq.apex.column(0) == std::vector<Symbol>{0, 0, 1});
    CHECK(sq.apex.column(1) == std::vector<Symbol>{0, 1, 1});
    CHECK(is_strongly_finite(sq.apex));

    for (const Morphism* leg : {&sq.from_left, &sq.from_right}) {
        CHECK(validate(*leg));
        CHECK(forward_injective(*leg));
        CHECK(backward_surjective(*leg));
    }
    Morphism via_l = compose(sq.from_left, into_left);
    Morphism via_r = compose(sq.from_right, into_right);
    CHECK(via_l.forward == via_r.forward);
    CHECK(via_l.backward == via_r.backward);
}

TEST_CASE("amalgamation rejects non-monic legs") {
    Space base = make({"a"}, {"x", "y"}, {0, 1});
    Space target = make({"b"}, {"u"}, {0});
    Morphism leg{base, target, {0}, {0}};  // backward not surjective
    REQUIRE(validate(leg));
    CHECK_THROWS_AS(amalgamate(base, leg, leg), Error);
}

TEST_CASE("apex reduction keeps a covering attribute subset") {
    Space base = make({"a", "b"}, {"x"}, {0, 0});
    Space left = make({"a", "b", "c"}, {"x1", "x2"}, {0, 0, 0, 0, 0, 1});
    Space right = make({"a", "b", "d"}, {"u1", "u2"}, {0, 0, 0, 0, 1, 0});
    Morphism into_left{base, left, {0, 1}, {0, 0}};
    Morphism into_right{base, right, {0, 1}, {0, 0}};

    AmalgamationSquare full = amalgamate(base, into_left, into_right);
    CHECK(full.apex.attribute_count() == 4);  // all compatible pairs
    AmalgamationSquare small = reduce_apex(full);
    CHECK(small.apex.attribute_count() == 3);
    CHECK(is_extensional(small.apex));
    for (const Morphism* leg : {&small.from_left, &small.from_right}) {
        CHECK(validate(*leg));
        CHECK(forward_injective(*leg));
        CHECK(backward_surjective(*leg));
    }
    Morphism via_l = compose(small.from_left, small.into_left);
    Morphism via_r = compose(small.from_right, small.into_right);
    CHECK(via_l.forward == via_r.forward);
    CHECK(via_l.backward == via_r.backward);
}

TEST_CASE("bifinite colimit rejects chains of the wrong shape") {
    Space s1 = make({"a"}, {"x"}, {0});
    Space s2 = make({"a", "b"}, {"x", "y"}, {0, 0, 0, 1});
    Morphism link{s1, s2, {0}, {0, 0}};
    Chain good = Chain::explicit_chain({s1, s2}, {link}, ChainCategory::iC);
    ColimitResult res = bifinite_from_chain(good, 2);
    CHECK(res.exact);
    CHECK(is_extensional(res.space));

    Space dup = make({"a"}, {"x", "y"}, {0, 0});  // not extensional
    Morphism to_s1{dup, s1, {0}, {0}};
    REQUIRE(validate(to_s1));
    Chain bad = Chain::explicit_chain({dup, s1}, {to_s1}, ChainCategory::iC);
    CHECK_THROWS_AS(bifinite_from_chain(bad, 2), Error);  // first stage not strongly finite

    Space wide = make({"a"}, {"x", "y"}, {0, 1});
    Space tall = make({"a", "b"}, {"u"}, {0, 0});
    Morphism non_surj{wide, tall, {0}, {0}};
    REQUIRE(validate(non_surj));
    Chain weak = Chain::explicit_chain({wide, tall}, {non_surj}, ChainCategory::iC);
    CHECK_THROWS_AS(bifinite_from_chain(weak, 2), Error);  // link backward misses y
}

TEST_CASE("the task-driven tower stays inside the category") {
    FraisseState st = fraisse_build(Alphabet::binary(), 2, 2, 25);
    CHECK(st.catalog.size() == 11);
    CHECK(st.stages.size() == 26);
    CHECK(st.log.size() == 25);
    CHECK_NOTHROW(validate(st.chain(), st.stages.size()));
    for (const Space& stage : st.stages)
        if (&stage != &st.stages.front()) CHECK(is_strongly_finite(stage));

    for (const FraisseResolution& res : st.log) {
        // The resolved square commutes: going up the tower agrees with going
        // through the catalog object.
        Morphism via_tower = compose(st.links[res.step - 1], res.e_top);
        Morphism via_g = compose(res.embed, res.g);
        CHECK(via_tower.forward == via_g.forward);
        CHECK(via_tower.backward == via_g.backward);
        CHECK(validate(res.embed));
        CHECK(forward_injective(res.embed));
        CHECK(backward_surjective(res.embed));
    }
}

TEST_CASE("algebroidal witnesses at the smallest bound") {
    AlgebroidalReport r = check_algebroidal_witnesses(Alphabet::binary(), 2, 2);
    CHECK(r.catalog_size == 11);
    CHECK(r.weakly_initial_ok);
    CHECK(r.chain_checks > 0);
    CHECK(r.chain_failures == 0);
    CHECK(r.max_morphism_count > 0);
}
