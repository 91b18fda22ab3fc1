#include "doctest.h"

#include "chu/chain.hpp"

using namespace chu;

namespace {

Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}

// a-row stays (0,0); the link folds both stage-2 attributes onto x.
Chain two_stage() {
    Space s1 = make({"a"}, {"x"}, {0});
    Space s2 = make({"a", "b"}, {"x", "y"}, {0, 0, 0, 1});
    Morphism link{s1, s2, {0}, {0, 0}};
    return Chain::explicit_chain({s1, s2}, {link}, ChainCategory::iC);
}

}  // namespace

TEST_CASE("explicit chain accessors") {
    Chain ch = two_stage();
    CHECK(ch.is_explicit());
    CHECK(ch.length() == 2);
    CHECK(ch.claim() == ChainCategory::iC);
    CHECK(ch.rule().empty());
    CHECK(ch.stage(1).object_count() == 2);
    CHECK(validate(ch.link(0)));
    CHECK_NOTHROW(validate(ch, 2));
}

TEST_CASE("validation rejects broken claims") {
    Space s1 = make({"a"}, {"x"}, {0});
    Space dup = make({"a", "b"}, {"x", "y"}, {0, 0, 1, 1});  // not extensional
    Morphism link{s1, dup, {0}, {0, 0}};
    REQUIRE(validate(link));
    Chain bad_membership = Chain::explicit_chain({s1, dup}, {link}, ChainCategory::iE);
    CHECK_THROWS_AS(validate(bad_membership, 2), Error);

    Space s2 = make({"a", "b"}, {"x"}, {0, 0});
    Morphism squash{s2, s1, {0, 0}, {0}};  // forward not injective
    REQUIRE(validate(squash));
    Chain not_monic = Chain::explicit_chain({s2, s1}, {squash}, ChainCategory::iC);
    CHECK_THROWS_AS(validate(not_monic, 2), Error);
}

TEST_CASE("colimit of an explicit chain is the last stage with threaded attributes") {
    Chain ch = two_stage();
    ColimitResult res = colimit(ch, 2);
    CHECK(res.exact);
    CHECK(res.depth == 2);
    CHECK(res.space.object_count() == 2);
    CHECK(res.space.attribute_count() == 2);
    CHECK(res.space.attributes() == std::vector<std::string>{"x|x", "x|y"});
    CHECK(res.threads.size() == 2);
    CHECK(res.threads[0] == std::vector<std::size_t>{0, 0});
    CHECK(res.threads[1] == std::vector<std::size_t>{0, 1});
    CHECK(validate_cocone(ch, res.space, res.injections, 2));
    CHECK(check_extensionality_preserved(ch, res));
    for (const Morphism& psi : res.injections) CHECK(validate(psi));
}

TEST_CASE("depth clamps to the explicit length") {
    ColimitResult res = colimit(two_stage(), 10);
    CHECK(res.depth == 2);
    CHECK(res.exact);
}

TEST_CASE("cocone law distinguishes real cocones") {
    Chain ch = two_stage();
    ColimitResult res = colimit(ch, 2);
    std::vector<Morphism> legs = res.injections;
    CHECK(validate_cocone(ch, res.space, legs, 2));
    legs[0] = Morphism{ch.stage(0), res.space, {1}, legs[0].backward};  // a lands on the wrong row
    if (validate(legs[0]))
        CHECK(!validate_cocone(ch, res.space, legs, 2));
    else
        CHECK_THROWS_AS(validate_cocone(ch, res.space, legs, 2), Error);
}

TEST_CASE("the identity cocone on the last stage is mediated") {
    Chain ch = two_stage();
    ColimitResult res = colimit(ch, 2);
    std::vector<Morphism> legs = {ch.link(0), identity(ch.stage(1))};
    auto med = mediate(ch, res, ch.stage(1), legs);
    REQUIRE(med);
    CHECK(validate(*med));
    // Mediator composed with the top injection reproduces the top leg.
    Morphism via = compose(*med, res.injections[1]);
    CHECK(via.forward == legs[1].forward);
    CHECK(via.backward == legs[1].backward);
    CHECK_THROWS_AS(mediate(ch, res, ch.stage(0), legs), Error);  // not a cocone
}

TEST_CASE("generated chains materialize lazily and respect windows") {
    auto stage = [](std::size_t i) -> Space {
        if (i >= 3) throw Error(Errc::WindowExhausted, "window");
        std::vector<std::string> objs;
        for (std::size_t k = 0; k <= i; ++k) objs.push_back("a" + std::to_string(k + 1));
        return Space(Alphabet::binary(), objs, {"x"}, std::vector<Symbol>(objs.size(), 0));
    };
    auto link = [&](std::size_t i) -> Morphism {
        std::vector<std::size_t> fwd(i + 1);
        for (std::size_t k = 0; k <= i; ++k) fwd[k] = k;
        return Morphism{stage(i), stage(i + 1), fwd, {0}};
    };
    Chain gen = Chain::generated(stage, link, ChainCategory::iC, true, "steps", 3);
    CHECK(!gen.is_explicit());
    CHECK(!gen.length());
    CHECK(gen.windowed());
    CHECK(gen.window() == 3);
    CHECK(gen.stage(2).object_count() == 3);
    CHECK_THROWS_AS(gen.stage(3), Error);
    ColimitResult res = colimit(gen, 3);
    CHECK(!res.exact);
    CHECK(res.space.object_count() == 3);
}

TEST_CASE("normalization threads labels through non-inclusion forwards") {
    Space s1 = make({"p"}, {"x"}, {1});
    Space s2 = make({"q", "r"}, {"x"}, {0, 1});
    Morphism link{s1, s2, {1}, {0}};  // p lands on r
    REQUIRE(validate(link));
    Chain ch = Chain::explicit_chain({s1, s2}, {link}, ChainCategory::iC);
    Chain incl = normalize_to_inclusions(ch);
    CHECK(incl.stage(0).objects() == std::vector<std::string>{"p"});
    CHECK(incl.stage(1).objects() == std::vector<std::string>{"q", "p"});
    CHECK(incl.link(0).forward == std::vector<std::size_t>{1});
    CHECK(incl.stage(1).at(1, 0) == 1);  // p keeps its row
}

TEST_CASE("thread materialization is budget guarded") {
    Budget tiny;
    tiny.max_threads = 1;
    CHECK_THROWS_AS(colimit(two_stage(), 2, tiny), Error);
}
