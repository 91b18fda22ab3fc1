#include "doctest.h"

#include "chu/gallery.hpp"

using namespace chu;

namespace {
Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}
}  // namespace

TEST_CASE("order chain stages are the linear orders") {
    Chain ch = gallery::order_chain(4);
    CHECK(!ch.is_explicit());
    CHECK(ch.windowed());
    CHECK(ch.rule() == "order-chain");
    CHECK_NOTHROW(validate(ch, 4));
    const Space& s3 = ch.stage(2);
    CHECK(s3.object_count() == 3);
    CHECK(s3.attribute_count() == 3);
    CHECK(s3.at(0, 2) == 1);  // 1 <= 3
    CHECK(s3.at(2, 0) == 0);  // 3 <= 1 fails
    CHECK_THROWS_AS(ch.stage(4), Error);
}

TEST_CASE("order chain colimit has one thread per window column") {
    for (std::size_t w : {3, 4, 5}) {
        ColimitResult res = colimit(gallery::order_chain(w), w);
        CHECK(res.space.attribute_count() == w);
        CHECK(res.space.object_count() == w);
        CHECK(is_extensional(res.space));
    }
}

TEST_CASE("divisibility chain threads die as the window shrinks") {
    const std::size_t w = 6;
    Chain ch = gallery::divisibility_chain(w);
    CHECK_NOTHROW(validate(ch, w));
    for (std::size_t i = 0; i < w; ++i) {
        CHECK(ch.stage(i).object_count() == w);
        CHECK(ch.stage(i).attribute_count() == w - i);
    }
    for (std::size_t depth : {2u, 4u, 6u})
        CHECK(colimit(ch, depth).space.attribute_count() == w - depth + 1);
    // Stage 1 entry: r(a, x) = 1 iff x mod a = 0.
    const Space& s1 = ch.stage(0);
    CHECK(s1.at(1, 1) == 1);  // a=2 divides x=2
    CHECK(s1.at(1, 0) == 0);  // a=2 does not divide x=1
    CHECK(s1.at(0, 3) == 1);  // a=1 divides everything
}

TEST_CASE("subset chain recovers its generating sets in the columns") {
    Chain ch = gallery::subset_chain({{"a"}, {"a", "b"}, {"a", "b", "c"}});
    CHECK_NOTHROW(validate(ch, 3));
    const Space& top = ch.stage(2);
    CHECK(top.objects() == std::vector<std::string>{"a", "b", "c"});
    CHECK(top.column(0) == std::vector<Symbol>{1, 0, 0});
    CHECK(top.column(2) == std::vector<Symbol>{1, 1, 1});
    CHECK_THROWS_AS(gallery::subset_chain({{"a", "b"}, {"a"}}), Error);
    CHECK_THROWS_AS(gallery::subset_chain({{"a"}, {"a"}}), Error);
}

TEST_CASE("discrete space realizes every function once") {
    Space d = gallery::discrete_space(Alphabet::binary(), 2);
    CHECK(d.object_count() == 2);
    CHECK(d.attribute_count() == 4);
    CHECK(is_discrete(d).discrete);
    CHECK(is_extensional(d));
    Budget tiny;
    tiny.max_functions = 2;
    CHECK_THROWS_AS(gallery::discrete_space(Alphabet::binary(), 2, tiny), Error);
}

TEST_CASE("repeated column demo is a cocone with an alternating probe") {
    Space probe = make({"s"}, {"y1", "y2"}, {0, 0});
    gallery::FactorizationDemo demo = gallery::repeated_column_demo(probe, 0, 1, 5);
    CHECK_NOTHROW(validate(demo.chain, demo.window));
    CHECK(validate(demo.phi));
    CHECK(demo.phi.source == probe);
    CHECK(validate_cocone(demo.chain, demo.apex, demo.legs, demo.window));
    CHECK(gallery::repeated_column_demo(probe, 0, 1, 5).window == 5);
    Space distinct = make({"s"}, {"y1", "y2"}, {0, 1});
    CHECK_THROWS_AS(gallery::repeated_column_demo(distinct, 0, 1, 5), Error);
}

TEST_CASE("nondiscrete demo wraps an extensional non-discrete probe") {
    Space probe = make({"p", "q"}, {"c"}, {1, 1});  // extensional, misses e.g. (0,0)
    gallery::FactorizationDemo demo = gallery::nondiscrete_demo(probe, 4);
    CHECK_NOTHROW(validate(demo.chain, demo.window));
    CHECK(validate(demo.phi));
    CHECK(validate_cocone(demo.chain, demo.apex, demo.legs, demo.window));
    for (std::size_t i = 0; i < demo.window; ++i) CHECK(is_extensional(demo.chain.stage(i)));
    Space bad = make({"p", "q"}, {"c", "d"}, {1, 1, 1, 1});
    CHECK_THROWS_AS(gallery::nondiscrete_demo(bad, 4), Error);
}

TEST_CASE("biextensional demo keeps every stage separable") {
    Space probe = make({"p", "q"}, {"c", "d"}, {1, 0, 1, 1});  // biextensional, not discrete
    gallery::FactorizationDemo demo = gallery::nondiscrete_demo_biextensional(probe, 5);
    CHECK_NOTHROW(validate(demo.chain, demo.window));
    for (std::size_t i = 0; i < demo.window; ++i)
        CHECK(is_biextensional(demo.chain.stage(i)));
    CHECK(validate(demo.phi));
    CHECK(validate_cocone(demo.chain, demo.apex, demo.legs, demo.window));
    CHECK_THROWS_AS(gallery::nondiscrete_demo_biextensional(probe, 3), Error);  // window too small
}

TEST_CASE("the obstructed direction has no commuting monic") {
    gallery::NoColimitReport r = gallery::demo_no_colimit_in_iC(4);
    CHECK(r.cocones_valid);
    CHECK(r.commuting_count > 0);
    CHECK(r.commuting_monic_count == 0);
    CHECK(r.obstruction_confirmed);
    CHECK(r.ie_mediator_exists);
}

TEST_CASE("rule chains are built by id") {
    Chain oc = gallery::make_rule_chain("order-chain", {{"window", "3"}});
    CHECK(oc.stage(2).object_count() == 3);
    Chain sc = gallery::make_rule_chain("subset-chain", {{"sets", "a;a,b"}});
    CHECK(sc.stage(1).objects() == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(gallery::make_rule_chain("nope", {}), Error);
    CHECK_THROWS_AS(gallery::make_rule_chain("order-chain", {}), Error);
}
