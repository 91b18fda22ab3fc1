#include "doctest.h"

#include "chu/canonical.hpp"
#include "chu/finobj.hpp"
#include "chu/gallery.hpp"
#include "chu/morphism.hpp"

using namespace chu;

namespace {
Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}
}  // namespace

TEST_CASE("one point with both symbol columns is finite in iC and iE") {
    Space f = make({"*"}, {"x0", "x1"}, {0, 1});
    CHECK(classify_iC(f));
    CHECK(classify_iE(f));
    CHECK(classify_iB(f));
}

TEST_CASE("a repeated-column point is not finite in iC") {
    Space f = make({"*"}, {"1", "2"}, {0, 0});
    CHECK(!classify_iC(f));
    CHECK_THROWS_AS(classify_iE(f), Error);
}

TEST_CASE("two points over one constant column: finite in iC but not iE") {
    Space b = make({"1", "2"}, {"c"}, {1, 1});
    CHECK(classify_iC(b));
    CHECK(!classify_iE(b));
    auto d = is_discrete(b);
    CHECK(d.missing_function == std::vector<Symbol>{0, 0});
}

TEST_CASE("a single attribute-free point is finite in iB through the special case") {
    Space a = make({"a"}, {}, {});
    CHECK(classify_iC(a));
    CHECK(!classify_iE(a));  // neither symbol function is realized
    CHECK(classify_iB(a));
}

TEST_CASE("objectless spaces") {
    Space one = make({}, {"x"}, {});
    CHECK(classify_iC(one));
    CHECK(classify_iE(one));  // the empty-domain function is realized
    Space none = make({}, {}, {});
    CHECK(!classify_iE(none));
}

TEST_CASE("attribute bound") {
    Space discrete = gallery::discrete_space(Alphabet::binary(), 2);
    CHECK(attribute_bound(discrete) == true);
    CHECK(discrete.attribute_count() == 4);  // bound met with equality
    Space c = make({"a"}, {"x1", "x2"}, {0, 1});
    CHECK(attribute_bound(c) == true);
    Space rep = make({"*"}, {"1", "2"}, {0, 0});
    CHECK(!attribute_bound(rep).has_value());
}

TEST_CASE("classification report is coherent") {
    Space b = make({"1", "2"}, {"c"}, {1, 1});
    FinitenessReport r = classify(b);
    CHECK(r.extensional);
    CHECK(!r.separable);
    CHECK(r.finite_iC);
    REQUIRE(r.finite_iE.has_value());
    CHECK(!*r.finite_iE);
    CHECK(!r.finite_iB.has_value());  // not biextensional
    CHECK(r.attribute_bound_holds == true);
}

TEST_CASE("equal-size discrete extensional spaces are isomorphic") {
    Space d = gallery::discrete_space(Alphabet::binary(), 2);
    // Same class, different presentation: permute rows and columns.
    std::vector<Symbol> m(d.matrix());
    std::vector<Symbol> perm(m.size());
    for (std::size_t x = 0; x < 4; ++x) {
        perm[0 * 4 + x] = m[1 * 4 + (3 - x)];
        perm[1 * 4 + x] = m[0 * 4 + (3 - x)];
    }
    Space e = make({"p", "q"}, {"k1", "k2", "k3", "k4"}, perm);
    REQUIRE(classify_iE(e));
    CHECK(find_isomorphism(d, e));
}

TEST_CASE("factorization succeeds for a finite probe") {
    Space probe = make({"p"}, {"u", "v"}, {0, 1});  // discrete, extensional
    auto demo = gallery::nondiscrete_demo(probe, 4);
    auto found = find_factorization(demo.chain, demo.legs, demo.phi, demo.window);
    REQUIRE(found);
    auto [i, psi] = *found;
    Morphism via = compose(demo.legs[i], psi);
    CHECK(via.forward == demo.phi.forward);
    CHECK(via.backward == demo.phi.backward);
}

TEST_CASE("factorization fails for a non-discrete probe") {
    Space probe = make({"p", "q"}, {"c"}, {1, 1});
    auto demo = gallery::nondiscrete_demo(probe, 4);
    CHECK(!find_factorization(demo.chain, demo.legs, demo.phi, demo.window));
}

TEST_CASE("factorization fails for a repeated-column probe") {
    Space probe = make({"s"}, {"y1", "y2"}, {1, 1});
    auto demo = gallery::repeated_column_demo(probe, 0, 1, 5);
    CHECK(!find_factorization(demo.chain, demo.legs, demo.phi, demo.window - 2));
}
