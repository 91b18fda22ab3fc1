#include "doctest.h"

#include "chu/canonical.hpp"

using namespace chu;

namespace {
Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}
}  // namespace

TEST_CASE("canonical form is idempotent and permutation invariant") {
    Space s = make({"p", "q"}, {"u", "v", "w"}, {1, 0, 1, 0, 1, 1});
    Space permuted = make({"q", "p"}, {"w", "v", "u"}, {1, 1, 0, 1, 0, 1});
    Space c = canonical_form(s);
    CHECK(canonical_form(permuted).matrix() == c.matrix());
    CHECK(canonical_form(c) == c);
    CHECK(c.objects() == std::vector<std::string>{"a1", "a2"});
    CHECK(c.attributes() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("isomorphism search finds a permutation pair") {
    Space s = make({"p", "q"}, {"u", "v"}, {0, 1, 1, 0});
    Space t = make({"r", "s"}, {"m", "n"}, {1, 0, 0, 1});
    auto iso = find_isomorphism(s, t);
    REQUIRE(iso);
    CHECK(validate(*iso));
    CHECK(forward_injective(*iso));
    CHECK(forward_surjective(*iso));
    CHECK(backward_injective(*iso));
    CHECK(backward_surjective(*iso));
}

TEST_CASE("isomorphism search fails across iso classes") {
    Space s = make({"p"}, {"u", "v"}, {0, 1});
    Space t = make({"p"}, {"u", "v"}, {0, 0});
    CHECK(!find_isomorphism(s, t));
    CHECK(canonical_form(s).matrix() != canonical_form(t).matrix());
}

TEST_CASE("isomorphism needs matching shapes and alphabets") {
    Space s = make({"p"}, {"u"}, {0});
    Space wide = make({"p"}, {"u", "v"}, {0, 1});
    CHECK(!find_isomorphism(s, wide));
    Space other(Alphabet({"x", "y", "z"}), {"p"}, {"u"}, {0});
    CHECK_THROWS_AS(find_isomorphism(s, other), Error);
}

TEST_CASE("canonical forms agree exactly on isomorphic pairs") {
    // Spot-check the characterizing property on a small family.
    std::vector<Space> family = {
        make({"a", "b"}, {"x", "y"}, {0, 1, 1, 0}),
        make({"a", "b"}, {"x", "y"}, {1, 0, 0, 1}),
        make({"a", "b"}, {"x", "y"}, {0, 1, 1, 1}),
        make({"a", "b"}, {"x", "y"}, {0, 0, 1, 1}),
    };
    for (const Space& s : family)
        for (const Space& t : family) {
            bool same = canonical_form(s).matrix() == canonical_form(t).matrix();
            CHECK(same == find_isomorphism(s, t).has_value());
        }
}
