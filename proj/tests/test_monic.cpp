#include "doctest.h"

#include "chu/monic.hpp"

using namespace chu;

namespace {
Space make(std::vector<std::string> objs, std::vector<std::string> attrs,
           std::vector<Symbol> matrix) {
    return Space(Alphabet::binary(), std::move(objs), std::move(attrs), std::move(matrix));
}
}  // namespace

TEST_CASE("injective forward without surjective backward: monic in E and B only") {
    Space c = make({"a"}, {"x1", "x2"}, {0, 1});
    Space c2 = make({"b"}, {"y"}, {0});
    Morphism m{c, c2, {0}, {0}};
    REQUIRE(validate(m));

    MonicVerdict in_c = is_monic(m, Category::C);
    CHECK(!in_c.monic);
    CHECK(in_c.forward_injective);
    CHECK(!in_c.backward_surjective);
    REQUIRE(in_c.witness);
    CHECK(witness_refutes(m, Category::C, *in_c.witness));
    // The backward witness duplicates the non-image attribute.
    CHECK(in_c.witness->test_space.attribute_count() == 3);

    CHECK(is_monic(m, Category::E).monic);
    CHECK(is_monic(m, Category::B).monic);
    CHECK(!is_monic(m, Category::Separable).monic);
}

TEST_CASE("non-injective forward yields the two-point witness") {
    Space s = make({"a", "b"}, {"x"}, {0, 0});
    Space t = make({"p"}, {"y"}, {0});
    Morphism m{s, t, {0, 0}, {0}};
    REQUIRE(validate(m));
    MonicVerdict v = is_monic(m, Category::C);
    CHECK(!v.monic);
    REQUIRE(v.witness);
    CHECK(v.witness->test_space.object_count() == 1);
    CHECK(v.witness->test_space.attribute_count() == 2);  // one column per symbol
    CHECK(witness_refutes(m, Category::C, *v.witness));
    CHECK(v.witness->first.forward != v.witness->second.forward);
}

TEST_CASE("category membership is enforced") {
    Space dup = make({"a", "b"}, {"x", "y"}, {0, 0, 1, 1});  // not extensional
    Morphism id = identity(dup);
    CHECK_THROWS_AS(is_monic(id, Category::E), Error);
    CHECK(is_monic(id, Category::C).monic);
}

TEST_CASE("witness checker rejects tampered witnesses") {
    Space c = make({"a"}, {"x1", "x2"}, {0, 1});
    Space c2 = make({"b"}, {"y"}, {0});
    Morphism m{c, c2, {0}, {0}};
    MonicVerdict v = is_monic(m, Category::C);
    REQUIRE(v.witness);
    RefutationWitness broken = *v.witness;
    broken.second = broken.first;  // members must differ
    CHECK(!witness_refutes(m, Category::C, broken));
}

TEST_CASE("definitional search agrees on both verdict polarities") {
    Space c = make({"a"}, {"x1", "x2"}, {0, 1});
    Space c2 = make({"b"}, {"y"}, {0});
    Morphism not_monic{c, c2, {0}, {0}};
    auto found = definitional_refutation(not_monic, Category::C, 2, 3);
    REQUIRE(found);
    CHECK(witness_refutes(not_monic, Category::C, *found));
    CHECK(!definitional_refutation(not_monic, Category::E, 2, 3));

    Morphism monic_id = identity(c);
    CHECK(!definitional_refutation(monic_id, Category::C, 2, 3));
}

TEST_CASE("surjective forward forces injective backward on extensional targets") {
    Space s = make({"a", "b"}, {"x", "y"}, {0, 1, 1, 0});
    Morphism id = identity(s);
    auto check = check_surjective_forward_implies_injective_backward(id);
    CHECK(check.applied);
    CHECK(check.holds);

    Space t = make({"p"}, {"u"}, {0});
    Space src = make({"a"}, {"x", "y"}, {0, 0});
    Morphism m{src, t, {0}, {0}};
    REQUIRE(validate(m));
    auto partial = check_surjective_forward_implies_injective_backward(m);
    CHECK(partial.applied);   // forward is onto
    CHECK(partial.holds);     // single target attribute: vacuous

    Space dup = make({"a", "b"}, {"x", "y"}, {0, 0, 1, 1});
    CHECK_THROWS_AS(check_surjective_forward_implies_injective_backward(identity(dup)), Error);
}

TEST_CASE("single-symbol alphabets are flagged") {
    Alphabet unary({"0"});
    Space s(unary, {"a"}, {"x"}, {0});
    MonicVerdict v = is_monic(identity(s), Category::C);
    CHECK(!v.alphabet_assumption_met);
}
