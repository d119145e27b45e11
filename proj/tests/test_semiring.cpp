#include "support.hpp"

#include <doctest.h>

using namespace exsys;
using namespace exsys::testing;

TEST_SUITE("semiring") {

TEST_CASE("pair_add examples") {
    CHECK(pair_add(P<Nat>("1", "0"), P<Nat>("0", "1")) == P<Nat>("1", "1"));
    CHECK(pair_add(P<Nat>("2", "0"), P<Nat>("3", "1")) == P<Nat>("5", "1"));
    CHECK(pair_add(P<MaxPlus>("-inf", "0"), P<MaxPlus>("0", "-inf")) == P<MaxPlus>("0", "0"));
}

TEST_CASE("pair_mul examples") {
    const auto b = P<Nat>("4", "7");
    CHECK(pair_mul(P<Nat>("1", "0"), b) == b);
    CHECK(pair_mul(P<Nat>("0", "1"), P<Nat>("0", "1")) == P<Nat>("1", "0"));
    CHECK(pair_mul(P<Nat>("2", "1"), P<Nat>("3", "2")) == P<Nat>("8", "7"));
}

TEST_CASE("pair_surpasses examples") {
    CHECK(pair_surpasses(P<Nat>("1", "0"), P<Nat>("3", "2")));
    CHECK_FALSE(pair_surpasses(P<Nat>("1", "0"), P<Nat>("3", "1")));
    CHECK(pair_surpasses(P<Nat>("4", "2"), P<Nat>("4", "2")));
    // max-plus: (1,-inf) ⪯ (3,3) with c = 3, but (3,-inf) ⪯ (1,1) fails
    CHECK(pair_surpasses(P<MaxPlus>("1", "-inf"), P<MaxPlus>("3", "3")));
    CHECK_FALSE(pair_surpasses(P<MaxPlus>("3", "-inf"), P<MaxPlus>("1", "1")));
    CHECK(pair_surpasses(P<MaxPlus>("3", "1"), P<MaxPlus>("3", "2")));  // c = 2
    CHECK(pair_surpasses(P<MaxPlus>("3", "1"), P<MaxPlus>("3", "3")));
}

TEST_CASE("solve_add examples") {
    CHECK(Nat::solve_add(2, 5) == std::optional<Nat::value_type>(3));
    CHECK_FALSE(QPlus::solve_add(QPlus::parse("1/2"), QPlus::parse("1/3")).has_value());
    auto c = MaxPlus::solve_add(MaxPlus::parse("3"), MaxPlus::parse("3"));
    REQUIRE(c.has_value());
    CHECK(MaxPlus::eq(*c, MaxPlus::parse("3")));
    CHECK_FALSE(MaxPlus::solve_add(MaxPlus::parse("4"), MaxPlus::parse("3")).has_value());
}

TEST_CASE("parsing and formatting") {
    CHECK(QPlus::format(QPlus::parse("2/4")) == "1/2");
    CHECK(MaxPlus::format(MaxPlus::parse("-inf")) == "-inf");
    CHECK(MaxPlus::format(MaxPlus::parse("-3")) == "-3");
    CHECK_THROWS_AS(Nat::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(QPlus::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Nat::parse("abc"), std::invalid_argument);
    CHECK(format_pair(P<Nat>("2", "1")) == "[2,1]");
    CHECK(builtin_semirings().size() == 3);
    CHECK_THROWS_AS(with_semiring("complex", [](auto) { return 0; }), std::invalid_argument);
}

TEST_CASE("tangible part") {
    CHECK(tangible_part(P<Nat>("5", "2")) == P<Nat>("3", "0"));
    CHECK(tangible_part(P<Nat>("2", "5")) == P<Nat>("0", "3"));
    CHECK(tangible_part(P<Nat>("2", "2")) == Pair<Nat>::zero());
    CHECK(tangible_part(P<MaxPlus>("5", "2")) == P<MaxPlus>("5", "-inf"));
    CHECK(cancel_balanced(P<Nat>("5", "2")) == P<Nat>("3", "0"));
}

TEST_CASE_TEMPLATE("semiring axioms on random samples", S, Nat, QPlus, MaxPlus) {
    for (int t = 0; t < 10000; ++t) {
        auto a = random_scalar<S>(), b = random_scalar<S>(), c = random_scalar<S>();
        REQUIRE(S::eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c))));
        REQUIRE(S::eq(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c))));
        REQUIRE(S::eq(S::add(a, b), S::add(b, a)));
        REQUIRE(S::eq(S::mul(a, b), S::mul(b, a)));
        REQUIRE(S::eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c))));
        REQUIRE(S::eq(S::mul(a, S::zero()), S::zero()));
        REQUIRE(S::eq(S::add(a, S::zero()), a));
        REQUIRE(S::eq(S::mul(a, S::one()), a));
        if (auto d = S::solve_add(a, b)) REQUIRE(S::eq(S::add(a, *d), b));
    }
}

TEST_CASE_TEMPLATE("pair multiplication laws", S, Nat, QPlus, MaxPlus) {
    for (int t = 0; t < 10000; ++t) {
        auto p = random_pair<S>(), q = random_pair<S>(), r = random_pair<S>();
        REQUIRE(pair_mul(pair_mul(p, q), r) == pair_mul(p, pair_mul(q, r)));
        REQUIRE(pair_mul(p, q) == pair_mul(q, p));
        REQUIRE(pair_mul(Pair<S>::one(), p) == p);
        REQUIRE(pair_negate(pair_mul(p, q)) == pair_mul(pair_negate(p), q));
        REQUIRE(pair_negate(pair_mul(p, q)) == pair_mul(p, pair_negate(q)));
        REQUIRE(pair_mul(p, pair_add(q, r)) == pair_add(pair_mul(p, q), pair_mul(p, r)));
    }
}

TEST_CASE_TEMPLATE("surpassing relation laws on pairs", S, Nat, QPlus, MaxPlus) {
    for (int t = 0; t < 10000; ++t) {
        auto p = random_pair<S>(), c = random_scalar<S>(), c2 = random_scalar<S>();
        auto q = pair_add(p, Pair<S>::balanced(c));
        auto r = pair_add(q, Pair<S>::balanced(c2));
        auto p2 = random_pair<S>();
        auto q2 = pair_add(p2, Pair<S>::balanced(random_scalar<S>()));
        auto m = random_pair<S>();
        REQUIRE(pair_surpasses(p, p));
        REQUIRE(pair_surpasses(p, q));
        REQUIRE(pair_surpasses(p, r));
        REQUIRE(pair_surpasses(pair_add(p, p2), pair_add(q, q2)));
        REQUIRE(pair_surpasses(pair_mul(m, p), pair_mul(m, q)));
        REQUIRE(pair_surpasses(pair_negate(p), pair_negate(q)));
        // transitivity against arbitrary triples
        auto x = random_pair<S>(), y = random_pair<S>(), z = random_pair<S>();
        if (pair_surpasses(x, y) && pair_surpasses(y, z)) REQUIRE(pair_surpasses(x, z));
        if (pair_surpasses(x, y) && pair_surpasses(y, x)) REQUIRE(x == y);
    }
}

TEST_CASE_TEMPLATE("unique negation on tangibles", S, Nat, QPlus, MaxPlus) {
    for (int t = 0; t < 10000; ++t) {
        auto a = random_tangible<S>(), b = random_tangible<S>();
        if (pair_surpasses(Pair<S>::zero(), pair_add(a, b))) REQUIRE(b == pair_negate(a));
        if (pair_surpasses(a, b)) REQUIRE(a == b);
    }
    // two positive tangibles never sum to a quasi-zero
    for (int t = 0; t < 1000; ++t) {
        auto a = Pair<S>::tangible(random_nonzero_scalar<S>());
        auto b = Pair<S>::tangible(random_nonzero_scalar<S>());
        REQUIRE_FALSE(pair_surpasses(Pair<S>::zero(), pair_add(a, b)));
    }
}

}  // TEST_SUITE
