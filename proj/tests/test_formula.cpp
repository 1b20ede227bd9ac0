#include "doctest.h"

#include <random>

#include "bimodal/formula.hpp"
#include "support.hpp"

using namespace bimodal;

TEST_SUITE_BEGIN("formula");

TEST_CASE("parse builds the expected ASTs") {
    auto f = parse("x0");
    CHECK(f->kind == Kind::Var);
    CHECK(f->var == "0");

    f = parse("(x1 & ~x1)");
    REQUIRE(f->kind == Kind::And);
    CHECK(f->left->kind == Kind::Var);
    CHECK(f->left->var == "1");
    REQUIRE(f->right->kind == Kind::Neg);
    CHECK(f->right->left->var == "1");

    // Diamond is sugar for ~[]~.
    f = parse("<>x0");
    REQUIRE(f->kind == Kind::Neg);
    REQUIRE(f->left->kind == Kind::Box);
    REQUIRE(f->left->left->kind == Kind::Neg);
    CHECK(f->left->left->left->var == "0");
}

TEST_CASE("parse rejects malformed input with positions") {
    CHECK_THROWS_AS(parse("x01"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("(x0 & x1"), ParseError);
    CHECK_THROWS_AS(parse("(x0 ? x1)"), ParseError);
    CHECK_THROWS_AS(parse("y0"), ParseError);
    CHECK_THROWS_AS(parse("x"), ParseError);
    CHECK_THROWS_AS(parse("(x0)"), ParseError);
    CHECK_THROWS_AS(parse("x0 x1"), ParseError);
    try {
        parse("x01");
    } catch (const ParseError& e) {
        CHECK(e.position == 1);
    }
}

TEST_CASE("desugaring matches the defining abbreviations") {
    CHECK(equal(parse("Lx0"), parse("~K~x0")));
    CHECK(equal(parse("<>x0"), parse("~[]~x0")));
    CHECK(equal(parse("(x0 | x1)"), parse("~(~x0 & ~x1)")));
    CHECK(equal(parse("(x0 -> x1)"), parse("(~x0 | x1)")));
    CHECK(equal(parse("(x0 <-> x1)"), parse("((x0 -> x1) & (x1 -> x0))")));
}

TEST_CASE("render is canonical and binary-numeral exact") {
    CHECK(render(Formula::variable(0ULL)) == "x0");
    CHECK(render(parse("<>x0")) == "~[]~x0");
    CHECK(render(Formula::conj(Formula::variable(1ULL), Formula::variable(2ULL))) ==
          "(x1 & x10)");
    CHECK(parse("x110")->var == "110");
}

TEST_CASE("round trip parse(render(f)) = f on random formulas") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 500; ++i) {
        auto f = support::random_formula(rng, 9, 3);
        CHECK(equal(parse(render(f)), f));
    }
}

TEST_CASE("lengths counts symbols and simplified symbols") {
    auto check = [](const char* text, std::size_t n, std::size_t ell) {
        auto l = lengths(parse(text));
        CAPTURE(text);
        CHECK(l.symbols == n);
        CHECK(l.simplified == ell);
    };
    check("x0", 2, 1);
    check("[]x0", 3, 2);
    check("Kx0", 3, 2);
    // "(x1 & ~x1)" over the 9-letter alphabet: ( x 1 & ~ x 1 ) = 8
    // symbols, 6 of them non-digit.
    check("(x1 & ~x1)", 8, 6);
    check("x110", 4, 1);
}

TEST_CASE("subformula table order, dedup and flags") {
    auto t = subformulas(parse("x0"));
    CHECK(t.size() == 1);

    t = subformulas(parse("(x0 & ~x0)"));
    REQUIRE(t.size() == 3);
    CHECK(render(t.formulas[0]) == "x0");
    CHECK(render(t.formulas[1]) == "~x0");
    CHECK(render(t.formulas[2]) == "(x0 & ~x0)");
    CHECK(t.child0[2] == 0);
    CHECK(t.child1[2] == 1);
    CHECK(t.child0[1] == 0);

    t = subformulas(parse("[]x0"));
    REQUIRE(t.size() == 2);
    CHECK(t.mask_box.test(1));
    CHECK_FALSE(t.mask_box.test(0));
    CHECK(t.mask_at.test(0));
}

TEST_CASE("subformula properties on random formulas") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto f = support::random_formula(rng, 8, 2);
        auto t = subformulas(f);
        // Root last, a <= n.
        CHECK(equal(t.formulas.back(), f));
        CHECK(t.size() <= lengths(f).symbols);
        for (std::size_t k = 0; k < t.size(); ++k) {
            // Children resolvable with smaller indices; closure under sf.
            if (t.child0[k] >= 0) CHECK(t.child0[k] < static_cast<int>(k));
            if (t.child1[k] >= 0) CHECK(t.child1[k] < static_cast<int>(k));
            CHECK(t.index_of(t.formulas[k]) == static_cast<int>(k));
        }
    }
}

TEST_SUITE_END();
