#include <doctest.h>

#include "testutil.hpp"
#include "weyl/expr.hpp"

using namespace weyl;

TEST_CASE("operator expressions") {
    CHECK(parse_operator("D^2 + x^3") == PolyDiffOp::d(2) + parse_operator("x*x*x"));
    CHECK(parse_operator("D*x - x*D") == parse_operator("1"));
    // multiplication is noncommutative left-to-right
    CHECK(parse_operator("D*x") == parse_operator("x*D + 1"));
    // ^ binds tighter than *
    CHECK(parse_operator("2*D^2") == parse_operator("D^2 + D^2"));
    CHECK(parse_operator("8*i*D").coeff(1) == MPoly::constant(GaussRat(Rat(0), Rat(8))));
}

TEST_CASE("the quartic of the worked example") {
    PolyDiffOp l4 = parse_operator("(D^2 + x^4 + 1)^2 + 8*i*D + 16*x^2");
    CHECK(l4.order() == 4);
    CHECK(is_standard_form(l4));
    CHECK(l4.coeff(2) == parse_poly("2*x^4 + 2", {"x"}));
    CHECK(l4.coeff(1) == parse_poly("8*x^3 + 8*i", {"x"}));
}

TEST_CASE("rational literals") {
    CHECK(parse_gaussrat("3/2") == GaussRat(Rat(3, 2)));
    CHECK(parse_gaussrat("1/2 + 3/4*i") == GaussRat(Rat(1, 2), Rat(3, 4)));
    CHECK(parse_gaussrat("-i") == -GaussRat::i());
    CHECK(parse_gaussrat("(2 - i)*(2 + i)") == GaussRat(5));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_operator("D^2 +\n x $");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.code == Err::SyntaxError);
        CHECK(std::string(e.what()).find("2:4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_operator("D^(1/2)"), Error);
    try {
        parse_operator("D^3/2");
        FAIL("expected an exponent error");
    } catch (const Error& e) {
        CHECK(e.code == Err::NonIntegerExponent);
    }
    try {
        parse_operator("D^-1");
        FAIL("expected an exponent error");
    } catch (const Error& e) {
        CHECK(e.code == Err::NonIntegerExponent);
    }
    CHECK_THROWS_AS(parse_operator("y + 1"), Error);
    CHECK_THROWS_AS(parse_operator("(D"), Error);
    CHECK_THROWS_AS(parse_poly("mu^2 - q", {"lambda", "mu"}), Error);
}

TEST_CASE("print/parse round-trip on random operators") {
    testutil::Rng rng(81);
    for (int t = 0; t < 30; ++t) {
        PolyDiffOp p = rng.poly_op(4, 3);
        CHECK(parse_operator(op_to_string(p)) == p);
    }
}

TEST_CASE("print/parse round-trip on curve polynomials") {
    testutil::Rng rng(82);
    for (int t = 0; t < 30; ++t) {
        MPoly p = rng.mpoly({"lambda", "mu"}, 4, 4);
        CHECK(parse_poly(p.to_string(), {"lambda", "mu"}) == p);
    }
}
