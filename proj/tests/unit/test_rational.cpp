#include <doctest.h>

#include "testutil.hpp"
#include "weyl/rational.hpp"
#include "weyl/ratfunc.hpp"
#include "weyl/mpoly.hpp"
#include "weyl/error.hpp"

using namespace weyl;

TEST_CASE("gauss rational arithmetic basics") {
    GaussRat a(Rat(1, 2), Rat(3, 4));
    GaussRat b(Rat(-2), Rat(1));
    CHECK(a + b == GaussRat(Rat(-3, 2), Rat(7, 4)));
    CHECK(a - b == GaussRat(Rat(5, 2), Rat(-1, 4)));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK((a * a.inverse()).is_one());
    CHECK((b / b).is_one());
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(GaussRat(0).inverse(), Error);
}

TEST_CASE("norm is multiplicative") {
    testutil::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        GaussRat a = rng.gauss_rat(), b = rng.gauss_rat();
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("field axioms on random samples") {
    testutil::Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        GaussRat a = rng.gauss_rat(), b = rng.gauss_rat(), c = rng.gauss_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
    }
}

TEST_CASE("canonical printing") {
    CHECK(GaussRat(0).to_string() == "0");
    CHECK(GaussRat(Rat(5)).to_string() == "5");
    CHECK(GaussRat(Rat(-5, 2)).to_string() == "-5/2");
    CHECK(GaussRat::i().to_string() == "i");
    CHECK((-GaussRat::i()).to_string() == "-i");
    CHECK(GaussRat(Rat(0), Rat(3, 2)).to_string() == "3/2*i");
    CHECK(GaussRat(Rat(1, 2), Rat(-1)).to_string() == "1/2 - i");
    CHECK(GaussRat(Rat(-1), Rat(2)).to_string() == "-1 + 2*i");
}

TEST_CASE("rational functions in x") {
    MPoly x = MPoly::variable("x");
    RatFunc f(x * x - MPoly::constant(GaussRat(1)), x - MPoly::constant(GaussRat(1)));
    CHECK(f.is_poly()); // gcd cancels to x + 1
    CHECK(f.num() == x + MPoly::constant(GaussRat(1)));

    RatFunc g(MPoly::constant(GaussRat(1)), x);
    CHECK(g.derivative() == RatFunc(MPoly::constant(GaussRat(-1)), x * x));
    CHECK((g * g.inverse()) == RatFunc(1));
    CHECK_THROWS_AS(RatFunc(x, MPoly()), Error);

    testutil::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        RatFunc a = rng.ratfunc(2), b = rng.ratfunc(2);
        // quotient rule against the product rule
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
