#include <doctest.h>

#include "testutil.hpp"
#include "weyl/diffop.hpp"
#include "weyl/expr.hpp"

using namespace weyl;

namespace {
PolyDiffOp O(const std::string& s) { return parse_operator(s); }
} // namespace

TEST_CASE("composition basics") {
    CHECK(O("D*x - x*D") == O("1"));
    CHECK(O("D*x^2") == O("x^2*D + 2*x"));
    CHECK(O("D^2*x") == O("x*D^2 + 2*D"));
}

TEST_CASE("hidden square relation of the degree-three pair") {
    for (std::string alpha : {"0", "1", "i", "5"}) {
        PolyDiffOp h = O("D^2 + x^3 + (" + alpha + ")");
        PolyDiffOp l = h * h + O("2*x");
        PolyDiffOp b =
            h * h * h + (O("x") * h + h * O("x")).left_scaled(MPoly::constant(GaussRat(Rat(3, 2))));
        PolyDiffOp rel = b * b - (l * l * l - PolyDiffOp::constant(parse_poly(alpha, {})));
        CHECK(rel.is_zero());
        CHECK(commutator(l, b).is_zero());
    }
}

TEST_CASE("commutator basics") {
    CHECK(commutator(O("D^2"), O("D^3")).is_zero());
    CHECK(commutator(O("D"), O("x")) == O("1"));
}

TEST_CASE("associativity and Leibniz on random triples") {
    testutil::Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        DiffOp p = rng.diffop(2, 1), q = rng.diffop(2, 1), r = rng.diffop(2, 1);
        CHECK((p * q) * r == p * (q * r));
        CHECK(commutator(p, q * r) == commutator(p, q) * r + q * commutator(p, r));
    }
}

TEST_CASE("order and leading coefficient are multiplicative") {
    testutil::Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        DiffOp p = rng.diffop_nonzero(4), q = rng.diffop_nonzero(4);
        CHECK((p * q).order() == p.order() + q.order());
        CHECK((p * q).lead() == p.lead() * q.lead());
    }
    CHECK(DiffOp().order() == kZeroOpOrder);
    CHECK(kZeroOpOrder < -1000000);
}

TEST_CASE("right division") {
    DiffOp q, r;
    div_right(to_ratfunc_op(O("D^2")), to_ratfunc_op(O("D")), &q, &r);
    CHECK(q == to_ratfunc_op(O("D")));
    CHECK(r.is_zero());
    div_right(to_ratfunc_op(O("D^2 + x")), to_ratfunc_op(O("D^2")), &q, &r);
    CHECK(q == to_ratfunc_op(O("1")));
    CHECK(r == to_ratfunc_op(O("x")));
}

TEST_CASE("division round-trips on random instances") {
    testutil::Rng rng(43);
    for (int t = 0; t < 15; ++t) {
        DiffOp l = rng.diffop_nonzero(3);
        DiffOp q0 = rng.diffop(3);
        DiffOp r0 = rng.diffop(l.order() >= 1 ? l.order() - 1 : 0);
        if (l.order() == 0) r0 = DiffOp();

        DiffOp q, r;
        div_right(q0 * l + r0, l, &q, &r);
        CHECK(q == q0);
        CHECK(r == r0);

        div_left_factor(l * q0 + r0, l, &q, &r);
        CHECK(q == q0);
        CHECK(r == r0);
    }
}

TEST_CASE("left-factor division peels a left factor") {
    DiffOp q, r;
    div_left_factor(to_ratfunc_op(O("x*D + 1")), to_ratfunc_op(O("D")), &q, &r);
    CHECK(q == to_ratfunc_op(O("x")));
    CHECK(r.is_zero());
}

TEST_CASE("division remainders have smaller order") {
    testutil::Rng rng(44);
    for (int t = 0; t < 10; ++t) {
        DiffOp m = rng.diffop(4, 2, true), l = rng.diffop_nonzero(2, 1);
        DiffOp q, r;
        div_right(m, l, &q, &r);
        CHECK(m == q * l + r);
        CHECK(r.order() < l.order());
        div_left_factor(m, l, &q, &r);
        CHECK(m == l * q + r);
        CHECK(r.order() < l.order());
    }
}

TEST_CASE("gcrd right-divides both inputs") {
    // D^2 right-divides D^3, so it is itself the greatest common right divisor
    CHECK(gcrd(to_ratfunc_op(O("D^2")), to_ratfunc_op(O("D^3"))) == to_ratfunc_op(O("D^2")));
    testutil::Rng rng(45);
    for (int t = 0; t < 8; ++t) {
        DiffOp p = rng.diffop_nonzero(2, 1, true), q = rng.diffop_nonzero(2, 1, true),
               g = rng.diffop_nonzero(2, 1, true);
        DiffOp gg = gcrd(p * g, q * g);
        CHECK(gg.order() >= g.order());
        DiffOp quo, rem;
        div_right(p * g, gg, &quo, &rem);
        CHECK(rem.is_zero());
        div_right(q * g, gg, &quo, &rem);
        CHECK(rem.is_zero());
        CHECK(gg.lead() == RatFunc(1));
    }
}

TEST_CASE("polynomial evaluation at an operator") {
    CHECK(poly_at_operator(parse_poly("lambda^2 + 1", {"lambda"}), O("D")) == O("D^2 + 1"));
    PolyDiffOp h = O("D^2 + x^3");
    CHECK(poly_at_operator(parse_poly("lambda^3", {"lambda"}), h) == h * h * h);
}

TEST_CASE("standard form detection") {
    CHECK(is_standard_form(O("D^4 + x*D^2")));
    CHECK_FALSE(is_standard_form(O("D^4 + x*D^3")));
    CHECK(is_standard_form(O("(D^2 + x^4 + 1)^2 + 8*i*D + 16*x^2")));
    CHECK_FALSE(is_standard_form(O("2*D^2")));
}

TEST_CASE("conversions between coefficient rings") {
    DiffOp with_den(std::vector<RatFunc>{RatFunc(MPoly::constant(GaussRat(1)), parse_poly("x", {"x"}))});
    CHECK_THROWS_AS(to_poly_op(with_den), Error);
    CHECK(to_poly_op(to_ratfunc_op(O("x^2*D + 3"))) == O("x^2*D + 3"));
}
