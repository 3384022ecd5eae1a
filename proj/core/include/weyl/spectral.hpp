#pragma once

#include "weyl/diffop.hpp"
#include "weyl/polygcd.hpp"
#include "weyl/sylvester.hpp"

namespace weyl {

/// Plane curve f(lambda, mu) = 0 attached to a commuting pair, decomposed as
/// f = c * h^r with h normalized and not a proper power.
struct PlaneCurve {
    MPoly f;
    MPoly h;
    int r = 1;
    GaussRat c = GaussRat(1);
    bool exact_path = false; // how f was computed
};

/// f = det S_0(L - lambda, M - mu). Requires [L, M] = 0 (Err::NotCommuting),
/// which is what makes f free of x; the fast path evaluates x at two points
/// and cross-checks, the exact path keeps x symbolic and asserts x-freeness.
PlaneCurve spectral_curve(const PolyDiffOp& l, const PolyDiffOp& m, bool exact = false);

/// True iff h(l, m) is the zero operator, evaluating monomials as l^a * m^b.
/// Requires [l, m] = 0 first.
bool verify_bc_relation(const PolyDiffOp& l, const PolyDiffOp& m, const MPoly& h);

struct RankReport {
    int rk_pair = 0;
    int rk_algebra = 0;
    bool true_rank = false;
};

RankReport rank_report(const PolyDiffOp& l, const PolyDiffOp& m);

/// h vanishes at the point and the gradient does not.
bool is_nonsingular_point(const PlaneCurve& curve, const GaussRat& lambda0, const GaussRat& mu0);

/// The order-r common right divisor of l - lambda0 and m - mu0 at a
/// non-singular point of the curve, realized as the r-th subresultant.
/// Checks that the lower subresultants vanish and that the result divides
/// both shifted operators on the right.
PolyDiffOp gcd_at_point(const PolyDiffOp& l, const PolyDiffOp& m, const PlaneCurve& curve,
                        const GaussRat& lambda0, const GaussRat& mu0,
                        DetPath path = DetPath::Auto);

} // namespace weyl
