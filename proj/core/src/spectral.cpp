#include "weyl/spectral.hpp"

#include "weyl/error.hpp"

#include <numeric>

namespace weyl {

namespace {

void require_weyl(const PolyDiffOp& p, const char* who) {
    for (const auto& c : p.coeffs())
        for (const auto& v : c.vars())
            if (v != "x")
                fail(Err::NotPolynomialCoefficients,
                     std::string(who) + ": coefficients must be polynomials in x");
}

void require_commuting(const PolyDiffOp& l, const PolyDiffOp& m, const char* who) {
    if (!commutator(l, m).is_zero())
        fail(Err::NotCommuting, std::string(who) + ": operators do not commute");
}

PolyDiffOp shift_by(const PolyDiffOp& p, const MPoly& t) {
    return p - PolyDiffOp::constant(t);
}

} // namespace

PlaneCurve spectral_curve(const PolyDiffOp& l, const PolyDiffOp& m, bool exact) {
    require_weyl(l, "spectral_curve");
    require_weyl(m, "spectral_curve");
    if (l.order() < 1 || m.order() < 1)
        fail(Err::ZeroOperator, "spectral_curve needs operators of positive order");
    require_commuting(l, m, "spectral_curve");

    PolyDiffOp ls = shift_by(l, MPoly::variable("lambda"));
    PolyDiffOp ms = shift_by(m, MPoly::variable("mu"));

    MPoly f;
    if (exact) {
        SylvesterK s = build_sylvester(ls, ms, 0);
        f = det_fraction_free(s.mat);
        if (f.uses("x")) fail(Err::Internal, "resultant of a commuting pair depends on x");
    } else {
        SylvesterK s = build_sylvester(ls, ms, 0);
        const std::vector<std::string> vars = {"lambda", "mu"};
        const std::vector<long> bounds = {static_cast<long>(m.order()), static_cast<long>(l.order())};
        MPoly prev;
        bool have_prev = false;
        for (long x0 : {2l, 3l}) {
            PolyMat me(s.mat.rows, s.mat.cols);
            for (int i = 0; i < s.mat.rows; ++i)
                for (int j = 0; j < s.mat.cols; ++j)
                    me.at(i, j) = s.mat.at(i, j).eval("x", GaussRat(Rat(x0)));
            MPoly fx = det_eval_interp(me, vars, bounds);
            if (have_prev && fx != prev)
                fail(Err::Internal, "resultant x-independence cross-check failed");
            prev = std::move(fx);
            have_prev = true;
        }
        f = std::move(prev);
    }

    PlaneCurve curve;
    curve.exact_path = exact;
    curve.f = f;
    auto dec = squarefree_power(f, "mu");
    curve.h = dec.h;
    curve.r = dec.r;
    curve.c = dec.c;
    return curve;
}

bool verify_bc_relation(const PolyDiffOp& l, const PolyDiffOp& m, const MPoly& h) {
    require_commuting(l, m, "verify_bc_relation");
    for (const auto& v : h.vars())
        if (v != "lambda" && v != "mu")
            fail(Err::Internal, "curve polynomial must live in lambda, mu");

    long dl = std::max(h.degree("lambda"), 0l);
    long dm = std::max(h.degree("mu"), 0l);
    std::vector<PolyDiffOp> lp(dl + 1), mp(dm + 1);
    lp[0] = PolyDiffOp::constant(MPoly::constant(GaussRat(1)));
    for (long a = 1; a <= dl; ++a) lp[a] = lp[a - 1] * l;
    mp[0] = lp[0];
    for (long b = 1; b <= dm; ++b) mp[b] = mp[b - 1] * m;

    PolyDiffOp acc;
    for (const auto& [mono, c] : h.terms()) {
        unsigned ea = 0, eb = 0;
        for (std::size_t i = 0; i < h.vars().size(); ++i) {
            if (h.vars()[i] == "lambda") ea = mono[i];
            if (h.vars()[i] == "mu") eb = mono[i];
        }
        acc += (lp[ea] * mp[eb]).left_scaled(MPoly::constant(c));
    }
    return acc.is_zero();
}

RankReport rank_report(const PolyDiffOp& l, const PolyDiffOp& m) {
    require_commuting(l, m, "rank_report");
    RankReport rep;
    rep.rk_pair = static_cast<int>(std::gcd(l.order(), m.order()));
    PlaneCurve curve = spectral_curve(l, m);
    rep.rk_algebra = curve.r;
    rep.true_rank = rep.rk_pair == rep.rk_algebra;
    return rep;
}

bool is_nonsingular_point(const PlaneCurve& curve, const GaussRat& lambda0, const GaussRat& mu0) {
    auto value = [&](const MPoly& p) {
        return p.eval("lambda", lambda0).eval("mu", mu0).constant_value();
    };
    if (!value(curve.h).is_zero()) return false;
    GaussRat dl = value(curve.h.derivative("lambda"));
    GaussRat dm = value(curve.h.derivative("mu"));
    return !(dl.is_zero() && dm.is_zero());
}

PolyDiffOp gcd_at_point(const PolyDiffOp& l, const PolyDiffOp& m, const PlaneCurve& curve,
                        const GaussRat& lambda0, const GaussRat& mu0, DetPath path) {
    require_weyl(l, "gcd_at_point");
    require_weyl(m, "gcd_at_point");
    if (!is_nonsingular_point(curve, lambda0, mu0))
        fail(Err::SingularPoint, "gcd_at_point needs a non-singular point of the curve");

    const int r = curve.r;
    PolyDiffOp ls = shift_by(l, MPoly::constant(lambda0));
    PolyDiffOp ms = shift_by(m, MPoly::constant(mu0));

    for (int k = 0; k < r; ++k)
        if (!subresultant_op(ls, ms, k, path).is_zero())
            fail(Err::Internal, "lower subresultant does not vanish at a curve point");

    PolyDiffOp g = subresultant_op(ls, ms, r, path);
    if (g.order() != r)
        fail(Err::RankMismatch, "leading subresultant determinant vanished; order != rank");

    DiffOp gd = to_ratfunc_op(g);
    DiffOp q, rem;
    div_right(to_ratfunc_op(ls), gd, &q, &rem);
    if (!rem.is_zero()) fail(Err::Internal, "gcd_at_point result does not divide L - lambda0");
    div_right(to_ratfunc_op(ms), gd, &q, &rem);
    if (!rem.is_zero()) fail(Err::Internal, "gcd_at_point result does not divide M - mu0");
    return g;
}

} // namespace weyl
