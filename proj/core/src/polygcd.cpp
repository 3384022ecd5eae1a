#include "weyl/polygcd.hpp"

#include "weyl/error.hpp"

#include <algorithm>

namespace weyl {

namespace {

void check_univariate(const MPoly& p, const std::string& var, const char* who) {
    for (const auto& v : p.vars())
        if (v != var) fail(Err::Internal, std::string(who) + ": polynomial not univariate in " + var);
}

std::string co_variable(const MPoly& a, const MPoly& b, const std::string& main) {
    std::string co;
    auto scan = [&](const MPoly& p) {
        for (const auto& v : p.vars()) {
            if (v == main) continue;
            if (co.empty()) co = v;
            else if (co != v) fail(Err::Internal, "gcd restricted to two variables");
        }
    };
    scan(a);
    scan(b);
    return co;
}

} // namespace

void upoly_divrem(const MPoly& a, const MPoly& b, const std::string& var, MPoly* q, MPoly* r) {
    check_univariate(a, var, "upoly_divrem");
    check_univariate(b, var, "upoly_divrem");
    if (b.is_zero()) fail(Err::DivisionByZero, "upoly_divrem by zero");
    MPoly quo;
    MPoly rem = a;
    const long db = b.degree(var);
    const GaussRat bl = b.coeff_wrt(var, static_cast<unsigned>(db)).constant_value();
    MPoly v = MPoly::variable(var);
    while (!rem.is_zero() && rem.degree(var) >= db) {
        long dr = rem.degree(var);
        GaussRat c = rem.coeff_wrt(var, static_cast<unsigned>(dr)).constant_value() / bl;
        MPoly t = v.pow(static_cast<unsigned>(dr - db)).scaled(c);
        quo += t;
        rem -= t * b;
    }
    *q = std::move(quo);
    *r = std::move(rem);
}

MPoly upoly_gcd(const MPoly& a, const MPoly& b, const std::string& var) {
    MPoly f = a, g = b;
    while (!g.is_zero()) {
        MPoly q, r;
        upoly_divrem(f, g, var, &q, &r);
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    long d = f.degree(var);
    GaussRat lc = f.coeff_wrt(var, static_cast<unsigned>(d)).constant_value();
    return f.scaled(lc.inverse());
}

MPoly content_wrt(const MPoly& p, const std::string& main) {
    if (p.is_zero()) return MPoly();
    std::string co;
    for (const auto& v : p.vars())
        if (v != main) {
            if (!co.empty() && co != v) fail(Err::Internal, "content restricted to two variables");
            co = v;
        }
    auto cs = p.coeffs_wrt(main);
    if (co.empty()) return MPoly::constant(GaussRat(1));
    MPoly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : upoly_gcd(g, c, co);
        if (!g.is_zero() && g.degree(co) == 0) break;
    }
    if (g.is_zero()) return MPoly::constant(GaussRat(1));
    long d = g.degree(co);
    GaussRat lc = g.coeff_wrt(co, static_cast<unsigned>(d)).constant_value();
    return g.scaled(lc.inverse());
}

MPoly primitive_part_wrt(const MPoly& p, const std::string& main) {
    if (p.is_zero()) return p;
    return exact_div(p, content_wrt(p, main));
}

namespace {

/// One pseudo-remainder step in (Q(i)[co])[main]: returns r with
/// lc(b)^k * a = q*b + r for some k, deg_main r < deg_main b.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, const std::string& main) {
    long db = b.degree(main);
    MPoly bl = b.coeff_wrt(main, static_cast<unsigned>(db));
    MPoly rem = a;
    MPoly v = MPoly::variable(main);
    while (!rem.is_zero() && rem.degree(main) >= db) {
        long dr = rem.degree(main);
        MPoly rl = rem.coeff_wrt(main, static_cast<unsigned>(dr));
        rem = rem * bl - rl * v.pow(static_cast<unsigned>(dr - db)) * b;
    }
    return rem;
}

} // namespace

MPoly bipoly_gcd(const MPoly& a, const MPoly& b, const std::string& main) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::string co = co_variable(a, b, main);

    MPoly ca = content_wrt(a, main), cb = content_wrt(b, main);
    MPoly cg = co.empty() ? MPoly::constant(GaussRat(1)) : upoly_gcd(ca, cb, co);
    if (cg.is_zero()) cg = MPoly::constant(GaussRat(1));

    MPoly f = exact_div(a, ca), g = exact_div(b, cb);
    if (f.degree(main) < g.degree(main)) std::swap(f, g);
    while (!g.is_zero()) {
        MPoly r = pseudo_rem(f, g, main);
        f = std::move(g);
        if (r.is_zero()) {
            g = MPoly();
        } else {
            g = primitive_part_wrt(r, main);
        }
    }
    MPoly result = cg * primitive_part_wrt(f, main);
    return unit_normalize(result, main).first;
}

std::pair<MPoly, GaussRat> unit_normalize(const MPoly& p, const std::string& main) {
    if (p.is_zero()) return {p, GaussRat(1)};
    long d = p.degree(main);
    MPoly top = p.coeff_wrt(main, static_cast<unsigned>(d));
    GaussRat u = top.lead_coeff();
    return {p.scaled(u.inverse()), u};
}

PowerDecomposition squarefree_power(const MPoly& f, const std::string& main) {
    if (f.is_zero() || f.is_constant())
        fail(Err::Internal, "squarefree_power needs a non-constant polynomial");
    if (f.vars().size() > 2) fail(Err::Internal, "squarefree_power restricted to two variables");

    MPoly df = f.derivative(main);
    MPoly sf;
    if (df.is_zero()) {
        sf = f; // no main-variable dependence; fall through to the r = 1 case
    } else {
        MPoly g = bipoly_gcd(f, df, main);
        sf = g.is_constant() ? f : exact_div(f, g);
    }
    auto [h, unit] = unit_normalize(sf, main);

    // largest s with f = c * h^s, found by repeated exact division
    MPoly rest = f;
    int r = 0;
    MPoly q;
    while (MPoly::try_exact_div(rest, h, &q)) {
        rest = std::move(q);
        ++r;
    }
    if (r >= 1 && rest.is_constant()) return {h, r, rest.constant_value()};

    auto [hf, uf] = unit_normalize(f, main);
    return {hf, 1, uf};
}

} // namespace weyl
