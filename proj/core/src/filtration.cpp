#include "weyl/filtration.hpp"

#include "weyl/error.hpp"
#include "weyl/polygcd.hpp"

#include <algorithm>
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

} // namespace

NewtonDiagram newton_diagram(const PolyDiffOp& op) {
    require_weyl(op, "newton_diagram");
    NewtonDiagram nd;
    for (int j = 0; j <= std::max(op.order(), -1); ++j) {
        MPoly c = op.coeff(static_cast<unsigned>(j));
        if (c.is_zero()) continue;
        for (const auto& [mono, coef] : c.terms()) {
            long i = mono.empty() ? 0 : static_cast<long>(mono[0]);
            nd.points.emplace(i, j);
        }
    }
    return nd;
}

DeltaInitial delta_initial(const PolyDiffOp& op, const Filtration& f) {
    require_weyl(op, "delta_initial");
    if (op.is_zero()) fail(Err::ZeroOperator, "delta_initial of the zero operator");

    NewtonDiagram nd = newton_diagram(op);
    long delta = 0;
    bool first = true;
    for (const auto& [i, j] : nd.points) {
        long w = f.weight(i, j);
        if (first || w > delta) delta = w;
        first = false;
    }

    DeltaInitial out;
    out.delta = delta;
    std::vector<MPoly> coeffs(static_cast<std::size_t>(op.order()) + 1);
    MPoly sym;
    MPoly chi = MPoly::variable("chi"), xi = MPoly::variable("xi");
    for (int j = 0; j <= op.order(); ++j) {
        MPoly c = op.coeff(static_cast<unsigned>(j));
        if (c.is_zero()) continue;
        for (const auto& [mono, coef] : c.terms()) {
            long i = mono.empty() ? 0 : static_cast<long>(mono[0]);
            if (f.weight(i, j) != delta) continue;
            coeffs[static_cast<std::size_t>(j)] +=
                MPoly::monomial(coef, {{"x", static_cast<unsigned>(i)}});
            sym += chi.pow(static_cast<unsigned>(i)) * xi.pow(static_cast<unsigned>(j)).scaled(coef);
        }
    }
    out.ini = PolyDiffOp(std::move(coeffs));
    out.sym = Symbol{sym, delta};
    return out;
}

Filtration test_filtration(const PolyDiffOp& l) {
    require_weyl(l, "test_filtration");
    if (l.is_zero()) fail(Err::ZeroOperator, "test_filtration of the zero operator");
    if (!l.lead().is_constant())
        fail(Err::UnsupportedStructure, "test_filtration needs a constant leading coefficient");
    const long n = l.order();

    NewtonDiagram nd = newton_diagram(l);
    // slope of the Newton-polygon edge at (0, n): the smallest (n-j)/i over
    // support points with i > 0 keeps (0, n) on top and ties it with at
    // least one other point
    long pn = 0, pd = 0; // ratio pn/pd
    bool have = false;
    for (const auto& [i, j] : nd.points) {
        if (i <= 0) continue;
        long num = n - j, den = i;
        if (!have || num * pd < pn * den) {
            pn = num;
            pd = den;
            have = true;
        }
    }
    if (!have)
        fail(Err::TrivialOperator, "no support point with positive x-degree; no edge exists");
    long g = std::gcd(pn, pd);
    Filtration f{pn / g, pd / g};

    // Post-check the defining property: (0, n) attains the maximum weight
    // and ties with at least one other diagram point. A failure here is a
    // hard internal error, not a caller mistake.
    long top = f.weight(0, n);
    int ties = 0;
    for (const auto& [i, j] : nd.points) {
        long w = f.weight(i, j);
        if (w > top) fail(Err::Internal, "test filtration post-check failed: (0,n) not maximal");
        if (w == top && !(i == 0 && j == n)) ++ties;
    }
    if (ties == 0) fail(Err::Internal, "test filtration post-check failed: no tie at (0,n)");
    return f;
}

DixmierVerdict dixmier_test(const PolyDiffOp& l, const PolyDiffOp& m, const Filtration& f) {
    if (l.is_zero() || m.is_zero()) fail(Err::ZeroOperator, "dixmier_test needs nonzero operators");
    DeltaInitial dl = delta_initial(l, f);
    DeltaInitial dm = delta_initial(m, f);
    long v = dl.delta, w = dm.delta;

    DixmierVerdict verdict;
    if (v == 0 && w == 0) {
        // both symbols are constants
        verdict.pass = true;
        verdict.c = GaussRat(1);
        return verdict;
    }
    long g = std::gcd(v < 0 ? -v : v, w < 0 ? -w : w);
    if (g == 0) g = 1;
    if (v < 0 || w < 0) fail(Err::Internal, "negative weight under a nonnegative filtration");

    // reduced powers: sigma(M)^v = c sigma(L)^w  <=>  sigma(M)^(v/g) = c' sigma(L)^(w/g)
    MPoly lhs = dm.sym.poly.pow(static_cast<unsigned>(v / g));
    MPoly rhs = dl.sym.poly.pow(static_cast<unsigned>(w / g));
    if (rhs.is_zero()) fail(Err::Internal, "zero symbol");
    GaussRat c = lhs.lead_coeff() / rhs.lead_coeff();
    if (lhs == rhs.scaled(c)) {
        verdict.pass = true;
        verdict.c = c;
    }
    return verdict;
}

MPoly bracket_symbol(const PolyDiffOp& l, const PolyDiffOp& m, const Filtration& f) {
    DeltaInitial dl = delta_initial(l, f);
    DeltaInitial dm = delta_initial(m, f);
    // Poisson bracket of the symbols, oriented so that the result equals the
    // symbol of [L, M] whenever it is nonzero (checked against direct
    // commutators; e.g. [D^2, x] = 2D with symbol 2*xi).
    MPoly b = dl.sym.poly.derivative("xi") * dm.sym.poly.derivative("chi") -
              dl.sym.poly.derivative("chi") * dm.sym.poly.derivative("xi");
    if (b.is_zero())
        fail(Err::BracketVanishes, "symbol bracket vanishes; fall back to the direct commutator");
    return b;
}

OrderConstraints order_constraints(const PolyDiffOp& l) {
    Filtration f = test_filtration(l);
    DeltaInitial di = delta_initial(l, f);
    const long n = l.order();

    auto dec = squarefree_power(di.sym.poly, "xi");
    if (dec.r == 1)
        fail(Err::NotAPower,
             "symbol is not a perfect power; the centralizer is C[L] only");

    const MPoly& h = dec.h;
    // supported shapes: h squarefree, weighted-homogeneous, with a pure
    // xi-power term realizing its top xi-degree
    MPoly hx = h.derivative("xi");
    if (hx.is_zero() || !bipoly_gcd(h, hx, "xi").is_constant())
        fail(Err::UnsupportedStructure, "symbol base is not squarefree");
    long d = h.degree("xi");
    long wh = -1;
    for (const auto& [mono, c] : h.terms()) {
        long i = 0, j = 0;
        for (std::size_t k = 0; k < h.vars().size(); ++k) {
            if (h.vars()[k] == "chi") i = mono[k];
            if (h.vars()[k] == "xi") j = mono[k];
        }
        long w = f.weight(i, j);
        if (wh < 0) wh = w;
        else if (w != wh) fail(Err::UnsupportedStructure, "symbol base is not weighted-homogeneous");
    }
    MPoly top = h.coeff_wrt("xi", static_cast<unsigned>(d));
    if (top.is_zero() || !top.is_constant())
        fail(Err::UnsupportedStructure, "symbol base has no pure xi-power term");
    if (d * dec.r != n) fail(Err::Internal, "xi-degree bookkeeping failed");

    OrderConstraints oc;
    oc.filtration = f;
    oc.base = h;
    oc.power = dec.r;
    oc.xi_degree = d;
    oc.modulus = n;
    for (int s = 0; s < dec.r; ++s) oc.residues.push_back((s * d) % n);
    std::sort(oc.residues.begin(), oc.residues.end());
    oc.residues.erase(std::unique(oc.residues.begin(), oc.residues.end()), oc.residues.end());
    return oc;
}

} // namespace weyl
