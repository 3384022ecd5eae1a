#include "weyl/centralizer.hpp"

#include "weyl/error.hpp"
#include "weyl/polygcd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace weyl {

namespace {

void require_weyl(const PolyDiffOp& p, const char* who) {
    for (const auto& c : p.coeffs())
        for (const auto& v : c.vars())
            if (v != "x")
                fail(Err::NotPolynomialCoefficients,
                     std::string(who) + ": coefficients must be polynomials in x");
}

long x_degree(const PolyDiffOp& p) {
    long d = 0;
    for (const auto& c : p.coeffs()) d = std::max(d, std::max(0l, c.degree("x")));
    return d;
}

} // namespace

std::vector<long> default_degbounds(const PolyDiffOp& l, int m) {
    const long degL = x_degree(l);
    const long n = l.order();
    std::vector<long> b(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        long num = degL * (m - j);
        b[static_cast<std::size_t>(j)] = (num + n - 1) / n + 2;
    }
    return b;
}

namespace {

struct AnsatzLayout {
    std::vector<long> bounds;
    std::vector<int> offset; // offset[j] = first column of c_j's coefficients
    int ncols = 0;
    int col(int j, long t) const { return offset[static_cast<std::size_t>(j)] + static_cast<int>(t); }
};

AnsatzLayout make_layout(const std::vector<long>& bounds) {
    AnsatzLayout lay;
    lay.bounds = bounds;
    lay.offset.resize(bounds.size());
    int acc = 0;
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        lay.offset[j] = acc;
        acc += static_cast<int>(bounds[j]) + 1;
    }
    lay.ncols = acc;
    return lay;
}

} // namespace

CentralizerFamily centralizer_search(const PolyDiffOp& l, int m, std::vector<long> degbounds) {
    require_weyl(l, "centralizer_search");
    if (l.is_zero() || l.order() < 1)
        fail(Err::ZeroOperator, "centralizer_search needs an operator of positive order");
    if (!l.lead().is_constant())
        fail(Err::UnsupportedStructure, "centralizer_search needs a constant leading coefficient");
    if (m < 1) fail(Err::BadIndex, "target order must be positive");
    if (degbounds.empty()) degbounds = default_degbounds(l, m);
    if (static_cast<int>(degbounds.size()) != m)
        fail(Err::BadIndex, "one degree bound per ansatz coefficient required");

    AnsatzLayout lay = make_layout(degbounds);

    LinearSystem sys;
    sys.nvars = lay.ncols;
    std::map<std::pair<int, long>, std::size_t> cell_row;
    auto row_for = [&](int j, long i) -> LinearSystem::Row& {
        auto key = std::make_pair(j, i);
        auto it = cell_row.find(key);
        if (it == cell_row.end()) {
            it = cell_row.emplace(key, sys.rows.size()).first;
            sys.rows.emplace_back();
        }
        return sys.rows[it->second];
    };
    auto scatter = [&](const PolyDiffOp& op, int col) {
        for (int j = 0; j <= std::max(op.order(), -1); ++j) {
            MPoly c = op.coeff(static_cast<unsigned>(j));
            if (c.is_zero()) continue;
            for (const auto& [mono, coef] : c.terms()) {
                long i = mono.empty() ? 0 : static_cast<long>(mono[0]);
                LinearSystem::Row& row = row_for(j, i);
                if (col < 0)
                    row.k += coef;
                else
                    row.c[col] += coef;
            }
        }
    };

    scatter(commutator(l, PolyDiffOp::d(static_cast<unsigned>(m))), -1);
    MPoly x = MPoly::variable("x");
    for (int j = 0; j < m; ++j) {
        for (long t = 0; t <= degbounds[static_cast<std::size_t>(j)]; ++t) {
            PolyDiffOp e = PolyDiffOp::term(x.pow(static_cast<unsigned>(t)), static_cast<unsigned>(j));
            scatter(commutator(l, e), lay.col(j, t));
        }
    }
    for (auto& row : sys.rows)
        for (auto it = row.c.begin(); it != row.c.end();)
            it = it->second.is_zero() ? row.c.erase(it) : std::next(it);

    LinSolution sol = solve_system(sys);
    CentralizerFamily fam;
    fam.order = m;
    if (sol.kind == SolveKind::Inconsistent) return fam;
    fam.found = true;

    auto assemble = [&](const std::vector<GaussRat>& vec, bool monic_part) {
        std::vector<MPoly> coeffs(static_cast<std::size_t>(m) + 1);
        if (monic_part) coeffs[static_cast<std::size_t>(m)] = MPoly::constant(GaussRat(1));
        for (int j = 0; j < m; ++j) {
            MPoly c;
            for (long t = 0; t <= degbounds[static_cast<std::size_t>(j)]; ++t) {
                const GaussRat& v = vec[static_cast<std::size_t>(lay.col(j, t))];
                if (!v.is_zero()) c += MPoly::monomial(v, {{"x", static_cast<unsigned>(t)}});
            }
            coeffs[static_cast<std::size_t>(j)] = std::move(c);
        }
        return PolyDiffOp(std::move(coeffs));
    };

    fam.particular = assemble(sol.particular, true);
    for (const auto& vec : sol.nullspace) fam.basis.push_back(assemble(vec, false));
    if (!commutator(l, fam.particular).is_zero())
        fail(Err::Internal, "centralizer_search produced a non-commuting particular solution");
    return fam;
}

FamilyObstructions centralizer_obstructions(const PolyDiffOp& l, int m,
                                            const std::vector<std::string>& params,
                                            std::vector<long> degbounds) {
    if (l.is_zero() || l.order() < 1)
        fail(Err::ZeroOperator, "centralizer_obstructions needs an operator of positive order");
    if (!l.lead().is_constant())
        fail(Err::UnsupportedStructure, "constant leading coefficient required");
    if (degbounds.empty()) degbounds = default_degbounds(l, m);

    std::set<std::string> param_set(params.begin(), params.end());
    auto uname = [](int j, long t) { return "u" + std::to_string(j) + "_" + std::to_string(t); };

    // symbolic monic ansatz
    std::vector<MPoly> mc(static_cast<std::size_t>(m) + 1);
    mc[static_cast<std::size_t>(m)] = MPoly::constant(GaussRat(1));
    for (int j = 0; j < m; ++j) {
        MPoly c;
        for (long t = 0; t <= degbounds[static_cast<std::size_t>(j)]; ++t)
            c += MPoly::variable(uname(j, t)) * MPoly::variable("x").pow(static_cast<unsigned>(t));
        mc[static_cast<std::size_t>(j)] = std::move(c);
    }
    PolyDiffOp ansatz(std::move(mc));
    PolyDiffOp n = commutator(l, ansatz);

    std::vector<MPoly> eqs;
    for (int j = 0; j <= std::max(n.order(), -1); ++j) {
        for (auto& cell : n.coeff(static_cast<unsigned>(j)).coeffs_wrt("x"))
            if (!cell.is_zero()) eqs.push_back(std::move(cell));
    }

    auto is_unknown = [&](const std::string& v) { return !param_set.count(v) && v != "x"; };

    // staged elimination: substitute unknowns while some equation carries one
    // with a parameter-free coefficient
    for (;;) {
        int best_eq = -1;
        std::string best_u;
        std::size_t best_sz = 0;
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            if (eqs[e].is_zero()) continue;
            for (const auto& v : eqs[e].vars()) {
                if (!is_unknown(v)) continue;
                auto cs = eqs[e].coeffs_wrt(v);
                if (cs.size() != 2) fail(Err::Internal, "ansatz system is not linear in an unknown");
                if (!cs[1].is_constant()) continue;
                if (best_eq < 0 || eqs[e].term_count() < best_sz) {
                    best_eq = static_cast<int>(e);
                    best_u = v;
                    best_sz = eqs[e].term_count();
                }
                break;
            }
        }
        if (best_eq < 0) break;
        auto cs = eqs[static_cast<std::size_t>(best_eq)].coeffs_wrt(best_u);
        MPoly expr = cs[0].scaled(-(cs[1].constant_value().inverse()));
        eqs[static_cast<std::size_t>(best_eq)] = MPoly();
        for (auto& eq : eqs) {
            if (eq.is_zero() || !eq.uses(best_u)) continue;
            auto ec = eq.coeffs_wrt(best_u);
            if (ec.size() != 2) fail(Err::Internal, "ansatz system is not linear in an unknown");
            eq = ec[0] + ec[1] * expr;
        }
    }

    FamilyObstructions out;
    for (auto& eq : eqs) {
        if (eq.is_zero()) continue;
        bool mixed = false;
        for (const auto& v : eq.vars())
            if (is_unknown(v)) mixed = true;
        (mixed ? out.mixed : out.obstructions).push_back(std::move(eq));
    }
    return out;
}

TrivialityResult triviality_test(const PolyDiffOp& l, const PolyDiffOp& m) {
    require_weyl(l, "triviality_test");
    require_weyl(m, "triviality_test");
    TrivialityResult res;
    if (m.order() < 1) {
        // constants are trivially polynomials in L
        if (!commutator(l, m).is_zero()) fail(Err::NotCommuting, "operators do not commute");
        res.trivial = true;
        res.p0 = m.is_zero() ? MPoly() : m.coeff(0);
        return res;
    }
    PlaneCurve curve = spectral_curve(l, m);
    const int n = l.order();
    if (curve.h.degree("mu") == 1 && curve.r == n) {
        MPoly c1 = curve.h.coeff_wrt("mu", 1);
        if (c1.is_constant() && c1.constant_value().is_one()) {
            MPoly p0 = -curve.h.coeff_wrt("mu", 0);
            if ((m - poly_at_operator(p0, l)).is_zero()) {
                res.trivial = true;
                res.p0 = std::move(p0);
                return res;
            }
        }
    }
    return res;
}

RemainderSequence remainder_sequence(const PolyDiffOp& m, const PolyDiffOp& l, int g) {
    if (l.is_zero()) fail(Err::DivisionByZero, "remainder sequence needs a nonzero divisor");
    if (g < 0) fail(Err::OrderMismatch, "negative division depth");
    if (g >= 1) {
        if (m.order() < 0 || m.order() % 4 != 2)
            fail(Err::OrderMismatch, "expected an operator of order 2(2q+1)");
        int q = (m.order() - 2) / 4;
        if (g > q) fail(Err::OrderMismatch, "division depth exceeds q");
    }
    RemainderSequence seq;
    PolyDiffOp cur = m;
    for (int j = 0; j <= g; ++j) {
        PolyDiffOp quo, rem;
        div_left_factor(cur, l, &quo, &rem);
        seq.r.push_back(std::move(rem));
        cur = std::move(quo);
    }
    seq.q = std::move(cur);
    return seq;
}

Candidate build_candidate(const PolyDiffOp& l, const std::vector<PolyDiffOp>& remainders,
                          int g, int q) {
    if (g < 1 || g > q) fail(Err::OrderMismatch, "candidate index g out of range");
    if (static_cast<int>(remainders.size()) != g + 1)
        fail(Err::OrderMismatch, "need exactly g+1 remainders");
    Candidate cand;
    cand.d = std::min(q - g, g);
    for (int t = 1; t <= cand.d; ++t) cand.params.push_back("a" + std::to_string(t));

    std::vector<PolyDiffOp> rb(static_cast<std::size_t>(g)); // rb[j] = R_{j+1,B}
    rb[0] = remainders[0];
    for (int j = 1; j < g; ++j) {
        PolyDiffOp v = remainders[static_cast<std::size_t>(j)];
        for (int t = 1; t <= std::min(j, cand.d); ++t)
            v -= rb[static_cast<std::size_t>(j - t)].left_scaled(
                MPoly::variable(cand.params[static_cast<std::size_t>(t - 1)]));
        rb[static_cast<std::size_t>(j)] = std::move(v);
    }
    PolyDiffOp qb = remainders[static_cast<std::size_t>(g)];
    for (int t = 1; t <= std::min(g, cand.d); ++t)
        qb -= rb[static_cast<std::size_t>(g - t)].left_scaled(
            MPoly::variable(cand.params[static_cast<std::size_t>(t - 1)]));

    PolyDiffOp b = l.pow(static_cast<unsigned>(g)) * qb;
    for (int j = 0; j < g; ++j)
        b += l.pow(static_cast<unsigned>(j)) * rb[static_cast<std::size_t>(j)];
    cand.b = std::move(b);

    MPoly lambda = MPoly::variable("lambda");
    cand.p = MPoly::constant(GaussRat(1));
    for (int t = 1; t <= cand.d; ++t)
        cand.p += MPoly::variable(cand.params[static_cast<std::size_t>(t - 1)]) *
                  lambda.pow(static_cast<unsigned>(t));
    return cand;
}

std::vector<MPoly> commutator_system(const PolyDiffOp& l, const PolyDiffOp& b) {
    PolyDiffOp n = commutator(l, b);
    std::vector<MPoly> sys;
    for (int j = 0; j <= std::max(n.order(), -1); ++j)
        for (auto& cell : n.coeff(static_cast<unsigned>(j)).coeffs_wrt("x"))
            if (!cell.is_zero()) sys.push_back(std::move(cell));
    return sys;
}

ParamSolution solve_param_system(const std::vector<MPoly>& system,
                                 const std::vector<std::string>& params) {
    ParamSolution out;
    const int d = static_cast<int>(params.size());
    std::map<std::string, int> pidx;
    for (int i = 0; i < d; ++i) pidx[params[i]] = i;

    // columns: params, then one fresh unknown per nonlinear monomial
    std::map<std::vector<std::pair<int, unsigned>>, int> mono_col;
    std::vector<std::vector<std::pair<int, unsigned>>> mono_of_col;
    LinearSystem sys;
    for (const auto& poly : system) {
        LinearSystem::Row row;
        for (const auto& v : poly.vars())
            if (!pidx.count(v))
                fail(Err::UnsupportedStructure, "system involves a non-parameter variable: " + v);
        for (const auto& [mono, c] : poly.terms()) {
            unsigned total = std::accumulate(mono.begin(), mono.end(), 0u);
            if (total == 0) {
                row.k += c;
            } else if (total == 1) {
                for (std::size_t i = 0; i < mono.size(); ++i)
                    if (mono[i] == 1) row.c[pidx.at(poly.vars()[i])] += c;
            } else {
                std::vector<std::pair<int, unsigned>> key;
                for (std::size_t i = 0; i < mono.size(); ++i)
                    if (mono[i] > 0) key.emplace_back(pidx.at(poly.vars()[i]), mono[i]);
                auto it = mono_col.find(key);
                if (it == mono_col.end()) {
                    it = mono_col.emplace(key, d + static_cast<int>(mono_of_col.size())).first;
                    mono_of_col.push_back(key);
                }
                row.c[it->second] += c;
            }
        }
        for (auto it = row.c.begin(); it != row.c.end();)
            it = it->second.is_zero() ? row.c.erase(it) : std::next(it);
        sys.rows.push_back(std::move(row));
    }
    sys.nvars = d + static_cast<int>(mono_of_col.size());

    auto pinned = [](const LinSolution& s, int col) {
        for (const auto& vec : s.nullspace)
            if (!vec[static_cast<std::size_t>(col)].is_zero()) return false;
        return true;
    };

    std::vector<bool> resolved(mono_of_col.size(), false);
    for (;;) {
        LinSolution sol = solve_system(sys);
        if (sol.kind == SolveKind::Inconsistent) return out;

        if (sol.kind == SolveKind::Unique) {
            for (std::size_t k = 0; k < mono_of_col.size(); ++k) {
                GaussRat prod(1);
                for (const auto& [pi, e] : mono_of_col[k])
                    for (unsigned t = 0; t < e; ++t) prod *= sol.particular[static_cast<std::size_t>(pi)];
                if (prod != sol.particular[static_cast<std::size_t>(d + static_cast<int>(k))]) return out;
            }
        } else {
            bool progress = false;
            bool unresolved_left = false;
            for (std::size_t k = 0; k < mono_of_col.size() && !progress; ++k) {
                if (resolved[k]) continue;
                bool params_pinned = true;
                for (const auto& [pi, e] : mono_of_col[k])
                    if (!pinned(sol, pi)) params_pinned = false;
                if (!params_pinned) {
                    unresolved_left = true;
                    continue;
                }
                GaussRat prod(1);
                for (const auto& [pi, e] : mono_of_col[k])
                    for (unsigned t = 0; t < e; ++t) prod *= sol.particular[static_cast<std::size_t>(pi)];
                int wcol = d + static_cast<int>(k);
                LinearSystem::Row row;
                row.c[wcol] = GaussRat(1);
                row.k = -prod;
                sys.rows.push_back(std::move(row));
                resolved[k] = true;
                progress = true;
            }
            if (progress) continue;
            if (unresolved_left)
                fail(Err::UnsupportedStructure,
                     "nonlinear constraint on unresolved parameters; linearization is stuck");
            // free directions only in resolved/unconstrained coordinates: take
            // the particular point
        }

        std::vector<GaussRat> values(sol.particular.begin(), sol.particular.begin() + d);
        for (const auto& poly : system) {
            MPoly v = poly;
            for (int i = 0; i < d; ++i) v = v.eval(params[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(i)]);
            if (!v.is_zero() && !(v.is_constant() && v.constant_value().is_zero())) return out;
        }
        out.found = true;
        out.values = std::move(values);
        return out;
    }
}

BCReport bc_pair(const PolyDiffOp& l4, const PolyDiffOp& m) {
    require_weyl(l4, "bc_pair");
    require_weyl(m, "bc_pair");
    if (l4.order() != 4) fail(Err::NotOrder4, "bc_pair needs an operator of order 4");
    if (!is_standard_form(l4)) fail(Err::NotOrder4, "bc_pair needs L in standard form");
    if (!commutator(l4, m).is_zero()) fail(Err::NotCommuting, "operators do not commute");

    BCReport rep;
    if (m.order() < 1) {
        rep.verdict = BCReport::Verdict::TrivialInCL;
        rep.p0 = m.is_zero() ? MPoly() : m.coeff(0);
        return rep;
    }

    PlaneCurve curve = spectral_curve(l4, m);

    // M already a polynomial in L: square-free part is linear in mu
    if (curve.h.degree("mu") == 1) {
        MPoly c1 = curve.h.coeff_wrt("mu", 1);
        if (!c1.is_constant() || !c1.constant_value().is_one())
            fail(Err::CurveShapeUnexpected, "square-free part is not monic in mu");
        MPoly p0 = -curve.h.coeff_wrt("mu", 0);
        if (!(m - poly_at_operator(p0, l4)).is_zero())
            fail(Err::CurveShapeUnexpected, "linear curve but M is not a polynomial in L");
        rep.verdict = BCReport::Verdict::TrivialInCL;
        rep.p0 = std::move(p0);
        return rep;
    }

    if (curve.h.degree("mu") != 2)
        fail(Err::CurveShapeUnexpected, "square-free part is not quadratic in mu");
    {
        MPoly c2 = curve.h.coeff_wrt("mu", 2);
        if (!c2.is_constant() || !c2.constant_value().is_one())
            fail(Err::CurveShapeUnexpected, "square-free part is not monic in mu");
    }
    rep.b1 = -curve.h.coeff_wrt("mu", 1);
    rep.b0 = -curve.h.coeff_wrt("mu", 0);
    rep.p0 = rep.b1.scaled(GaussRat(1, 2));

    PolyDiffOp m1 = m - poly_at_operator(rep.p0, l4);
    if (m1.is_zero()) {
        rep.verdict = BCReport::Verdict::TrivialInCL;
        return rep;
    }
    if (m1.order() % 4 != 2)
        fail(Err::CurveShapeUnexpected, "normalized order is not 2(2q+1)");
    const int q = (m1.order() - 2) / 4;
    MPoly r_big = rep.b0 + (rep.b1 * rep.b1).scaled(GaussRat(1, 4)); // M1^2 = r_big(L)

    for (int g = 1; g <= q - 1; ++g) {
        RemainderSequence seq = remainder_sequence(m1, l4, g);
        Candidate cand = build_candidate(l4, seq.r, g, q);
        std::vector<MPoly> sys = commutator_system(l4, cand.b);
        ParamSolution sol = solve_param_system(sys, cand.params);
        if (!sol.found) continue;

        PolyDiffOp b = cand.b;
        {
            std::vector<MPoly> cs(b.coeffs().begin(), b.coeffs().end());
            for (auto& c : cs)
                for (int t = 0; t < cand.d; ++t)
                    c = c.eval(cand.params[static_cast<std::size_t>(t)], sol.values[static_cast<std::size_t>(t)]);
            b = PolyDiffOp(std::move(cs));
        }
        if (!commutator(l4, b).is_zero()) fail(Err::Internal, "candidate does not commute");
        if (b.order() != 4 * g + 2) fail(Err::Internal, "candidate has unexpected order");

        // recover p from M1 = p(L) * B and verify the normalization p(0) = 1
        DiffOp quo, rem;
        div_right(to_ratfunc_op(m1), to_ratfunc_op(b), &quo, &rem);
        if (!rem.is_zero()) fail(Err::Internal, "B does not right-divide the normalized M");
        MPoly p;
        {
            DiffOp cur = quo;
            DiffOp l4r = to_ratfunc_op(l4);
            unsigned k = 0;
            MPoly lambda = MPoly::variable("lambda");
            while (!cur.is_zero()) {
                DiffOp qq, rr;
                div_left_factor(cur, l4r, &qq, &rr);
                if (!(rr.is_zero() || (rr.order() == 0 && rr.coeff(0).is_constant())))
                    fail(Err::Internal, "quotient is not a polynomial in L");
                if (!rr.is_zero()) p += lambda.pow(k).scaled(rr.coeff(0).constant_value());
                cur = std::move(qq);
                ++k;
            }
        }
        if (!(p.coeff_wrt("lambda", 0).is_constant() &&
              p.coeff_wrt("lambda", 0).constant_value().is_one()))
            fail(Err::UnsupportedStructure, "recovered p has p(0) != 1");

        rep.verdict = BCReport::Verdict::NewGenerator;
        rep.b_raw = b;
        if (!b.lead().is_constant()) fail(Err::Internal, "candidate has a non-constant lead");
        rep.b = b.left_scaled(MPoly::constant(b.lead().constant_value().inverse()));
        rep.g = g;
        rep.order = 4 * g + 2;
        rep.p = std::move(p);
        rep.solution = sol.values;

        PlaneCurve bc = spectral_curve(l4, rep.b);
        if (bc.h.degree("mu") != 2 || !bc.h.coeff_wrt("mu", 1).is_zero())
            fail(Err::Internal, "generator curve has unexpected shape");
        rep.h = bc.h;
        MPoly r_small = -bc.h.coeff_wrt("mu", 0);
        if (!(rep.b * rep.b - poly_at_operator(r_small, l4)).is_zero())
            fail(Err::Internal, "generator does not satisfy its curve equation");
        return rep;
    }

    // no smaller generator: L, M1 is already the pair
    rep.verdict = BCReport::Verdict::AlreadyBCPair;
    rep.b = m1;
    rep.b_raw = m1;
    rep.g = q;
    rep.order = m1.order();
    rep.p = MPoly::constant(GaussRat(1));
    rep.h = MPoly::variable("mu").pow(2) - r_big;
    if (!(m1 * m1 - poly_at_operator(r_big, l4)).is_zero())
        fail(Err::Internal, "normalized M does not satisfy its curve equation");
    return rep;
}

} // namespace weyl
