#include "weyl/linsolve.hpp"

#include "weyl/error.hpp"

#include <algorithm>
#include <numeric>

namespace weyl {

LinSolution solve_system(const LinearSystem& sys) {
    const int n = sys.nvars;
    std::vector<LinearSystem::Row> rows = sys.rows;
    std::vector<int> pivot_of_col(n, -1);
    std::vector<int> col_of_row(rows.size(), -1);
    std::vector<bool> processed(rows.size(), false);

    for (;;) {
        // deterministic pivot choice: the unprocessed nonempty row with the
        // fewest coefficients (ties by index), pivoting on its smallest column
        int best = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (processed[i] || rows[i].c.empty()) continue;
            if (best < 0 || rows[i].c.size() < rows[best].c.size()) best = static_cast<int>(i);
        }
        if (best < 0) break;
        auto& prow = rows[best];
        int col = prow.c.begin()->first;
        GaussRat inv = prow.c.begin()->second.inverse();
        for (auto& [j, v] : prow.c) v *= inv;
        prow.k *= inv;
        processed[best] = true;
        pivot_of_col[col] = best;
        col_of_row[best] = col;

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == best) continue;
            auto it = rows[i].c.find(col);
            if (it == rows[i].c.end()) continue;
            GaussRat f = it->second;
            rows[i].c.erase(it);
            for (const auto& [j, v] : prow.c) {
                if (j == col) continue;
                auto jt = rows[i].c.find(j);
                if (jt == rows[i].c.end()) {
                    GaussRat nv = -(f * v);
                    if (!nv.is_zero()) rows[i].c.emplace(j, nv);
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) rows[i].c.erase(jt);
                }
            }
            rows[i].k -= f * prow.k;
        }
    }

    LinSolution sol;
    for (const auto& r : rows)
        if (r.c.empty() && !r.k.is_zero()) {
            sol.kind = SolveKind::Inconsistent;
            return sol;
        }

    sol.particular.assign(n, GaussRat(0));
    for (int j = 0; j < n; ++j)
        if (pivot_of_col[j] < 0) sol.free_vars.push_back(j);

    for (int j = 0; j < n; ++j) {
        int pr = pivot_of_col[j];
        if (pr >= 0) sol.particular[j] = -rows[pr].k;
    }
    for (int f : sol.free_vars) {
        std::vector<GaussRat> vec(n, GaussRat(0));
        vec[f] = GaussRat(1);
        for (int j = 0; j < n; ++j) {
            int pr = pivot_of_col[j];
            if (pr < 0) continue;
            auto it = rows[pr].c.find(f);
            if (it != rows[pr].c.end()) vec[j] = -it->second;
        }
        sol.nullspace.push_back(std::move(vec));
    }
    sol.kind = sol.free_vars.empty() ? SolveKind::Unique : SolveKind::Parametric;
    return sol;
}

LinSolution solve_linear(const std::vector<MPoly>& equations,
                         const std::vector<std::string>& unknowns) {
    LinearSystem sys;
    sys.nvars = static_cast<int>(unknowns.size());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < unknowns.size(); ++i) index[unknowns[i]] = static_cast<int>(i);

    for (const auto& eq : equations) {
        for (const auto& v : eq.vars())
            if (!index.count(v))
                fail(Err::NotAffine, "equation involves non-unknown variable " + v);
        LinearSystem::Row row;
        for (const auto& [m, c] : eq.terms()) {
            unsigned total = std::accumulate(m.begin(), m.end(), 0u);
            if (total == 0) {
                row.k += c;
            } else if (total == 1) {
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m[i] == 1) row.c[index.at(eq.vars()[i])] += c;
            } else {
                fail(Err::NotAffine, "equation is nonlinear in the unknowns: " + eq.to_string());
            }
        }
        for (auto it = row.c.begin(); it != row.c.end();)
            it = it->second.is_zero() ? row.c.erase(it) : std::next(it);
        sys.rows.push_back(std::move(row));
    }
    return solve_system(sys);
}

} // namespace weyl
