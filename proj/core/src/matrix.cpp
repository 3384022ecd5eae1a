#include "weyl/matrix.hpp"

#include "weyl/error.hpp"

#include <algorithm>

namespace weyl {

namespace {

MPoly det_minor_expansion(const PolyMat& m, std::vector<int> cols) {
    const int n = static_cast<int>(cols.size());
    const int row = m.rows - n;
    if (n == 1) return m.at(row, cols[0]);
    MPoly out;
    for (int k = 0; k < n; ++k) {
        const MPoly& e = m.at(row, cols[k]);
        if (e.is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(cols.size() - 1);
        for (int j = 0; j < n; ++j)
            if (j != k) sub.push_back(cols[j]);
        MPoly minor = det_minor_expansion(m, std::move(sub));
        if (k % 2 == 0)
            out += e * minor;
        else
            out -= e * minor;
    }
    return out;
}

} // namespace

MPoly det_fraction_free(const PolyMat& m) {
    if (m.rows != m.cols) fail(Err::BadIndex, "determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return MPoly::constant(GaussRat(1));
    if (n <= 4) {
        std::vector<int> cols(n);
        for (int j = 0; j < n; ++j) cols[j] = j;
        // expand from the last rows upward: reuse the helper with full rows
        PolyMat top = m;
        return det_minor_expansion(top, cols);
    }

    PolyMat w = m;
    MPoly prev = MPoly::constant(GaussRat(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        std::size_t best = 0;
        for (int i = k; i < n; ++i) {
            const MPoly& e = w.at(i, k);
            if (e.is_zero()) continue;
            if (pivot < 0 || e.term_count() < best) {
                pivot = i;
                best = e.term_count();
            }
        }
        if (pivot < 0) return MPoly(); // zero column: singular
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        const MPoly pv = w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly t = w.at(i, j) * pv - w.at(i, k) * w.at(k, j);
                w.at(i, j) = exact_div(t, prev);
            }
            w.at(i, k) = MPoly();
        }
        prev = pv;
    }
    MPoly d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::vector<long> det_row_degree_bounds(const PolyMat& m, const std::vector<std::string>& vars) {
    std::vector<long> bounds(vars.size(), 0);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        long total = 0;
        for (int i = 0; i < m.rows; ++i) {
            long rowmax = 0;
            for (int j = 0; j < m.cols; ++j)
                rowmax = std::max(rowmax, std::max(0l, m.at(i, j).degree(vars[v])));
            total += rowmax;
        }
        bounds[v] = total;
    }
    return bounds;
}

MPoly det_eval_interp(const PolyMat& m, const std::vector<std::string>& eval_vars,
                      const std::vector<long>& degree_bounds) {
    if (eval_vars.size() != degree_bounds.size())
        fail(Err::BadIndex, "one degree bound per evaluation variable required");
    if (eval_vars.empty()) return det_fraction_free(m);

    const std::string& var = eval_vars.front();
    const long d = degree_bounds.front();
    if (d < 0) fail(Err::GridDegenerate, "negative degree bound");
    std::vector<std::string> rest_vars(eval_vars.begin() + 1, eval_vars.end());
    std::vector<long> rest_bounds(degree_bounds.begin() + 1, degree_bounds.end());

    std::vector<GaussRat> nodes;
    std::vector<MPoly> values;
    nodes.reserve(d + 1);
    for (long t = 0; t <= d; ++t) {
        GaussRat node{Rat(t)};
        for (const auto& seen : nodes)
            if (seen == node) fail(Err::GridDegenerate, "interpolation nodes collide");
        PolyMat me(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) me.at(i, j) = m.at(i, j).eval(var, node);
        values.push_back(det_eval_interp(me, rest_vars, rest_bounds));
        nodes.push_back(node);
    }

    // Lagrange recombination in `var`
    MPoly v = MPoly::variable(var);
    MPoly out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (values[i].is_zero()) continue;
        MPoly basis = MPoly::constant(GaussRat(1));
        GaussRat denom(1);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * (v - MPoly::constant(nodes[j]));
            denom *= nodes[i] - nodes[j];
        }
        out += basis * values[i].scaled(denom.inverse());
    }
    return out;
}

} // namespace weyl
