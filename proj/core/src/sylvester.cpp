#include "weyl/sylvester.hpp"

#include "weyl/error.hpp"

#include <algorithm>
#include <set>

namespace weyl {

SylvesterK build_sylvester(const PolyDiffOp& l, const PolyDiffOp& m, int k) {
    if (l.is_zero() || m.is_zero()) fail(Err::ZeroOperator, "sylvester matrix of a zero operator");
    const int n = l.order();
    const int mo = m.order();
    if (k < 0 || k > std::min(n, mo) - 1)
        fail(Err::BadIndex, "subresultant index k out of range");

    SylvesterK s;
    s.k = k;
    s.n = n;
    s.m = mo;
    const int rows = n + mo - 2 * k;
    const int cols = n + mo - k;
    s.mat = PolyMat(rows, cols);

    int row = 0;
    auto emit = [&](const PolyDiffOp& base, int copies) {
        std::vector<PolyDiffOp> shifted(copies);
        if (copies > 0) shifted[0] = base;
        for (int j = 1; j < copies; ++j) shifted[j] = shifted[j - 1].d_compose();
        // listed from the highest D-prefix down to the raw operator
        for (int j = copies - 1; j >= 0; --j) {
            for (int c = 0; c < cols; ++c) {
                int power = cols - 1 - c;
                s.mat.at(row, c) = shifted[j].coeff(static_cast<unsigned>(power));
            }
            ++row;
        }
    };
    emit(l, mo - k);
    emit(m, n - k);
    return s;
}

PolyMat sylvester_sub(const SylvesterK& s, int i) {
    if (i < 0 || i > s.k) fail(Err::BadIndex, "column index out of range");
    const int cols = s.mat.cols;
    std::vector<int> keep;
    for (int c = 0; c < cols; ++c) {
        int power = cols - 1 - c;
        if (power > s.k || power == i) keep.push_back(c);
    }
    PolyMat sub(s.mat.rows, static_cast<int>(keep.size()));
    for (int r = 0; r < s.mat.rows; ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) sub.at(r, static_cast<int>(c)) = s.mat.at(r, keep[c]);
    return sub;
}

MPoly sylvester_det(const PolyMat& m, DetPath path) {
    if (path == DetPath::FractionFree) return det_fraction_free(m);
    std::set<std::string> extra;
    for (const auto& e : m.a)
        for (const auto& v : e.vars())
            if (v != "x") extra.insert(v);
    if (extra.empty()) return det_fraction_free(m);
    std::vector<std::string> vars(extra.begin(), extra.end());
    return det_eval_interp(m, vars, det_row_degree_bounds(m, vars));
}

MPoly diff_resultant(const PolyDiffOp& l, const PolyDiffOp& m, DetPath path) {
    SylvesterK s = build_sylvester(l, m, 0);
    return sylvester_det(s.mat, path);
}

PolyDiffOp subresultant_op(const PolyDiffOp& l, const PolyDiffOp& m, int k, DetPath path) {
    SylvesterK s = build_sylvester(l, m, k);
    std::vector<MPoly> coeffs(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) coeffs[static_cast<std::size_t>(i)] = sylvester_det(sylvester_sub(s, i), path);
    return PolyDiffOp(std::move(coeffs));
}

} // namespace weyl
