#pragma once

#include "weyl/mpoly.hpp"

#include <string>
#include <vector>

namespace weyl {

struct PolyMat {
    int rows = 0, cols = 0;
    std::vector<MPoly> a;

    PolyMat() = default;
    PolyMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    MPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const MPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Exact determinant. Minor expansion for small sizes, one-step fraction-free
/// (Bareiss) elimination otherwise; all divisions are exact.
MPoly det_fraction_free(const PolyMat& m);

/// Determinant by evaluation/interpolation over `eval_vars`. Sound only when
/// `degree_bounds` dominate the determinant's true degree in each variable;
/// callers opt in with explicit bounds.
MPoly det_eval_interp(const PolyMat& m, const std::vector<std::string>& eval_vars,
                      const std::vector<long>& degree_bounds);

/// Per-variable degree bounds that are always sound: the sum over rows of the
/// row-maximum degree (a determinant is a sum of one-entry-per-row products).
std::vector<long> det_row_degree_bounds(const PolyMat& m, const std::vector<std::string>& vars);

} // namespace weyl
