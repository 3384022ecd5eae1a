#pragma once

#include "weyl/diffop.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

/// Coefficient matrix of the extended system
///   { D^(m-1-k) L, ..., D L, L, D^(n-1-k) M, ..., D M, M }
/// with n = ord L, m = ord M. Shape (n+m-2k) x (n+m-k); columns are indexed
/// by D-powers in descending order D^(n+m-k-1) ... D^0. Each row holds the
/// coefficients of the composed operator, Leibniz rule applied.
struct SylvesterK {
    int k = 0;
    int n = 0; // ord L
    int m = 0; // ord M
    PolyMat mat;
};

SylvesterK build_sylvester(const PolyDiffOp& l, const PolyDiffOp& m, int k);

/// The square submatrix that keeps every column with D-power > k plus the
/// single column with D-power i (0 <= i <= k).
PolyMat sylvester_sub(const SylvesterK& s, int i);

enum class DetPath {
    Auto,         // interpolate over non-x variables with sound row-sum bounds
    FractionFree, // full symbolic fraction-free elimination
};

/// det(S_0(L, M)). Inputs must be nonzero with polynomial coefficients.
MPoly diff_resultant(const PolyDiffOp& l, const PolyDiffOp& m,
                     DetPath path = DetPath::Auto);

/// Subresultant operator of index k: sum_i det(S_k^i) D^i, order <= k.
PolyDiffOp subresultant_op(const PolyDiffOp& l, const PolyDiffOp& m, int k,
                           DetPath path = DetPath::Auto);

/// Determinant dispatch shared by the resultant machinery: fraction-free, or
/// evaluation/interpolation over every non-x variable using row-sum bounds.
MPoly sylvester_det(const PolyMat& m, DetPath path);

} // namespace weyl
