#pragma once

#include "weyl/mpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace weyl {

enum class SolveKind { Unique, Parametric, Inconsistent };

struct LinSolution {
    SolveKind kind = SolveKind::Inconsistent;
    std::vector<GaussRat> particular;
    std::vector<std::vector<GaussRat>> nullspace;
    std::vector<int> free_vars;
};

/// Sparse affine system: each row means  sum_j c[j]*x_j + k = 0.
struct LinearSystem {
    struct Row {
        std::map<int, GaussRat> c;
        GaussRat k;
    };
    int nvars = 0;
    std::vector<Row> rows;
};

/// Exact Gauss-Jordan elimination with deterministic sparse pivoting.
LinSolution solve_system(const LinearSystem& sys);

/// Exact verdict for a list of affine polynomial equations in the designated
/// unknowns. Every equation must have total degree <= 1 in the unknowns and
/// involve no other variables; otherwise Err::NotAffine.
LinSolution solve_linear(const std::vector<MPoly>& equations,
                         const std::vector<std::string>& unknowns);

} // namespace weyl
