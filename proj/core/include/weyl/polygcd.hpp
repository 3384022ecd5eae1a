#pragma once

#include "weyl/mpoly.hpp"

#include <string>
#include <tuple>

namespace weyl {

/// Division with remainder of univariate polynomials over Q(i).
/// Both inputs may involve only `var`.
void upoly_divrem(const MPoly& a, const MPoly& b, const std::string& var, MPoly* q, MPoly* r);

/// Monic gcd of univariate polynomials over Q(i) (Euclid).
MPoly upoly_gcd(const MPoly& a, const MPoly& b, const std::string& var);

/// Content of p viewed in (Q(i)[co])[main]; inputs restricted to at most two
/// variables. Result is a monic polynomial in the co-variable (or 1).
MPoly content_wrt(const MPoly& p, const std::string& main);
MPoly primitive_part_wrt(const MPoly& p, const std::string& main);

/// Gcd in (Q(i)[co])[main] by the primitive pseudo-remainder sequence,
/// for polynomials in at most two variables. Result is primitive with the
/// content gcd multiplied back in, normalized to unit leading coefficient.
MPoly bipoly_gcd(const MPoly& a, const MPoly& b, const std::string& main);

struct PowerDecomposition {
    MPoly h;    // normalized base
    int r;      // power with f = c * h^r
    GaussRat c; // unit
};

/// Decompose f = c*h^r with h the square-free part of f in `main` whenever f
/// is a perfect power of it; otherwise r = 1 and h is f itself, normalized.
PowerDecomposition squarefree_power(const MPoly& f, const std::string& main);

/// Divide out the unit: returns (g, c) with p = c*g and g having leading
/// coefficient 1 on the top `main`-coefficient.
std::pair<MPoly, GaussRat> unit_normalize(const MPoly& p, const std::string& main);

} // namespace weyl
