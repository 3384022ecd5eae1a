#pragma once

#include "weyl/diffop.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

/// Lattice support of P = sum a_ij x^i D^j: the set of (i, j) with a_ij != 0.
struct NewtonDiagram {
    std::set<std::pair<long, long>> points;
};

/// Weight function (i, j) -> p*i + q*j. Primitive: gcd(p, q) = 1 when both
/// are positive; p + q > 0 always.
struct Filtration {
    long p = 0;
    long q = 0;
    long weight(long i, long j) const { return p * i + q * j; }
};

/// Weighted-homogeneous image of an initial part under x -> chi, D -> xi.
struct Symbol {
    MPoly poly;  // in chi, xi
    long weight = 0;
};

NewtonDiagram newton_diagram(const PolyDiffOp& op);

struct DeltaInitial {
    long delta = 0;
    PolyDiffOp ini;
    Symbol sym;
};

/// Max weight over the diagram, the sum of terms attaining it, and its
/// commutative image. Err::ZeroOperator for the zero operator.
DeltaInitial delta_initial(const PolyDiffOp& op, const Filtration& f);

/// The unique primitive weighting for which the point (0, n) of the diagram
/// ties for maximal weight with another support point: the outer normal of
/// the Newton-polygon edge at (0, n). Err::TrivialOperator when no point with
/// i > 0 exists.
Filtration test_filtration(const PolyDiffOp& l);

struct DixmierVerdict {
    bool pass = false;
    GaussRat c; // sigma(M)^v = c * sigma(L)^w when pass
};

/// Necessary condition for M to commute with L under the given weighting:
/// sigma(M)^v proportional to sigma(L)^w with v = delta(L), w = delta(M).
DixmierVerdict dixmier_test(const PolyDiffOp& l, const PolyDiffOp& m, const Filtration& f);

/// The Poisson-type bracket of the two symbols; equals the symbol of [L, M]
/// when nonzero. Err::BracketVanishes when it is zero.
MPoly bracket_symbol(const PolyDiffOp& l, const PolyDiffOp& m, const Filtration& f);

struct OrderConstraints {
    Filtration filtration;
    MPoly base;         // h with sigma(L) = c * h^e
    int power = 1;      // e
    long xi_degree = 0; // d = deg_xi h, with d * e = ord L
    long modulus = 0;   // ord L
    std::vector<long> residues; // admissible ord(M) mod modulus
};

/// Admissible order residues for members of the centralizer of L, derived
/// from the symbol power structure under the test filtration.
/// Err::NotAPower when the symbol shape proves the centralizer trivial,
/// Err::UnsupportedStructure for shapes outside the supported analysis.
OrderConstraints order_constraints(const PolyDiffOp& l);

} // namespace weyl
