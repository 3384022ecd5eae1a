#pragma once

#include "weyl/diffop.hpp"
#include "weyl/linsolve.hpp"
#include "weyl/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyl {

/// Affine family of monic operators of a fixed order commuting with L:
/// particular + span(basis). Empty `found` means the ansatz admits no monic
/// solution at that order.
struct CentralizerFamily {
    bool found = false;
    int order = 0;
    PolyDiffOp particular;
    std::vector<PolyDiffOp> basis;
};

/// Default per-coefficient x-degree bounds for the commutation ansatz:
/// deg c_j <= ceil(deg_x(L) * (m - j) / ord(L)) + 2.
std::vector<long> default_degbounds(const PolyDiffOp& l, int m);

/// Solve [L, M] = 0 for a monic order-m ansatz M = D^m + sum c_j(x) D^j with
/// unknown polynomial coefficients bounded by `degbounds`.
CentralizerFamily centralizer_search(const PolyDiffOp& l, int m,
                                     std::vector<long> degbounds = {});

/// Staged elimination for a parameterized L: unknown ansatz coefficients are
/// eliminated while their pivots are parameter-free; what cannot be resolved
/// is returned as polynomial conditions on the parameters (and any stuck
/// unknowns).
struct FamilyObstructions {
    std::vector<MPoly> obstructions; // conditions in the parameters only
    std::vector<MPoly> mixed;        // conditions still involving ansatz unknowns
};
FamilyObstructions centralizer_obstructions(const PolyDiffOp& l, int m,
                                            const std::vector<std::string>& params,
                                            std::vector<long> degbounds = {});

/// Decide whether M is a polynomial in L, using the spectral curve shape
/// (mu - p0(lambda))^n plus an exact operator check.
struct TrivialityResult {
    bool trivial = false;
    MPoly p0; // M = p0(L) when trivial
};
TrivialityResult triviality_test(const PolyDiffOp& l, const PolyDiffOp& m);

/// Iterated left-factor division remainders of M by L:
/// M = R1 + L R2 + ... + L^g R_{g+1} + L^{g+1} Q.
struct RemainderSequence {
    std::vector<PolyDiffOp> r; // R1 ... R_{g+1}
    PolyDiffOp q;              // final quotient
};
RemainderSequence remainder_sequence(const PolyDiffOp& m, const PolyDiffOp& l, int g);

/// Candidate generator B of order 2(2g+1) built from the remainder sequence,
/// with free parameters a1..a_d, d = min(q - g, g).
struct Candidate {
    PolyDiffOp b;                    // coefficients in x and a1..a_d
    MPoly p;                         // 1 + a1*lambda + ... + a_d*lambda^d
    int d = 0;
    std::vector<std::string> params; // "a1".."a_d"
};
Candidate build_candidate(const PolyDiffOp& l, const std::vector<PolyDiffOp>& remainders,
                          int g, int q);

/// Coefficient polynomials q_{i,j}(a) of x^i D^j in [L, B]; zero entries
/// omitted.
std::vector<MPoly> commutator_system(const PolyDiffOp& l, const PolyDiffOp& b);

/// Solve a polynomial system in a1..a_d that is linear after replacing each
/// nonlinear monomial by a fresh unknown; back-substitution resolves the
/// fresh unknowns. Verifies every input polynomial at the found point.
struct ParamSolution {
    bool found = false;
    std::vector<GaussRat> values; // a1..a_d
};
ParamSolution solve_param_system(const std::vector<MPoly>& system,
                                 const std::vector<std::string>& params);

struct BCReport {
    enum class Verdict { TrivialInCL, AlreadyBCPair, NewGenerator };
    Verdict verdict = Verdict::TrivialInCL;
    PolyDiffOp b;       // normalized (monic) generator; zero for TrivialInCL
    PolyDiffOp b_raw;   // candidate exactly as constructed (NewGenerator only)
    int g = 0;
    int order = 0;
    MPoly h;            // mu^2 - R_{2g+1}(lambda) for the returned generator
    MPoly b0, b1;       // curve data of the input pair: h_M = mu^2 - b1*mu - b0
    MPoly p0;           // removed C[L] part (b1/2), or the full polynomial if trivial
    MPoly p;            // normalized M equals p(L) * b_raw, p(0) = 1
    std::vector<GaussRat> solution;
    bool irreducibility_assumed = true;
};

/// Full generator search for an order-4 operator in standard form: strips the
/// C[L] part of M, then looks for the smallest g whose candidate system is
/// solvable; returns M itself when none is.
BCReport bc_pair(const PolyDiffOp& l4, const PolyDiffOp& m);

} // namespace weyl
