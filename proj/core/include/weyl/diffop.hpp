#pragma once

#include "weyl/mpoly.hpp"
#include "weyl/ratfunc.hpp"

#include <climits>
#include <string>
#include <vector>

namespace weyl {

namespace coeff {
inline bool is_zero(const RatFunc& c) { return c.is_zero(); }
inline bool is_zero(const MPoly& c) { return c.is_zero(); }
inline RatFunc derivative_x(const RatFunc& c) { return c.derivative(); }
inline MPoly derivative_x(const MPoly& c) { return c.derivative("x"); }
inline RatFunc one_of(const RatFunc*) { return RatFunc(1); }
inline MPoly one_of(const MPoly*) { return MPoly::constant(GaussRat(1)); }
} // namespace coeff

/// Order of the zero operator: a sentinel below every honest order, so order
/// arithmetic never silently misfires.
inline constexpr int kZeroOpOrder = INT_MIN;

/// Ordinary differential operator sum_j c_j(x) D^j under the composition rule
/// D*u = u*D + u'.
template <typename C>
class OperatorT {
public:
    OperatorT() = default; // zero operator
    explicit OperatorT(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static OperatorT zero() { return OperatorT(); }
    static OperatorT constant(const C& c) { return OperatorT(std::vector<C>{c}); }
    static OperatorT d(unsigned k = 1) {
        std::vector<C> v(k + 1);
        v[k] = coeff::one_of(static_cast<const C*>(nullptr));
        return OperatorT(std::move(v));
    }
    static OperatorT term(const C& c, unsigned k) {
        std::vector<C> v(k + 1);
        v[k] = c;
        return OperatorT(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int order() const { return c_.empty() ? kZeroOpOrder : static_cast<int>(c_.size()) - 1; }
    const C& lead() const { return c_.back(); }
    C coeff(unsigned j) const { return j < c_.size() ? c_[j] : C(); }
    const std::vector<C>& coeffs() const { return c_; }

    OperatorT operator-() const;
    OperatorT& operator+=(const OperatorT& o);
    OperatorT& operator-=(const OperatorT& o);
    friend OperatorT operator+(OperatorT a, const OperatorT& b) { return a += b; }
    friend OperatorT operator-(OperatorT a, const OperatorT& b) { return a -= b; }
    friend OperatorT operator*(const OperatorT& a, const OperatorT& b) { return compose(a, b); }

    /// Multiply every coefficient on the left by a function of x.
    OperatorT left_scaled(const C& f) const;

    OperatorT pow(unsigned e) const;

    friend bool operator==(const OperatorT& a, const OperatorT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const OperatorT& a, const OperatorT& b) { return !(a == b); }

    /// D composed on the left: coefficients shift up and pick up derivatives.
    OperatorT d_compose() const;

    static OperatorT compose(const OperatorT& p, const OperatorT& q);

private:
    std::vector<C> c_;
    void trim() {
        while (!c_.empty() && coeff::is_zero(c_.back())) c_.pop_back();
    }
};

using DiffOp = OperatorT<RatFunc>;
using PolyDiffOp = OperatorT<MPoly>;

template <typename C>
OperatorT<C> commutator(const OperatorT<C>& p, const OperatorT<C>& q) {
    return p * q - q * p;
}

/// Right division m = q*l + r with ord(r) < ord(l); unique.
void div_right(const DiffOp& m, const DiffOp& l, DiffOp* q, DiffOp* r);

/// Division with the quotient composed on the right of the divisor:
/// m = l*q + r with ord(r) < ord(l); unique.
void div_left_factor(const DiffOp& m, const DiffOp& l, DiffOp* q, DiffOp* r);

/// Same division for operators with polynomial coefficients; the divisor must
/// have a constant (x-free, parameter-free) leading coefficient so quotients
/// stay polynomial.
void div_left_factor(const PolyDiffOp& m, const PolyDiffOp& l, PolyDiffOp* q, PolyDiffOp* r);
void div_right(const PolyDiffOp& m, const PolyDiffOp& l, PolyDiffOp* q, PolyDiffOp* r);

/// Greatest common right divisor by the Euclidean remainder sequence.
DiffOp gcrd(const DiffOp& p, const DiffOp& q);        // monic
DiffOp gcrd_raw(const DiffOp& p, const DiffOp& q);    // last nonzero remainder as computed

DiffOp monic(const DiffOp& p);

/// p(l) for a univariate polynomial p (variable "lambda" by convention),
/// evaluated by Horner in the operator ring.
DiffOp poly_at_operator(const MPoly& p, const DiffOp& l);
PolyDiffOp poly_at_operator(const MPoly& p, const PolyDiffOp& l);

template <typename C>
bool is_standard_form(const OperatorT<C>& l);

/// Conversions between the two coefficient rings.
PolyDiffOp to_poly_op(const DiffOp& p);     // Err::NotPolynomialCoefficients on denominators
DiffOp to_ratfunc_op(const PolyDiffOp& p);  // coefficients must involve x only

std::string op_to_string(const DiffOp& p);
std::string op_to_string(const PolyDiffOp& p);

} // namespace weyl
