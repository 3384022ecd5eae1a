#include "weyl/ratfunc.hpp"

#include "weyl/error.hpp"
#include "weyl/polygcd.hpp"

#include <ostream>

namespace weyl {

namespace {
void check_x_only(const MPoly& p) {
    for (const auto& v : p.vars())
        if (v != "x") fail(Err::Internal, "RatFunc coefficients live in Q(i)(x), got variable " + v);
}
} // namespace

RatFunc::RatFunc(MPoly numerator) : num_(std::move(numerator)), den_(MPoly::constant(GaussRat(1))) {
    check_x_only(num_);
}

RatFunc::RatFunc(MPoly numerator, MPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    check_x_only(num_);
    check_x_only(den_);
    if (den_.is_zero()) fail(Err::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(GaussRat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = upoly_gcd(num_, den_, "x");
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    long d = den_.degree("x");
    GaussRat lc = den_.coeff_wrt("x", static_cast<unsigned>(d)).constant_value();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::derivative() const {
    MPoly dn = num_.derivative("x");
    if (is_poly()) {
        GaussRat c = den_.constant_value();
        return c.is_one() ? RatFunc(dn) : RatFunc(dn, den_);
    }
    MPoly dd = den_.derivative("x");
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

std::string RatFunc::to_string() const {
    if (is_poly()) {
        if (den_.constant_value().is_one()) return num_.to_string();
        return RatFunc(num_.scaled(den_.constant_value().inverse())).to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

} // namespace weyl
