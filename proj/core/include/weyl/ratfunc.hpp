#pragma once

#include "weyl/mpoly.hpp"

#include <string>

namespace weyl {

/// Rational function in x over Q(i), stored as num/den with den monic and
/// gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(MPoly::constant(GaussRat(1))) {}
    RatFunc(int n) : RatFunc(MPoly::constant(GaussRat(n))) {}
    RatFunc(const GaussRat& c) : RatFunc(MPoly::constant(c)) {}
    explicit RatFunc(MPoly numerator);
    RatFunc(MPoly numerator, MPoly denominator);

    static RatFunc x() { return RatFunc(MPoly::variable("x")); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    RatFunc derivative() const;

    std::string to_string() const;

private:
    MPoly num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace weyl
