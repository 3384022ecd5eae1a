#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace weyl {

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
using Rat = mpq_class;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// Element of Q(i): re + im*i with exact rational parts.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(int n) : re_(n), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(const Rat& re) : re_(re), im_(0) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRat(long num, long den);

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// re^2 + im^2, the norm form of Q(i); zero only for the zero element.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat inverse() const;

    /// Canonical text form "a/b + c/d*i" with zero parts suppressed.
    std::string to_string() const;

    /// Stable ordering for use as a container key (not a field order).
    static int cmp(const GaussRat& a, const GaussRat& b);

private:
    Rat re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

} // namespace weyl
