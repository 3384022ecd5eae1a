#include "weyl/rational.hpp"

#include "weyl/error.hpp"

#include <ostream>

namespace weyl {

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail(Err::SyntaxError, "bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

GaussRat::GaussRat(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
    re_.canonicalize();
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    Rat n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

int GaussRat::cmp(const GaussRat& a, const GaussRat& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c;
    return ::cmp(a.im_, b.im_);
}

std::string GaussRat::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = rat_to_string(re_);
    if (im_ != 0) {
        Rat a = abs(im_);
        std::string mag = (a == 1) ? "i" : rat_to_string(a) + "*i";
        if (out.empty()) {
            out = (im_ < 0) ? "-" + mag : mag;
        } else {
            out += (im_ < 0) ? " - " : " + ";
            out += mag;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.to_string(); }

} // namespace weyl
