#include "weyl/diffop.hpp"

#include "weyl/error.hpp"

namespace weyl {

template <typename C>
OperatorT<C> OperatorT<C>::operator-() const {
    OperatorT r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

template <typename C>
OperatorT<C>& OperatorT<C>::operator+=(const OperatorT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

template <typename C>
OperatorT<C>& OperatorT<C>::operator-=(const OperatorT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

template <typename C>
OperatorT<C> OperatorT<C>::left_scaled(const C& f) const {
    OperatorT r = *this;
    for (auto& c : r.c_) c = f * c;
    r.trim();
    return r;
}

template <typename C>
OperatorT<C> OperatorT<C>::d_compose() const {
    if (is_zero()) return *this;
    std::vector<C> out(c_.size() + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        out[j + 1] += c_[j];
        out[j] += coeff::derivative_x(c_[j]);
    }
    return OperatorT(std::move(out));
}

template <typename C>
OperatorT<C> OperatorT<C>::compose(const OperatorT& p, const OperatorT& q) {
    if (p.is_zero() || q.is_zero()) return OperatorT();
    OperatorT out;
    OperatorT shift = q; // D^i * q as i grows
    const int n = p.order();
    for (int i = 0; i <= n; ++i) {
        if (!coeff::is_zero(p.c_[i])) out += shift.left_scaled(p.c_[i]);
        if (i < n) shift = shift.d_compose();
    }
    return out;
}

template <typename C>
OperatorT<C> OperatorT<C>::pow(unsigned e) const {
    OperatorT base = *this;
    OperatorT r = constant(coeff::one_of(static_cast<const C*>(nullptr)));
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

template class OperatorT<RatFunc>;
template class OperatorT<MPoly>;

void div_right(const DiffOp& m, const DiffOp& l, DiffOp* q, DiffOp* r) {
    if (l.is_zero()) fail(Err::DivisionByZero, "division by the zero operator");
    DiffOp quo;
    DiffOp rem = m;
    const int dl = l.order();
    while (!rem.is_zero() && rem.order() >= dl) {
        RatFunc c = rem.lead() / l.lead();
        unsigned k = static_cast<unsigned>(rem.order() - dl);
        DiffOp t = DiffOp::term(c, k);
        quo += t;
        rem -= t * l;
    }
    *q = std::move(quo);
    *r = std::move(rem);
}

void div_left_factor(const DiffOp& m, const DiffOp& l, DiffOp* q, DiffOp* r) {
    if (l.is_zero()) fail(Err::DivisionByZero, "division by the zero operator");
    DiffOp quo;
    DiffOp rem = m;
    const int dl = l.order();
    while (!rem.is_zero() && rem.order() >= dl) {
        RatFunc c = rem.lead() / l.lead();
        unsigned k = static_cast<unsigned>(rem.order() - dl);
        DiffOp t = DiffOp::term(c, k);
        quo += t;
        rem -= l * t;
    }
    *q = std::move(quo);
    *r = std::move(rem);
}

namespace {

MPoly constant_lead_or_fail(const PolyDiffOp& l) {
    if (l.is_zero()) fail(Err::DivisionByZero, "division by the zero operator");
    if (!l.lead().is_constant())
        fail(Err::UnsupportedStructure,
             "polynomial-operator division needs a constant leading coefficient");
    return l.lead();
}

} // namespace

void div_right(const PolyDiffOp& m, const PolyDiffOp& l, PolyDiffOp* q, PolyDiffOp* r) {
    GaussRat lc = constant_lead_or_fail(l).constant_value();
    GaussRat inv = lc.inverse();
    PolyDiffOp quo;
    PolyDiffOp rem = m;
    const int dl = l.order();
    while (!rem.is_zero() && rem.order() >= dl) {
        MPoly c = rem.lead().scaled(inv);
        unsigned k = static_cast<unsigned>(rem.order() - dl);
        PolyDiffOp t = PolyDiffOp::term(c, k);
        quo += t;
        rem -= t * l;
    }
    *q = std::move(quo);
    *r = std::move(rem);
}

void div_left_factor(const PolyDiffOp& m, const PolyDiffOp& l, PolyDiffOp* q, PolyDiffOp* r) {
    GaussRat lc = constant_lead_or_fail(l).constant_value();
    GaussRat inv = lc.inverse();
    PolyDiffOp quo;
    PolyDiffOp rem = m;
    const int dl = l.order();
    while (!rem.is_zero() && rem.order() >= dl) {
        MPoly c = rem.lead().scaled(inv);
        unsigned k = static_cast<unsigned>(rem.order() - dl);
        PolyDiffOp t = PolyDiffOp::term(c, k);
        quo += t;
        rem -= l * t;
    }
    *q = std::move(quo);
    *r = std::move(rem);
}

DiffOp monic(const DiffOp& p) {
    if (p.is_zero()) return p;
    return p.left_scaled(p.lead().inverse());
}

DiffOp gcrd_raw(const DiffOp& p, const DiffOp& q) {
    if (p.is_zero() && q.is_zero()) fail(Err::DivisionByZero, "gcrd of two zero operators");
    DiffOp a = p, b = q;
    if (a.order() < b.order()) std::swap(a, b);
    while (!b.is_zero()) {
        DiffOp quo, rem;
        div_right(a, b, &quo, &rem);
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

DiffOp gcrd(const DiffOp& p, const DiffOp& q) { return monic(gcrd_raw(p, q)); }

namespace {

void check_lambda_poly(const MPoly& p) {
    for (const auto& v : p.vars())
        if (v != "lambda")
            fail(Err::Internal, "poly_at_operator expects a univariate polynomial in lambda");
}

} // namespace

DiffOp poly_at_operator(const MPoly& p, const DiffOp& l) {
    check_lambda_poly(p);
    auto cs = p.coeffs_wrt("lambda");
    DiffOp out;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        out = out * l + DiffOp::constant(RatFunc(it->is_zero() ? GaussRat(0) : it->constant_value()));
    return out;
}

PolyDiffOp poly_at_operator(const MPoly& p, const PolyDiffOp& l) {
    check_lambda_poly(p);
    auto cs = p.coeffs_wrt("lambda");
    PolyDiffOp out;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        out = out * l + PolyDiffOp::constant(MPoly::constant(it->is_zero() ? GaussRat(0) : it->constant_value()));
    return out;
}

template <typename C>
bool is_standard_form(const OperatorT<C>& l) {
    if (l.is_zero()) return false;
    C one = coeff::one_of(static_cast<const C*>(nullptr));
    if (!(l.lead() == one)) return false;
    if (l.order() >= 1 && !coeff::is_zero(l.coeff(static_cast<unsigned>(l.order() - 1)))) return false;
    return true;
}

template bool is_standard_form<RatFunc>(const OperatorT<RatFunc>&);
template bool is_standard_form<MPoly>(const OperatorT<MPoly>&);

PolyDiffOp to_poly_op(const DiffOp& p) {
    std::vector<MPoly> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_poly())
            fail(Err::NotPolynomialCoefficients, "operator has a non-polynomial coefficient");
        GaussRat d = c.den().constant_value();
        cs.push_back(d.is_one() ? c.num() : c.num().scaled(d.inverse()));
    }
    return PolyDiffOp(std::move(cs));
}

DiffOp to_ratfunc_op(const PolyDiffOp& p) {
    std::vector<RatFunc> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        for (const auto& v : c.vars())
            if (v != "x")
                fail(Err::NotPolynomialCoefficients,
                     "operator coefficient involves a non-x variable: " + v);
        cs.emplace_back(c);
    }
    return DiffOp(std::move(cs));
}

namespace {

template <typename C>
std::string op_to_string_impl(const OperatorT<C>& p, bool (*needs_parens)(const C&),
                              std::string (*coeff_str)(const C&)) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.order(); j >= 0; --j) {
        C c = p.coeff(static_cast<unsigned>(j));
        if (coeff::is_zero(c)) continue;
        std::string dpart = j == 0 ? "" : (j == 1 ? "D" : "D^" + std::to_string(j));
        std::string cstr = coeff_str(c);
        std::string piece;
        if (dpart.empty()) {
            piece = cstr;
        } else if (cstr == "1") {
            piece = dpart;
        } else if (cstr == "-1") {
            piece = "-" + dpart;
        } else if (needs_parens(c)) {
            piece = "(" + cstr + ")*" + dpart;
        } else {
            piece = cstr + "*" + dpart;
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

bool mpoly_needs_parens(const MPoly& c) {
    if (c.term_count() > 1) return true;
    GaussRat v = c.terms().begin()->second;
    return v.re() != 0 && v.im() != 0;
}

std::string mpoly_coeff_str(const MPoly& c) { return c.to_string(); }

bool ratfunc_needs_parens(const RatFunc& c) {
    if (!c.is_poly()) return true;
    return mpoly_needs_parens(c.num());
}

std::string ratfunc_coeff_str(const RatFunc& c) { return c.to_string(); }

} // namespace

std::string op_to_string(const DiffOp& p) {
    return op_to_string_impl<RatFunc>(p, ratfunc_needs_parens, ratfunc_coeff_str);
}

std::string op_to_string(const PolyDiffOp& p) {
    return op_to_string_impl<MPoly>(p, mpoly_needs_parens, mpoly_coeff_str);
}

} // namespace weyl
