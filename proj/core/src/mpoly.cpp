#include "weyl/mpoly.hpp"

#include "weyl/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace weyl {

int var_rank(const std::string& name) {
    if (name == "x") return 0;
    if (name == "lambda") return 1;
    if (name == "mu") return 2;
    if (name == "chi") return 3;
    if (name == "xi") return 4;
    if (name.size() >= 2 && name[0] == 'a' &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); }))
        return 5;
    return 6;
}

bool var_less(const std::string& a, const std::string& b) {
    int ra = var_rank(a), rb = var_rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 5) { // a<k>: numeric comparison
        long na = std::stol(a.substr(1)), nb = std::stol(b.substr(1));
        if (na != nb) return na < nb;
    }
    return a < b;
}

bool GrlexDesc::operator()(const Mono& a, const Mono& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();
}

MPoly MPoly::constant(const GaussRat& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
    return p;
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Mono{1}, GaussRat(1));
    return p;
}

MPoly MPoly::monomial(const GaussRat& c,
                      const std::vector<std::pair<std::string, unsigned>>& pows) {
    MPoly p = constant(c);
    for (const auto& [v, e] : pows)
        if (e > 0) p = p * variable(v).pow(e);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
}

GaussRat MPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) fail(Err::Internal, "constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MPoly::var_index(const std::string& var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

void MPoly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::prune() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    std::vector<int> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(static_cast<int>(i));
        }
    TermMap nt;
    for (const auto& [m, c] : terms_) {
        Mono r(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) r[i] = m[keep[i]];
        nt.emplace(std::move(r), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

void MPoly::align(const MPoly& a, const MPoly& b, std::vector<std::string>* vars,
                  std::vector<int>* map_a, std::vector<int>* map_b) {
    vars->clear();
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
               std::back_inserter(*vars), var_less);
    vars->erase(std::unique(vars->begin(), vars->end()), vars->end());
    auto build = [&](const MPoly& p, std::vector<int>* map) {
        map->assign(p.vars_.size(), -1);
        for (std::size_t i = 0; i < p.vars_.size(); ++i) {
            auto it = std::lower_bound(vars->begin(), vars->end(), p.vars_[i], var_less);
            (*map)[i] = static_cast<int>(it - vars->begin());
        }
    };
    build(a, map_a);
    build(b, map_b);
}

MPoly MPoly::remapped(const std::vector<std::string>& vars, const std::vector<int>& map) const {
    MPoly r;
    r.vars_ = vars;
    for (const auto& [m, c] : terms_) {
        Mono nm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[map[i]] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    *this = *this + o;
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    *this = *this - o;
    return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    std::vector<std::string> vars;
    std::vector<int> ma, mb;
    MPoly::align(a, b, &vars, &ma, &mb);
    MPoly ra = a.remapped(vars, ma);
    MPoly rb = b.remapped(vars, mb);
    for (const auto& [m, c] : rb.terms_) ra.add_term(m, c);
    ra.prune();
    return ra;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    std::vector<std::string> vars;
    std::vector<int> ma, mb;
    MPoly::align(a, b, &vars, &ma, &mb);
    MPoly ra = a.remapped(vars, ma);
    MPoly rb = b.remapped(vars, mb);
    for (const auto& [m, c] : rb.terms_) ra.add_term(m, -c);
    ra.prune();
    return ra;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    std::vector<std::string> vars;
    std::vector<int> ma, mb;
    MPoly::align(a, b, &vars, &ma, &mb);
    MPoly ra = a.remapped(vars, ma);
    MPoly rb = b.remapped(vars, mb);
    MPoly out;
    out.vars_ = vars;
    const std::size_t n = vars.size();
    Mono m(n);
    for (const auto& [m1, c1] : ra.terms_)
        for (const auto& [m2, c2] : rb.terms_) {
            for (std::size_t i = 0; i < n; ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    out.prune();
    return out;
}

MPoly MPoly::scaled(const GaussRat& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly base = *this;
    MPoly r = constant(GaussRat(1));
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

long MPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    int idx = var_index(var);
    if (idx < 0) return 0;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[idx]));
    return d;
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(m.begin(), m.end(), 0ul)));
    return d;
}

bool MPoly::uses(const std::string& var) const { return var_index(var) >= 0; }

MPoly MPoly::derivative(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) return MPoly();
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (m[idx] == 0) continue;
        Mono nm = m;
        nm[idx] -= 1;
        r.add_term(nm, c * GaussRat(Rat(m[idx])));
    }
    r.prune();
    return r;
}

MPoly MPoly::eval(const std::string& var, const GaussRat& value) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        GaussRat f = c;
        for (unsigned k = 0; k < m[idx]; ++k) f *= value;
        Mono nm = m;
        nm[idx] = 0;
        r.add_term(nm, f);
    }
    r.prune();
    return r;
}

MPoly MPoly::subst(const std::string& var, const MPoly& value) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    MPoly out;
    for (const auto& [m, c] : terms_) {
        MPoly piece = constant(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            piece = piece * (static_cast<int>(i) == idx ? value.pow(m[i])
                                                        : variable(vars_[i]).pow(m[i]));
        }
        out += piece;
    }
    return out;
}

std::vector<MPoly> MPoly::coeffs_wrt(const std::string& var) const {
    long d = degree(var);
    std::vector<MPoly> cs(static_cast<std::size_t>(std::max(d, 0l)) + 1);
    int idx = var_index(var);
    if (idx < 0) {
        cs[0] = *this;
        return cs;
    }
    for (const auto& [m, c] : terms_) {
        Mono nm = m;
        unsigned k = nm[idx];
        nm[idx] = 0;
        MPoly& slot = cs[k];
        MPoly piece;
        piece.vars_ = vars_;
        piece.terms_.emplace(nm, c);
        piece.prune();
        slot += piece;
    }
    return cs;
}

MPoly MPoly::coeff_wrt(const std::string& var, unsigned k) const {
    auto cs = coeffs_wrt(var);
    if (k >= cs.size()) return MPoly();
    return cs[k];
}

MPoly MPoly::from_coeffs_wrt(const std::string& var, const std::vector<MPoly>& cs) {
    MPoly v = variable(var);
    MPoly out;
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) out += cs[k] * v.pow(static_cast<unsigned>(k));
    return out;
}

GaussRat MPoly::lead_coeff() const {
    if (terms_.empty()) return GaussRat(0);
    return terms_.begin()->second;
}

bool MPoly::try_exact_div(const MPoly& p, const MPoly& q, MPoly* out) {
    if (q.is_zero()) fail(Err::DivisionByZero, "exact_div by zero polynomial");
    if (p.is_zero()) {
        *out = MPoly();
        return true;
    }
    std::vector<std::string> vars;
    std::vector<int> mp, mq;
    align(p, q, &vars, &mp, &mq);
    TermMap rem = p.remapped(vars, mp).terms_;
    TermMap div = q.remapped(vars, mq).terms_;
    const Mono dm = div.begin()->first;
    const GaussRat dc = div.begin()->second;
    const std::size_t n = vars.size();

    TermMap quot;
    Mono t(n), s(n);
    auto acc = [](TermMap& map, const Mono& m, const GaussRat& c) {
        auto it = map.find(m);
        if (it == map.end()) {
            if (!c.is_zero()) map.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) map.erase(it);
        }
    };
    while (!rem.empty()) {
        const Mono& rm = rem.begin()->first;
        for (std::size_t i = 0; i < n; ++i) {
            if (rm[i] < dm[i]) return false;
            t[i] = rm[i] - dm[i];
        }
        GaussRat tc = rem.begin()->second / dc;
        acc(quot, t, tc);
        for (const auto& [m2, c2] : div) {
            for (std::size_t i = 0; i < n; ++i) s[i] = t[i] + m2[i];
            acc(rem, s, -(tc * c2));
        }
    }
    MPoly result;
    result.vars_ = vars;
    result.terms_ = std::move(quot);
    result.prune();
    *out = std::move(result);
    return true;
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
    MPoly out;
    if (!MPoly::try_exact_div(p, q, &out))
        fail(Err::NotDivisible, "polynomial division is not exact");
    return out;
}

namespace {

std::string mono_to_string(const std::vector<std::string>& vars, const Mono& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

} // namespace

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = mono_to_string(vars_, m);
        std::string piece;
        if (mono.empty()) {
            piece = c.to_string();
        } else if (c.is_one()) {
            piece = mono;
        } else if (c == GaussRat(-1)) {
            piece = "-" + mono;
        } else if (c.re() == 0 || c.im() == 0) {
            piece = c.to_string() + "*" + mono;
        } else {
            piece = "(" + c.to_string() + ")*" + mono;
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

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

} // namespace weyl
