#pragma once

#include "weyl/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

/// Fixed global variable precedence: x < lambda < mu < chi < xi < a1 < a2 < ...
/// then anything else by name. One total order keeps canonical forms stable
/// across every module.
int var_rank(const std::string& name);
bool var_less(const std::string& a, const std::string& b);

using Mono = std::vector<unsigned>;

/// Graded lexicographic, descending, so the map's first entry is the
/// leading term.
struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const;
};

using TermMap = std::map<Mono, GaussRat, GrlexDesc>;

/// Sparse multivariate polynomial over Q(i).
///
/// Canonical form: no zero coefficients are stored and the variable list
/// contains only variables that actually occur, sorted by the global
/// precedence. Equality is then plain structural equality.
class MPoly {
public:
    MPoly() = default; // zero
    MPoly(int n) { *this = constant(GaussRat(n)); }
    MPoly(const GaussRat& c) { *this = constant(c); }

    static MPoly constant(const GaussRat& c);
    static MPoly variable(const std::string& name);
    static MPoly monomial(const GaussRat& c,
                          const std::vector<std::pair<std::string, unsigned>>& pows);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_value() const; // requires is_constant()

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const GaussRat& c) const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    long degree(const std::string& var) const; // -1 for zero
    long total_degree() const;                 // -1 for zero
    bool uses(const std::string& var) const;

    MPoly derivative(const std::string& var) const;
    MPoly eval(const std::string& var, const GaussRat& value) const;
    MPoly subst(const std::string& var, const MPoly& value) const;

    /// Dense coefficient list of *this seen as a univariate polynomial in
    /// `var`; index = power of `var`, entries do not involve `var`.
    std::vector<MPoly> coeffs_wrt(const std::string& var) const;
    MPoly coeff_wrt(const std::string& var, unsigned k) const;
    static MPoly from_coeffs_wrt(const std::string& var, const std::vector<MPoly>& cs);

    /// Leading term under the canonical order; zero polynomial has none.
    GaussRat lead_coeff() const;

    /// Exact quotient p/q; throws Err::NotDivisible when it does not exist.
    friend MPoly exact_div(const MPoly& p, const MPoly& q);
    static bool try_exact_div(const MPoly& p, const MPoly& q, MPoly* out);

    std::string to_string() const;

private:
    std::vector<std::string> vars_; // sorted by var_less, only used vars
    TermMap terms_;

    void add_term(const Mono& m, const GaussRat& c);
    void prune();
    static void align(const MPoly& a, const MPoly& b, std::vector<std::string>* vars,
                      std::vector<int>* map_a, std::vector<int>* map_b);
    MPoly remapped(const std::vector<std::string>& vars, const std::vector<int>& map) const;
    int var_index(const std::string& var) const; // -1 if absent
};

MPoly exact_div(const MPoly& p, const MPoly& q);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace weyl
