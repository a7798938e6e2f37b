#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclekit/errors.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// One coefficient * monomial. The canonical zero term has coefficient 0 and
// zero exponents.
struct Term {
    Rational coeff;
    Exponents exp;

    Term() = default;
    Term(Rational c, Exponents e) : coeff(std::move(c)), exp(std::move(e)) {}

    static Term zero(int nvars) { return Term(Rational(0), Exponents(nvars, 0)); }
    bool is_zero() const { return coeff == 0; }
    int nvars() const { return static_cast<int>(exp.size()); }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.coeff == b.coeff && a.exp == b.exp;
    }
};

// Sparse exact multivariate polynomial over Q. Immutable value type; all
// operations return new values. No zero coefficients are ever stored and keys
// are kept in graded-lex order.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit Polynomial(int nvars) : n_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial monomial(int nvars, const Exponents& e, const Rational& c = Rational(1));
    static Polynomial variable(int nvars, int i);
    static Polynomial from_term(const Term& t);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // nullptr when absent
    const Rational* coeff(const Exponents& e) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;

    // Partial derivative with respect to variable v.
    Polynomial partial(int v) const;

    // Maximal total degree of a term, -1 for zero.
    int degree() const;

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names = {}) const;

    // Adds c * z^e in place, erasing the key on cancellation.
    void add_term(const Exponents& e, const Rational& c);

private:
    void check_same_n(const Polynomial& o) const;

    int n_;
    TermMap terms_;
};

// Strictly increasing subset of {0,...,n-1}: the dz factors of a form component.
using IndexSet = std::vector<int>;

// Exterior form with polynomial coefficients; only holomorphic dz factors are
// modeled. Components of different degree may coexist (a formal sum); most
// operations in the toolkit produce pure-degree forms.
class DifferentialForm {
public:
    using ComponentMap = std::map<IndexSet, Polynomial>;

    explicit DifferentialForm(int nvars) : n_(nvars) {}

    static DifferentialForm zero(int nvars) { return DifferentialForm(nvars); }
    static DifferentialForm from_polynomial(const Polynomial& p);
    // p * dz_{I}; I must be strictly increasing.
    static DifferentialForm component(const Polynomial& p, const IndexSet& I);
    static DifferentialForm dz(int nvars, int i);

    int nvars() const { return n_; }
    bool is_zero() const { return comps_.empty(); }
    const ComponentMap& components() const { return comps_; }

    // true when every stored component has the same subset size
    bool is_pure() const;
    // common degree of a pure form; 0 for the zero form, throws otherwise
    int form_degree() const;

    DifferentialForm operator-() const;
    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator*(const Rational& c) const;
    DifferentialForm operator*(const Polynomial& p) const;

    bool operator==(const DifferentialForm& o) const { return n_ == o.n_ && comps_ == o.comps_; }
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names = {}) const;

    void add_component(const IndexSet& I, const Polynomial& p);

private:
    int n_;
    ComponentMap comps_;
};

// Exterior product with shuffle signs; graded-anticommutative.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// Holomorphic exterior derivative on polynomial coefficients; d∘d = 0.
DifferentialForm exterior_d(const DifferentialForm& w);
DifferentialForm exterior_d(const Polynomial& p);

// Sign of merging two disjoint increasing index sets; 0 when they intersect.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out);

}  // namespace cyclekit
