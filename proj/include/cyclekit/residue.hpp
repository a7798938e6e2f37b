#pragma once

#include <map>
#include <vector>

#include "cyclekit/poly.hpp"

namespace cyclekit {

// Functional on polynomial jets at the origin of a codimension-p coordinate
// point: psi -> sum c_beta * (d^beta psi / beta!)(0), i.e. a finite
// combination of Taylor-coefficient extractions. The 1/(2 pi i)^p
// normalization is divided out at construction, so values are rational.
class JetFunctional {
public:
    explicit JetFunctional(int support_codim) : p_(support_codim) {}

    static JetFunctional dirac(int support_codim, const Rational& scale = Rational(1));

    int support_codim() const { return p_; }
    const std::map<Exponents, Rational, GradedLexLess>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Exponents& beta, const Rational& c);

    // jet lives in the p active variables
    Rational apply(const Polynomial& jet) const;

    JetFunctional scaled(const Rational& c) const;

    bool operator==(const JetFunctional& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

private:
    int p_;
    std::map<Exponents, Rational, GradedLexLess> coeffs_;
};

// The residue product of a tuple f_i = c_i z_{sigma(i)}^{a_i} with distinct
// variables, paired against the derivative factors of the tuple: acts on a
// jet as extraction of Taylor coefficients. Computed by expanding the
// derivative product symbolically, never by the closed form.
JetFunctional ch_product_functional(const std::vector<Term>& f, int nvars);

struct PlVerification {
    long long functional_mult = 0;  // coefficient of the point evaluation
    bool functional_is_point_mass = false;
    long long ideal_length = 0;
    long long koszul_h0_mult = 0;
    bool pass = false;
};

// Three independent computations of the multiplicity of the common zero:
// residue functional, standard monomial count, Koszul level-0 cycle.
// Requires point support: one power per variable, p = n.
PlVerification pl_verify(const std::vector<Term>& f, int nvars);

// D(phi_1)...D(phi_p) of the Koszul complex equals p! times the derivative
// product on the rank-one block, pinning the factorial normalization.
bool contraction_normalization_check(const std::vector<Term>& f, int nvars);

}  // namespace cyclekit
