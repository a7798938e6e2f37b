#include "cyclekit/residue.hpp"

#include <algorithm>

#include "cyclekit/builders.hpp"
#include "cyclekit/homology.hpp"

namespace cyclekit {

JetFunctional JetFunctional::dirac(int support_codim, const Rational& scale) {
    JetFunctional f(support_codim);
    f.add(Exponents(support_codim, 0), scale);
    return f;
}

void JetFunctional::add(const Exponents& beta, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(beta.size()) != p_) throw DimensionError("jet index length != support codim");
    auto [it, inserted] = coeffs_.emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational JetFunctional::apply(const Polynomial& jet) const {
    if (jet.nvars() != p_) throw DimensionError("jet must live in the active variables");
    Rational v(0);
    for (const auto& [beta, c] : coeffs_)
        if (const Rational* a = jet.coeff(beta)) v += c * (*a);
    return v;
}

JetFunctional JetFunctional::scaled(const Rational& c) const {
    JetFunctional f(p_);
    if (c == 0) return f;
    for (const auto& [beta, k] : coeffs_) f.coeffs_.emplace(beta, k * c);
    return f;
}

namespace {

struct TupleShape {
    std::vector<int> variable;  // sigma(i), per tuple entry
    std::vector<int> power;     // a_i
    std::vector<int> active;    // sorted distinct variables
};

TupleShape tuple_shape(const std::vector<Term>& f, int nvars) {
    if (f.empty()) throw DomainError("empty tuple");
    TupleShape s;
    for (const auto& t : f) {
        if (t.nvars() != nvars) throw DimensionError("tuple term nvars mismatch");
        if (t.coeff == 0) throw DomainError("tuple entry with zero coefficient");
        int var = -1;
        for (int i = 0; i < nvars; ++i) {
            if (t.exp[i] > 0) {
                if (var >= 0) throw DomainError("tuple entry involves more than one variable");
                var = i;
            }
        }
        if (var < 0) throw DomainError("tuple entry is a constant");
        s.variable.push_back(var);
        s.power.push_back(t.exp[var]);
    }
    s.active = s.variable;
    std::sort(s.active.begin(), s.active.end());
    if (std::adjacent_find(s.active.begin(), s.active.end()) != s.active.end())
        throw DomainError("tuple repeats a variable; not a complete intersection of this shape");
    return s;
}

}  // namespace

JetFunctional ch_product_functional(const std::vector<Term>& f, int nvars) {
    const TupleShape shape = tuple_shape(f, nvars);
    const int p = static_cast<int>(f.size());

    // derivative product df_1 ^ ... ^ df_p
    DifferentialForm w = exterior_d(Polynomial::from_term(f[0]));
    for (int i = 1; i < p; ++i) w = wedge(w, exterior_d(Polynomial::from_term(f[i])));
    if (w.components().size() != 1)
        throw InternalConsistencyError("derivative product did not reduce to one component");
    const auto& [dz, g] = *w.components().begin();
    if (dz != IndexSet(shape.active.begin(), shape.active.end()))
        throw InternalConsistencyError("derivative product on unexpected dz factors");

    // reordering the residue factors into variable order contributes the same
    // permutation sign the dz factors picked up, so the two cancel
    int inversions = 0;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (shape.variable[i] > shape.variable[j]) ++inversions;
    const Rational reorder_sign = (inversions % 2 == 0) ? Rational(1) : Rational(-1);

    Rational coeff_product(1);
    for (const auto& t : f) coeff_product *= t.coeff;
    coeff_product *= reorder_sign;

    // residue exponents per active variable: a_i - 1 in sigma order
    Exponents target(nvars, 0);
    for (int i = 0; i < p; ++i) target[shape.variable[i]] = shape.power[i] - 1;

    JetFunctional out(p);
    for (const auto& [gamma, c] : g.terms()) {
        Exponents beta(p, 0);
        bool ok = true;
        for (int j = 0; j < nvars && ok; ++j) {
            const int rest = target[j] - gamma[j];
            auto pos = std::lower_bound(shape.active.begin(), shape.active.end(), j);
            if (pos != shape.active.end() && *pos == j) {
                if (rest < 0) ok = false;
                else beta[pos - shape.active.begin()] = rest;
            } else if (gamma[j] != 0) {
                ok = false;
            }
        }
        if (ok) out.add(beta, c / coeff_product);
    }
    return out;
}

PlVerification pl_verify(const std::vector<Term>& f, int nvars) {
    const TupleShape shape = tuple_shape(f, nvars);
    const int p = static_cast<int>(f.size());
    if (p != nvars) throw DomainError("point support needs one power per variable");

    PlVerification out;

    long long product = 1;
    for (int a : shape.power) product *= a;

    const JetFunctional func = ch_product_functional(f, nvars);
    out.functional_is_point_mass =
        func.coefficients().size() == 1 && func.coefficients().begin()->first == Exponents(p, 0);
    if (out.functional_is_point_mass) {
        const Rational& c = func.coefficients().begin()->second;
        if (denominator(c) == 1) out.functional_mult = static_cast<long long>(numerator(c));
    }

    std::vector<Exponents> gens;
    for (const auto& t : f) gens.push_back(t.exp);
    const MonomialIdeal I = minimalize(nvars, gens);
    std::vector<int> all(nvars);
    for (int i = 0; i < nvars; ++i) all[i] = i;
    out.ideal_length = geometric_multiplicity(I, PrimeSupport(all));

    const Cycle h0 = module_cycle(koszul(f, nvars), 0);
    if (h0.components().size() == 1 && h0.components().begin()->first == PrimeSupport(all))
        out.koszul_h0_mult = h0.components().begin()->second;

    out.pass = out.functional_is_point_mass && out.functional_mult == product &&
               out.ideal_length == product && out.koszul_h0_mult == product;
    return out;
}

bool contraction_normalization_check(const std::vector<Term>& f, int nvars) {
    const TupleShape shape = tuple_shape(f, nvars);
    const int p = static_cast<int>(f.size());
    if (p != nvars) throw DomainError("contraction identity stated for one power per variable");

    const Complex K = koszul(f, nvars);
    const FormEndomorphism lhs = koszul_D_contraction(K, p);

    DifferentialForm w = exterior_d(Polynomial::from_term(f[0]));
    for (int i = 1; i < p; ++i) w = wedge(w, exterior_d(Polynomial::from_term(f[i])));
    Rational fact(1);
    for (int i = 2; i <= p; ++i) fact *= i;

    FormEndomorphism rhs(nvars, EndoSlot{p, false, 1}, EndoSlot{0, false, 1}, p);
    rhs.add_entry(0, 0, w * fact);
    return lhs == rhs;
}

}  // namespace cyclekit
