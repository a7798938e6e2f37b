#include "cyclekit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cyclekit {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw DimensionError("monomial exponent length != nvars");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, e, Rational(1));
}

Polynomial Polynomial::from_term(const Term& t) {
    return t.is_zero() ? zero(t.nvars()) : monomial(t.nvars(), t.exp, t.coeff);
}

const Rational* Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

void Polynomial::check_same_n(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionError("polynomial arithmetic across different variable counts");
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_n(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_n(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_n(o);
    Polynomial r(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::partial(int v) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents f = e;
        f[v] -= 1;
        r.add_term(f, c * e[v]);
    }
    return r;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // graded-lex keys: the last key has maximal total degree
    return total_degree(terms_.rbegin()->first);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool printed_coeff = false;
        if (a != 1 || is_zero_exp(e)) {
            os << a;
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            if (i < names.size()) os << names[i];
            else os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    // count inversions while merging; equal indices collapse the product
    int inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& p) {
    DifferentialForm w(p.nvars());
    if (!p.is_zero()) w.comps_.emplace(IndexSet{}, p);
    return w;
}

DifferentialForm DifferentialForm::component(const Polynomial& p, const IndexSet& I) {
    for (std::size_t i = 0; i + 1 < I.size(); ++i)
        if (I[i] >= I[i + 1]) throw DomainError("form index subset must be strictly increasing");
    if (!I.empty() && (I.front() < 0 || I.back() >= p.nvars()))
        throw DimensionError("form index out of range");
    DifferentialForm w(p.nvars());
    if (!p.is_zero()) w.comps_.emplace(I, p);
    return w;
}

DifferentialForm DifferentialForm::dz(int nvars, int i) {
    return component(Polynomial::constant(nvars, Rational(1)), IndexSet{i});
}

bool DifferentialForm::is_pure() const {
    if (comps_.empty()) return true;
    const std::size_t q = comps_.begin()->first.size();
    for (const auto& [I, p] : comps_)
        if (I.size() != q) return false;
    return true;
}

int DifferentialForm::form_degree() const {
    if (comps_.empty()) return 0;
    if (!is_pure()) throw DomainError("form_degree on a mixed-degree form");
    return static_cast<int>(comps_.begin()->first.size());
}

void DifferentialForm::add_component(const IndexSet& I, const Polynomial& p) {
    if (p.is_zero()) return;
    for (std::size_t i = 0; i + 1 < I.size(); ++i)
        if (I[i] >= I[i + 1]) throw DomainError("form index subset must be strictly increasing");
    if (!I.empty() && (I.front() < 0 || I.back() >= n_))
        throw DimensionError("form index out of range");
    auto [it, inserted] = comps_.emplace(I, p);
    if (!inserted) {
        it->second = it->second + p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(n_);
    for (const auto& [I, p] : comps_) r.comps_.emplace(I, -p);
    return r;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    if (n_ != o.n_) throw DimensionError("form addition across different variable counts");
    DifferentialForm r = *this;
    for (const auto& [I, p] : o.comps_) r.add_component(I, p);
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator*(const Rational& c) const {
    DifferentialForm r(n_);
    if (c == 0) return r;
    for (const auto& [I, p] : comps_) r.comps_.emplace(I, p * c);
    return r;
}

DifferentialForm DifferentialForm::operator*(const Polynomial& p) const {
    DifferentialForm r(n_);
    for (const auto& [I, q] : comps_) r.add_component(I, q * p);
    return r;
}

std::string DifferentialForm::to_string(const std::vector<std::string>& names) const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, p] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string(names) << ")";
        for (int i : I) {
            os << " dz";
            if (static_cast<std::size_t>(i) < names.size()) os << "(" << names[i] << ")";
            else os << (i + 1);
        }
    }
    return os.str();
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("wedge across different variable counts");
    DifferentialForm r(a.nvars());
    IndexSet merged;
    for (const auto& [I, p] : a.components()) {
        for (const auto& [J, q] : b.components()) {
            const int s = merge_sign(I, J, merged);
            if (s == 0) continue;
            Polynomial pq = p * q;
            if (s < 0) pq = -pq;
            r.add_component(merged, pq);
        }
    }
    return r;
}

DifferentialForm exterior_d(const Polynomial& p) {
    DifferentialForm r(p.nvars());
    for (int v = 0; v < p.nvars(); ++v) {
        Polynomial dv = p.partial(v);
        if (!dv.is_zero()) r.add_component(IndexSet{v}, dv);
    }
    return r;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
    DifferentialForm r(w.nvars());
    IndexSet merged;
    for (const auto& [I, p] : w.components()) {
        for (int v = 0; v < w.nvars(); ++v) {
            Polynomial dv = p.partial(v);
            if (dv.is_zero()) continue;
            const int s = merge_sign(IndexSet{v}, I, merged);
            if (s == 0) continue;
            if (s < 0) dv = -dv;
            r.add_component(merged, dv);
        }
    }
    return r;
}

}  // namespace cyclekit
