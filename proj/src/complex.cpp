#include "cyclekit/complex.hpp"

#include <algorithm>

namespace cyclekit {

Exponents GradedMatrix::required_exponent(int row, int col) const {
    const Exponents& s = src_.gens.at(col);
    const Exponents& t = tgt_.gens.at(row);
    Exponents d = exp_sub(s, t);
    for (int x : d)
        if (x < 0)
            throw DomainError("entry would have a negative multidegree; matrix not multigraded");
    return d;
}

void GradedMatrix::add_entry(int row, int col, const Rational& c) {
    if (c == 0) return;
    Exponents d = required_exponent(row, col);
    auto key = std::make_pair(row, col);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, Term(c, std::move(d)));
    } else {
        it->second.coeff += c;
        if (it->second.coeff == 0) entries_.erase(it);
    }
}

const Term* GradedMatrix::entry(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? nullptr : &it->second;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    // compose: (this) after (o); o.target must equal this->source
    if (o.tgt_.gens != src_.gens)
        throw CompositionError("matrix product with mismatched middle module");
    GradedMatrix r(o.src_, tgt_);
    for (const auto& [ab, t1] : entries_) {
        for (const auto& [bc, t2] : o.entries_) {
            if (ab.second != bc.first) continue;
            r.add_entry(ab.first, bc.second, t1.coeff * t2.coeff);
        }
    }
    return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (o.src_.gens != src_.gens || o.tgt_.gens != tgt_.gens)
        throw CompositionError("matrix sum with mismatched modules");
    GradedMatrix r = *this;
    for (const auto& [rc, t] : o.entries_) r.add_entry(rc.first, rc.second, t.coeff);
    return r;
}

GradedMatrix GradedMatrix::operator-() const { return scaled(Rational(-1)); }

GradedMatrix GradedMatrix::scaled(const Rational& c) const {
    GradedMatrix r(src_, tgt_);
    if (c == 0) return r;
    for (const auto& [rc, t] : entries_) r.entries_.emplace(rc, Term(t.coeff * c, t.exp));
    return r;
}

GradedMatrix GradedMatrix::identity(const FreeModule& m) {
    GradedMatrix r(m, m);
    for (int i = 0; i < m.rank(); ++i) r.add_entry(i, i, Rational(1));
    return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return src_.gens == o.src_.gens && tgt_.gens == o.tgt_.gens && entries_ == o.entries_;
}

Complex::Complex(int nvars, std::vector<FreeModule> modules, std::vector<GradedMatrix> differentials,
                 bool parity_shift)
    : n_(nvars), modules_(std::move(modules)), diffs_(std::move(differentials)), parity_shift_(parity_shift) {
    for (std::size_t k = 0; k < modules_.size(); ++k) modules_[k].level = static_cast<int>(k);
    validate();
}

void Complex::validate() const {
    if (modules_.empty()) throw DomainError("complex needs at least level 0");
    if (diffs_.size() + 1 != modules_.size())
        throw DomainError("complex needs one differential per positive level");
    for (const auto& m : modules_)
        for (const auto& g : m.gens)
            if (static_cast<int>(g.size()) != n_)
                throw DimensionError("generator multidegree length != nvars");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const GradedMatrix& d = diffs_[k];
        if (d.source().gens != modules_[k + 1].gens || d.target().gens != modules_[k].gens)
            throw DomainError("differential modules do not match the complex levels");
        for (const auto& [rc, t] : d.entries()) {
            if (t.exp != exp_sub(modules_[k + 1].gens.at(rc.second), modules_[k].gens.at(rc.first)))
                throw DomainError("differential entry violates the multigrading");
            for (int x : t.exp)
                if (x < 0) throw DomainError("differential entry violates the multigrading");
        }
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw DomainError("differentials do not compose to zero");
    }
}

const FreeModule& Complex::module(int level) const {
    static const FreeModule kZero{-1, {}};
    if (level < 0 || level > top_level()) return kZero;
    return modules_[level];
}

const GradedMatrix& Complex::differential(int k) const {
    if (k < 1 || k > top_level())
        throw DomainError("differential index outside 1..N");
    return diffs_[k - 1];
}

Exponents Complex::degree_cap() const {
    Exponents cap(n_, 0);
    for (const auto& m : modules_)
        for (const auto& g : m.gens) cap = exp_max(cap, g);
    return cap;
}

Complex Complex::tilde() const { return Complex(n_, modules_, diffs_, !parity_shift_); }

Complex Complex::shifted_degrees(const Exponents& d) const {
    std::vector<FreeModule> mods = modules_;
    for (auto& m : mods)
        for (auto& g : m.gens) g = exp_add(g, d);
    std::vector<GradedMatrix> diffs;
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        GradedMatrix m(mods[k + 1], mods[k]);
        for (const auto& [rc, t] : diffs_[k].entries()) m.add_entry(rc.first, rc.second, t.coeff);
        diffs.push_back(std::move(m));
    }
    return Complex(n_, std::move(mods), std::move(diffs), parity_shift_);
}

Complex Complex::shifted_levels(int start) const {
    if (start < 0) throw DomainError("level shift must be non-negative");
    std::vector<FreeModule> mods(start);
    for (auto& m : mods) m.gens.clear();
    for (const auto& m : modules_) mods.push_back(m);
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k < start; ++k) diffs.emplace_back(mods[k], mods[k - 1]);
    if (start >= 1) diffs.emplace_back(mods[start], mods[start - 1]);
    for (const auto& d : diffs_) diffs.push_back(d);
    return Complex(n_, std::move(mods), std::move(diffs), parity_shift_);
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("direct sum across variable counts");
    const int top = std::max(a.top_level(), b.top_level());
    std::vector<FreeModule> mods(top + 1);
    for (int k = 0; k <= top; ++k) {
        mods[k].gens = a.module(k).gens;
        for (const auto& g : b.module(k).gens) mods[k].gens.push_back(g);
    }
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= top; ++k) {
        GradedMatrix d(mods[k], mods[k - 1]);
        const int arows = a.module(k - 1).rank(), acols = a.module(k).rank();
        if (k <= a.top_level())
            for (const auto& [rc, t] : a.differential(k).entries())
                d.add_entry(rc.first, rc.second, t.coeff);
        if (k <= b.top_level())
            for (const auto& [rc, t] : b.differential(k).entries())
                d.add_entry(rc.first + arows, rc.second + acols, t.coeff);
        diffs.push_back(std::move(d));
    }
    return Complex(a.nvars(), std::move(mods), std::move(diffs), a.parity_shift());
}

}  // namespace cyclekit
