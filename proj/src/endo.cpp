#include "cyclekit/endo.hpp"

#include <string>

namespace cyclekit {

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

void FormEndomorphism::add_entry(int row, int col, const DifferentialForm& w) {
    if (w.is_zero()) return;
    if (!w.is_pure() || w.form_degree() != q_)
        throw DomainError("entry form degree differs from the endomorphism's form degree");
    if (row < 0 || row >= tgt_.rank || col < 0 || col >= src_.rank)
        throw CompositionError("entry outside the block");
    auto key = std::make_pair(row, col);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, w);
    } else {
        it->second = it->second + w;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FormEndomorphism FormEndomorphism::operator+(const FormEndomorphism& o) const {
    if (!(src_ == o.src_) || !(tgt_ == o.tgt_) || q_ != o.q_)
        throw CompositionError("sum of endomorphisms with mismatched bidegree or slots");
    FormEndomorphism r = *this;
    for (const auto& [rc, w] : o.entries_) r.add_entry(rc.first, rc.second, w);
    return r;
}

FormEndomorphism FormEndomorphism::operator-() const { return scaled(Rational(-1)); }

FormEndomorphism FormEndomorphism::scaled(const Rational& c) const {
    FormEndomorphism r(n_, src_, tgt_, q_);
    if (c == 0) return r;
    for (const auto& [rc, w] : entries_) r.entries_.emplace(rc, w * c);
    return r;
}

FormEndomorphism FormEndomorphism::identity(int nvars, const EndoSlot& slot) {
    FormEndomorphism r(nvars, slot, slot, 0);
    const DifferentialForm one = DifferentialForm::from_polynomial(Polynomial::constant(nvars, Rational(1)));
    for (int i = 0; i < slot.rank; ++i) r.add_entry(i, i, one);
    return r;
}

FormEndomorphism compose(const FormEndomorphism& a, const FormEndomorphism& b) {
    if (!(b.target() == a.source()))
        throw CompositionError("endomorphism composition with mismatched middle slot");
    FormEndomorphism r(a.nvars(), b.source(), a.target(), a.form_degree() + b.form_degree());
    const bool flip = parity(a.endo_degree() * b.form_degree()) == 1;
    for (const auto& [ij, wa] : a.entries()) {
        for (const auto& [jk, wb] : b.entries()) {
            if (ij.second != jk.first) continue;
            DifferentialForm w = wedge(wa, wb);
            if (flip) w = -w;
            r.add_entry(ij.first, jk.second, w);
        }
    }
    return r;
}

DifferentialForm graded_trace(const FormEndomorphism& a) {
    if (!(a.source() == a.target())) throw DomainError("trace of a non-square block");
    DifferentialForm tr = DifferentialForm::zero(a.nvars());
    for (const auto& [rc, w] : a.entries())
        if (rc.first == rc.second) tr = tr + w;
    return tr;
}

FormEndomorphism connection_D(const FormEndomorphism& a) {
    FormEndomorphism r(a.nvars(), a.source(), a.target(), a.form_degree() + 1);
    for (const auto& [rc, w] : a.entries()) {
        DifferentialForm dw = exterior_d(w);
        if (!dw.is_zero()) r.add_entry(rc.first, rc.second, dw);
    }
    return r;
}

FormEndomorphism endo_of_matrix(int nvars, const GradedMatrix& m, int source_level, int target_level,
                                bool source_tilde, bool target_tilde) {
    EndoSlot src{source_level, source_tilde, m.source().rank()};
    EndoSlot tgt{target_level, target_tilde, m.target().rank()};
    FormEndomorphism r(nvars, src, tgt, 0);
    for (const auto& [rc, t] : m.entries())
        r.add_entry(rc.first, rc.second,
                    DifferentialForm::from_polynomial(Polynomial::from_term(t)));
    return r;
}

FormEndomorphism endo_of_differential(const Complex& E, int k) {
    if (k >= 1 && k <= E.top_level()) return endo_of_matrix(E.nvars(), E.differential(k), k, k - 1);
    EndoSlot src{k, false, E.module(k).rank()};
    EndoSlot tgt{k - 1, false, E.module(k - 1).rank()};
    return FormEndomorphism(E.nvars(), src, tgt, 0);
}

FormEndomorphism product_D_range(const Complex& E, int from, int to) {
    if (to < from) {
        EndoSlot slot{from - 1, false, E.module(from - 1).rank()};
        return FormEndomorphism::identity(E.nvars(), slot);
    }
    FormEndomorphism r = connection_D(endo_of_differential(E, from));
    for (int j = from + 1; j <= to; ++j) r = compose(r, connection_D(endo_of_differential(E, j)));
    return r;
}

FormEndomorphism epsilon_map(int nvars, int level, int rank, bool inverse) {
    EndoSlot plain{level, false, rank};
    EndoSlot flipped{level, true, rank};
    FormEndomorphism r(nvars, inverse ? flipped : plain, inverse ? plain : flipped, 0);
    const DifferentialForm one = DifferentialForm::from_polynomial(Polynomial::constant(nvars, Rational(1)));
    for (int i = 0; i < rank; ++i) r.add_entry(i, i, one);
    return r;
}

FormEndomorphism tilde_flip(const FormEndomorphism& a) {
    EndoSlot src = a.source(), tgt = a.target();
    src.tilde = !src.tilde;
    tgt.tilde = !tgt.tilde;
    FormEndomorphism r(a.nvars(), src, tgt, a.form_degree());
    for (const auto& [rc, w] : a.entries()) r.add_entry(rc.first, rc.second, w);
    return r;
}

FormEndomorphism tilde_and_epsilon(const FormEndomorphism& a, EpsilonSide side) {
    if (a.source().tilde || a.target().tilde)
        throw DomainError("epsilon application expects a map between plain complexes");
    if (side == EpsilonSide::left)
        return compose(epsilon_map(a.nvars(), a.target().level, a.target().rank), a);
    return compose(tilde_flip(a), epsilon_map(a.nvars(), a.source().level, a.source().rank));
}

bool product_commutation_check(const Complex& E, int l, int k) {
    if (!(1 <= l && l < k && k <= E.top_level()))
        throw DomainError("identity check needs 1 <= l < k <= N");
    FormEndomorphism lhs = compose(product_D_range(E, l, k - 1), endo_of_differential(E, k));
    FormEndomorphism rhs = compose(endo_of_differential(E, l), product_D_range(E, l + 1, k));
    return lhs == rhs;
}

namespace {

GradedMatrix block_or_zero(const std::vector<GradedMatrix>& blocks, const Complex& E, const Complex& G,
                           int level) {
    if (level >= 0 && level < static_cast<int>(blocks.size())) {
        const GradedMatrix& b = blocks[level];
        if (b.source().rank() == E.module(level).rank() && b.target().rank() == G.module(level).rank())
            return b;
    }
    return GradedMatrix(E.module(level), G.module(level));
}

}  // namespace

ProductDecomposition product_decomposition(const Complex& E, const Complex& G,
                                         const std::vector<GradedMatrix>& blocks, int l, int p) {
    if (p < 1 || l < 0) throw DomainError("decomposition needs l >= 0 and p >= 1");
    if (E.nvars() != G.nvars()) throw DimensionError("decomposition across variable counts");
    const int n = E.nvars();

    // b must commute with the differentials on every level that matters
    const int top = std::max(E.top_level(), G.top_level()) + 1;
    for (int j = 1; j <= top; ++j) {
        GradedMatrix lhs = block_or_zero(blocks, E, G, j - 1) *
                           (j <= E.top_level() ? E.differential(j) : GradedMatrix(E.module(j), E.module(j - 1)));
        GradedMatrix rhs = (j <= G.top_level() ? G.differential(j) : GradedMatrix(G.module(j), G.module(j - 1))) *
                           block_or_zero(blocks, E, G, j);
        if (!(lhs == rhs)) throw ContractViolation("blocks do not form a chain map at level " + std::to_string(j));
    }

    auto b_endo = [&](int level) {
        return endo_of_matrix(n, block_or_zero(blocks, E, G, level), level, level);
    };

    auto delta_at = [&](int l0) {
        EndoSlot src{l0 + p - 1, false, E.module(l0 + p - 1).rank()};
        EndoSlot tgt{l0, false, G.module(l0).rank()};
        FormEndomorphism sum(n, src, tgt, p);
        for (int j = l0; j <= l0 + p - 1; ++j) {
            FormEndomorphism term = compose(product_D_range(G, l0 + 1, j), connection_D(b_endo(j)));
            term = compose(term, product_D_range(E, j + 1, l0 + p - 1));
            sum = sum + term;
        }
        return sum;
    };

    FormEndomorphism delta = delta_at(l);
    FormEndomorphism alpha = compose(endo_of_differential(G, l + 1), delta_at(l + 1));
    FormEndomorphism beta = compose(delta, endo_of_differential(E, l + p));
    FormEndomorphism gamma = compose(b_endo(l), product_D_range(E, l + 1, l + p));
    FormEndomorphism lhs = compose(product_D_range(G, l + 1, l + p), b_endo(l + p));

    ProductDecomposition out{delta, alpha, beta, gamma, lhs, false};
    out.verified = (lhs == alpha + beta + gamma);
    return out;
}

}  // namespace cyclekit
