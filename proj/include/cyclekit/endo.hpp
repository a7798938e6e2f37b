#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclekit/complex.hpp"
#include "cyclekit/poly.hpp"

namespace cyclekit {

// A module position in the superstructure. The tilde flag reverses parity,
// which is all the sign calculus sees of a tilde complex.
struct EndoSlot {
    int level = 0;
    bool tilde = false;
    int rank = 0;

    int parity_level() const { return level + (tilde ? 1 : 0); }
    friend bool operator==(const EndoSlot& a, const EndoSlot& b) {
        return a.level == b.level && a.tilde == b.tilde && a.rank == b.rank;
    }
};

// Matrix of pure-degree forms between two module slots: the carrier of the
// superstructure sign calculus. Endomorphism degree is the parity-adjusted
// level difference, form degree the common degree of all entries.
class FormEndomorphism {
public:
    using EntryMap = std::map<std::pair<int, int>, DifferentialForm>;

    FormEndomorphism(int nvars, EndoSlot source, EndoSlot target, int form_degree)
        : n_(nvars), src_(source), tgt_(target), q_(form_degree) {}

    int nvars() const { return n_; }
    const EndoSlot& source() const { return src_; }
    const EndoSlot& target() const { return tgt_; }
    int form_degree() const { return q_; }
    int endo_degree() const { return tgt_.parity_level() - src_.parity_level(); }
    int total_degree() const { return endo_degree() + q_; }

    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add_entry(int row, int col, const DifferentialForm& w);

    FormEndomorphism operator+(const FormEndomorphism& o) const;
    FormEndomorphism operator-() const;
    FormEndomorphism scaled(const Rational& c) const;

    bool operator==(const FormEndomorphism& o) const {
        return src_ == o.src_ && tgt_ == o.tgt_ && q_ == o.q_ && entries_ == o.entries_;
    }

    static FormEndomorphism identity(int nvars, const EndoSlot& slot);

private:
    int n_;
    EndoSlot src_, tgt_;
    int q_;
    EntryMap entries_;
};

// Composition of form-valued endomorphisms: matrix product of entrywise
// wedges scaled by (-1)^{(endo deg of a)(form deg of b)}.
FormEndomorphism compose(const FormEndomorphism& a, const FormEndomorphism& b);

// Sum of diagonal form entries of a square block.
DifferentialForm graded_trace(const FormEndomorphism& a);

// Induced connection for the trivial connection on every level: the matrix
// maps entrywise under the holomorphic exterior derivative.
FormEndomorphism connection_D(const FormEndomorphism& a);

// phi_k of a complex as a form-degree-0 endomorphism E_k -> E_{k-1}.
FormEndomorphism endo_of_differential(const Complex& E, int k);

// Arbitrary graded matrix as a form-degree-0 endomorphism between slots at
// the given levels.
FormEndomorphism endo_of_matrix(int nvars, const GradedMatrix& m, int source_level, int target_level,
                                bool source_tilde = false, bool target_tilde = false);

// D(phi_from) ... D(phi_to) as a composite E_to -> E_{from-1}; an empty range
// (to < from) yields the identity at level base.
FormEndomorphism product_D_range(const Complex& E, int from, int to);

// The odd map induced by the identity, E_level -> tilde E_level (or back).
FormEndomorphism epsilon_map(int nvars, int level, int rank, bool inverse = false);

// Same matrix between the parity-reversed slots.
FormEndomorphism tilde_flip(const FormEndomorphism& a);

enum class EpsilonSide { left, right };

// left: eps after a (the composite eps a); right: tilde(a) after eps.
// These agree up to the sign (-1)^{form degree of a}.
FormEndomorphism tilde_and_epsilon(const FormEndomorphism& a, EpsilonSide side);

// D phi_l ... D phi_{k-1} phi_k == phi_l D phi_{l+1} ... D phi_k
bool product_commutation_check(const Complex& E, int l, int k);

// The four endomorphisms of the product decomposition for a chain map
// b : E -> G over a window of p levels starting at l, together with the
// left-hand side and whether the identity holds exactly.
struct ProductDecomposition {
    FormEndomorphism delta;
    FormEndomorphism alpha;
    FormEndomorphism beta;
    FormEndomorphism gamma;
    FormEndomorphism lhs;
    bool verified = false;
};

// blocks[j] is the degree-0 chain map block E_j -> G_j; levels l..l+p must
// be covered (missing levels above the tops count as zero).
ProductDecomposition product_decomposition(const Complex& E, const Complex& G,
                                         const std::vector<GradedMatrix>& blocks, int l, int p);

}  // namespace cyclekit
