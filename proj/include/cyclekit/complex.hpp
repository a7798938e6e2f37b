#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclekit/errors.hpp"
#include "cyclekit/poly.hpp"

namespace cyclekit {

// Free multigraded module: one multidegree per basis element. A zero module
// has no generators.
struct FreeModule {
    int level = 0;
    std::vector<Exponents> gens;

    int rank() const { return static_cast<int>(gens.size()); }
};

// Sparse matrix of terms between two free modules, multigraded of degree 0:
// every nonzero entry's exponent equals source degree minus target degree.
class GradedMatrix {
public:
    using EntryMap = std::map<std::pair<int, int>, Term>;  // (row=target, col=source)

    GradedMatrix() = default;
    GradedMatrix(FreeModule source, FreeModule target) : src_(std::move(source)), tgt_(std::move(target)) {}

    const FreeModule& source() const { return src_; }
    const FreeModule& target() const { return tgt_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    // Inserts c * z^(src-tgt); accumulates on collision, drops cancellations.
    // The exponent of an entry is forced by the grading, so only the
    // coefficient is supplied.
    void add_entry(int row, int col, const Rational& c);
    const Term* entry(int row, int col) const;

    // Exponent an entry at (row, col) must carry; throws if negative.
    Exponents required_exponent(int row, int col) const;

    GradedMatrix operator*(const GradedMatrix& o) const;  // this after o
    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-() const;
    GradedMatrix scaled(const Rational& c) const;

    static GradedMatrix identity(const FreeModule& m);

    bool operator==(const GradedMatrix& o) const;

private:
    FreeModule src_, tgt_;
    EntryMap entries_;
};

// Bounded complex of multigraded free modules, levels 0..N, with
// differentials E_k -> E_{k-1}. phi*phi = 0 and the multigrading of every
// entry are checked at construction.
class Complex {
public:
    Complex(int nvars, std::vector<FreeModule> modules, std::vector<GradedMatrix> differentials,
            bool parity_shift = false);

    int nvars() const { return n_; }
    int top_level() const { return static_cast<int>(modules_.size()) - 1; }
    bool parity_shift() const { return parity_shift_; }

    const FreeModule& module(int level) const;      // zero module outside bounds
    const GradedMatrix& differential(int k) const;  // phi_k : E_k -> E_{k-1}, k in 1..N only

    // componentwise max over all generator multidegrees
    Exponents degree_cap() const;

    // same modules and differentials with reversed parity bookkeeping
    Complex tilde() const;

    // adds d to every generator multidegree
    Complex shifted_degrees(const Exponents& d) const;

    // places the complex at levels start.., zero modules below
    Complex shifted_levels(int start) const;

    friend Complex direct_sum(const Complex& a, const Complex& b);

private:
    void validate() const;

    int n_;
    std::vector<FreeModule> modules_;
    std::vector<GradedMatrix> diffs_;  // diffs_[k-1] : E_k -> E_{k-1}
    bool parity_shift_;
};

Complex direct_sum(const Complex& a, const Complex& b);

}  // namespace cyclekit
