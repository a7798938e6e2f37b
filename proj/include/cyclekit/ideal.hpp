#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclekit/errors.hpp"
#include "cyclekit/rational.hpp"

namespace cyclekit {

// Monomial prime (x_i : i in vars); codimension = |vars|.
struct PrimeSupport {
    std::vector<int> vars;  // sorted, 0-based

    PrimeSupport() = default;
    explicit PrimeSupport(std::vector<int> v);

    int codim() const { return static_cast<int>(vars.size()); }
    bool contains_var(int i) const;
    bool subset_of(const PrimeSupport& o) const;

    friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) { return a.vars == b.vars; }
    friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
        if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
        return a.vars < b.vars;
    }
};

// Finitely generated monomial ideal with a minimal, canonically sorted
// generator set. The unit ideal is represented by the single generator 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : n_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Exponents> gens);

    int nvars() const { return n_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_zero() && !is_unit(); }

    bool contains(const Exponents& m) const;

    // (I : m)
    MonomialIdeal colon(const Exponents& m) const;

    // I + (m)
    MonomialIdeal plus_monomial(const Exponents& m) const;

    // I generated in the variables of S after substituting x_j -> 1 for j
    // outside S; result lives in |S| variables, ordered as S.
    MonomialIdeal localize_at(const PrimeSupport& P) const;

    // (x_i^a_i : some a_i) for every i it mentions; prime iff all a_i = 1
    bool generated_by_pure_powers() const;
    bool is_prime() const;
    std::optional<PrimeSupport> as_prime() const;

    // Smallest exponent a with x_i^a in I, when one exists.
    std::optional<int> pure_power_exponent(int var) const;

    // Contains a pure power of every variable it involves == finite colength
    // in those variables.
    bool is_artinian_in(const std::vector<int>& vars) const;

    // Variables occurring in some generator.
    std::vector<int> support_vars() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    int n_;
    std::vector<Exponents> gens_;  // incomparable, graded-lex sorted
};

// Prunes divisible generators and sorts; same ideal, incomparable set.
MonomialIdeal minimalize(int nvars, const std::vector<Exponents>& gens);

// I = intersection of ideals generated by pure powers; minimal, each
// component irreducible. Requires a nonzero proper ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I);

// Intersection of two monomial ideals (generator lcm pairs, minimalized).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// Radicals of the irreducible components, minimalized under inclusion.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I);

// One step of a prime filtration: adjoining the witness monomial to the
// current ideal produces a quotient isomorphic to O/prime.
struct FiltrationStep {
    Exponents witness;
    PrimeSupport prime;
};

struct Filtration {
    MonomialIdeal base;
    std::vector<FiltrationStep> steps;
};

// Chain 0 = M_0 in M_1 in ... in M_m = O/I with prime cyclic quotients.
// Witness rule: smallest candidate in graded-lex order whose colon ideal is
// prime, so the output is deterministic.
Filtration prime_filtration(const MonomialIdeal& I);

// Replays the chain and checks every step: witness outside the current
// ideal, colon equals the claimed prime, final ideal is the unit ideal.
bool filtration_replay_check(const Filtration& f, std::string* why = nullptr);

// length of (O/I) localized at a minimal prime P = number of standard
// monomials of the localized ideal in the variables of P.
long long geometric_multiplicity(const MonomialIdeal& I, const PrimeSupport& P);

// Standard monomials of an ideal that is Artinian in `vars` (their count).
long long standard_monomial_count(const MonomialIdeal& I, const std::vector<int>& vars);

// I^t by generator convolution, minimalized.
MonomialIdeal ideal_power(const MonomialIdeal& I, int t);

// Normalized leading coefficient of t -> length(O/I^t), computed by an exact
// polynomial fit on consecutive lengths and cross-checked against |S|! times
// the volume of the staircase complement of the Newton region (supported for
// up to 3 variables; the fit itself works in any dimension).
long long hilbert_samuel_multiplicity(const MonomialIdeal& I);

// Exact volume of { x >= 0 } minus (conv(generators) + positive orthant),
// in the variables of S. Requires the ideal to be Artinian in S and |S| <= 3.
Rational newton_region_complement_volume(const MonomialIdeal& I, const std::vector<int>& vars);

}  // namespace cyclekit
