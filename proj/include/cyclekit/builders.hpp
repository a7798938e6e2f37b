#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclekit/complex.hpp"
#include "cyclekit/endo.hpp"
#include "cyclekit/ideal.hpp"

namespace cyclekit {

// Morphism of complexes, degree 0 (blocks[l] : source_l -> target_l) or
// degree -1 (blocks[l] : source_{l+1} -> target_l). Commutation with the
// differentials is checked at construction.
class ChainMap {
public:
    ChainMap(Complex source, Complex target, int degree, std::vector<GradedMatrix> blocks);

    const Complex& source() const { return src_; }
    const Complex& target() const { return tgt_; }
    int degree() const { return degree_; }
    const GradedMatrix& block(int l) const;
    int block_count() const { return static_cast<int>(blocks_.size()); }

private:
    void validate() const;

    Complex src_, tgt_;
    int degree_;
    std::vector<GradedMatrix> blocks_;
};

// Koszul complex of a tuple of nonzero terms: levels 0..m with bases indexed
// by subsets of the tuple, differential the contraction against the tuple.
Complex koszul(const std::vector<Term>& f, int nvars);

// The composite D(phi_1) ... D(phi_p) : E_p -> E_0 of a Koszul complex.
FormEndomorphism koszul_D_contraction(const Complex& K, int p);

// Taylor resolution of a monomial ideal (or of an explicit term list, not
// necessarily minimal): bases indexed by generator subsets, entries are
// signed lcm ratios.
Complex taylor_resolution(const MonomialIdeal& I);
Complex taylor_of_terms(const std::vector<Term>& gens, int nvars);

struct MappingCone {
    Complex cone;
    ChainMap theta;     // degree 0, target complex -> cone
    ChainMap vartheta;  // degree -1, cone -> source complex
};

// Cone of a degree-0 chain map c : L -> K with blocks
// mu_k = [-kappa_k, c_{k-1}; 0, lambda_{k-1}], C_k = K_k + L_{k-1}.
MappingCone mapping_cone(const ChainMap& c);

// Lift of a map on cokernels (given on generators as a graded matrix
// F_0 -> E_0) to a degree-0 chain map F -> E, solving each strand-local
// system with the first solution in graded-lex column order. E must be exact
// in positive levels over the strands that come up.
ChainMap lift_morphism(const GradedMatrix& alpha, const Complex& F, const Complex& E);

// The three-row diagram around homology level k:
//   top:    E_0 .. E_{k-1}, E_k, then a resolution tail (exact at >= k)
//   middle: E itself, with b : E -> top the identity up to level k
//   bottom: F with a : F -> E, carrying H_k(E) at level k and nothing else
struct BigDiagram {
    int k = 0;
    Complex top;
    ChainMap b;     // E -> top
    Complex bottom;
    ChainMap a;     // bottom -> E
};

// G must be a resolution of coker(phi_k) extending the presentation: its
// levels 0 and 1 match E_{k-1} and E_k and its first differential is phi_k.
// When G is omitted it is auto-built by Taylor for a cyclic cokernel.
BigDiagram big_diagram(const Complex& E, int k, std::optional<Complex> G = std::nullopt);

// Taylor resolution extending phi_k when E_{k-1} has rank one and every
// column of phi_k is a single nonzero term; nullopt otherwise.
std::optional<Complex> cokernel_taylor(const Complex& E, int k);

}  // namespace cyclekit
