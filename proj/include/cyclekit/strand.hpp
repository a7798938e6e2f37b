#pragma once

#include <optional>
#include <vector>

#include "cyclekit/complex.hpp"

namespace cyclekit {

// In one multidegree b, a module contributes the generators whose multidegree
// divides b. Order: graded-lex on the generator degree, then generator index,
// so strand-local solves are deterministic.
std::vector<int> strand_basis(const FreeModule& m, const Exponents& b);

// Dense rational matrix of a graded map restricted to the strand at b.
// Rows follow `rows`, columns follow `cols` (as produced by strand_basis).
std::vector<std::vector<Rational>> strand_matrix(const GradedMatrix& d, const std::vector<int>& rows,
                                                 const std::vector<int>& cols);

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators.
int rational_rank(std::vector<std::vector<Rational>> m);

// First solution of M x = rhs under the column order, free variables zero;
// nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_first(std::vector<std::vector<Rational>> m,
                                                 std::vector<Rational> rhs);

// dim H_l(E)_b over Q
int strand_homology_rank(const Complex& E, int l, const Exponents& b);

// homology ranks of one strand at every level 0..N
std::vector<int> strand_homology_all(const Complex& E, const Exponents& b);

// Homology ranks for every strand in the box [0, hi], flattened row-major in
// the mixed-radix order of the box.
struct BoxScan {
    Exponents hi;
    int levels = 0;
    std::vector<int> ranks;  // strand-major; ranks[s * levels + l]

    long long strand_count() const;
    Exponents strand_degree(long long index) const;
    int rank_at(long long index, int level) const { return ranks[index * levels + level]; }
};

long long box_size(const Exponents& hi);
Exponents box_degree(const Exponents& hi, long long index);

// Serial reference implementation.
BoxScan scan_box_serial(const Complex& E, const Exponents& hi);

// OpenMP version; identical output, strands are independent tasks.
BoxScan scan_box_parallel(const Complex& E, const Exponents& hi);

// Dispatches to the parallel kernel when built with OpenMP.
BoxScan scan_box(const Complex& E, const Exponents& hi);

// Homology ranks of a single level over the box, cheaper than a full scan
// because only the two adjacent differentials are reduced. Serial reference
// and OpenMP kernel, same contract as the full scans.
std::vector<int> scan_level_serial(const Complex& E, int level, const Exponents& hi);
std::vector<int> scan_level_parallel(const Complex& E, int level, const Exponents& hi);
std::vector<int> scan_level(const Complex& E, int level, const Exponents& hi);

// Componentwise max of all generator multidegrees plus margin. Strand
// patterns repeat beyond the generator cap, so a scan over this box together
// with a zero shell certifies behaviour everywhere.
Exponents certified_box(const Complex& E, int margin);

}  // namespace cyclekit
