#include "cyclekit/strand.hpp"

#include <algorithm>
#include <numeric>

namespace cyclekit {

std::vector<int> strand_basis(const FreeModule& m, const Exponents& b) {
    std::vector<int> idx;
    for (int i = 0; i < m.rank(); ++i)
        if (divides(m.gens[i], b)) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        GradedLexLess less;
        if (less(m.gens[i], m.gens[j])) return true;
        if (less(m.gens[j], m.gens[i])) return false;
        return i < j;
    });
    return idx;
}

std::vector<std::vector<Rational>> strand_matrix(const GradedMatrix& d, const std::vector<int>& rows,
                                                 const std::vector<int>& cols) {
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (const Term* t = d.entry(rows[r], cols[c])) m[r][c] = t->coeff;
    return m;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    if (cols == 0) return 0;

    // clear denominators per row; rank is invariant under row scaling
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int r = 0; r < rows; ++r) {
        Integer l = 1;
        for (int c = 0; c < cols; ++c) l = lcm(l, denominator(m[r][c]));
        for (int c = 0; c < cols; ++c) {
            Rational v = m[r][c] * l;
            a[r][c] = numerator(v);
        }
    }

    // Bareiss: all divisions exact
    Integer prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_first(std::vector<std::vector<Rational>> m,
                                                 std::vector<Rational> rhs) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        std::swap(rhs[row], rhs[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
            rhs[r] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = rhs[r] / m[r][pivot_col[r]];
    return x;
}

namespace {

int strand_map_rank(const Complex& E, int k, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    if (k < 1 || k > E.top_level() || rows.empty() || cols.empty()) return 0;
    return rational_rank(strand_matrix(E.differential(k), rows, cols));
}

std::vector<int> strand_dims_and_ranks(const Complex& E, const Exponents& b) {
    const int N = E.top_level();
    std::vector<std::vector<int>> bases(N + 1);
    for (int l = 0; l <= N; ++l) bases[l] = strand_basis(E.module(l), b);
    std::vector<int> map_rank(N + 2, 0);
    for (int k = 1; k <= N; ++k) map_rank[k] = strand_map_rank(E, k, bases[k - 1], bases[k]);
    std::vector<int> h(N + 1, 0);
    for (int l = 0; l <= N; ++l)
        h[l] = static_cast<int>(bases[l].size()) - map_rank[l] - map_rank[l + 1];
    return h;
}

int strand_homology_one_level(const Complex& E, int l, const Exponents& b) {
    const std::vector<int> here = strand_basis(E.module(l), b);
    if (here.empty()) return 0;
    int h = static_cast<int>(here.size());
    if (l >= 1) h -= strand_map_rank(E, l, strand_basis(E.module(l - 1), b), here);
    if (l < E.top_level()) h -= strand_map_rank(E, l + 1, here, strand_basis(E.module(l + 1), b));
    return h;
}

}  // namespace

int strand_homology_rank(const Complex& E, int l, const Exponents& b) {
    for (int x : b)
        if (x < 0) throw DomainError("strand degree must be componentwise non-negative");
    if (l < 0 || l > E.top_level()) return 0;
    return strand_homology_one_level(E, l, b);
}

std::vector<int> strand_homology_all(const Complex& E, const Exponents& b) {
    for (int x : b)
        if (x < 0) throw DomainError("strand degree must be componentwise non-negative");
    return strand_dims_and_ranks(E, b);
}

long long box_size(const Exponents& hi) {
    long long total = 1;
    for (int c : hi) total *= static_cast<long long>(c) + 1;
    return total;
}

Exponents box_degree(const Exponents& hi, long long index) {
    Exponents b(hi.size(), 0);
    for (int i = static_cast<int>(hi.size()) - 1; i >= 0; --i) {
        const long long base = hi[i] + 1;
        b[i] = static_cast<int>(index % base);
        index /= base;
    }
    return b;
}

long long BoxScan::strand_count() const { return box_size(hi); }

Exponents BoxScan::strand_degree(long long index) const { return box_degree(hi, index); }

BoxScan scan_box_serial(const Complex& E, const Exponents& hi) {
    BoxScan out;
    out.hi = hi;
    out.levels = E.top_level() + 1;
    const long long total = box_size(hi);
    out.ranks.assign(total * out.levels, 0);
    for (long long s = 0; s < total; ++s) {
        const std::vector<int> h = strand_dims_and_ranks(E, box_degree(hi, s));
        for (int l = 0; l < out.levels; ++l) out.ranks[s * out.levels + l] = h[l];
    }
    return out;
}

BoxScan scan_box_parallel(const Complex& E, const Exponents& hi) {
    BoxScan out;
    out.hi = hi;
    out.levels = E.top_level() + 1;
    const long long total = box_size(hi);
    out.ranks.assign(total * out.levels, 0);
#ifdef CYCLEKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long s = 0; s < total; ++s) {
        const std::vector<int> h = strand_dims_and_ranks(E, box_degree(hi, s));
        for (int l = 0; l < out.levels; ++l) out.ranks[s * out.levels + l] = h[l];
    }
    return out;
}

BoxScan scan_box(const Complex& E, const Exponents& hi) {
#ifdef CYCLEKIT_HAVE_OPENMP
    return scan_box_parallel(E, hi);
#else
    return scan_box_serial(E, hi);
#endif
}

std::vector<int> scan_level_serial(const Complex& E, int level, const Exponents& hi) {
    const long long total = box_size(hi);
    std::vector<int> out(total, 0);
    if (level < 0 || level > E.top_level()) return out;
    for (long long s = 0; s < total; ++s)
        out[s] = strand_homology_one_level(E, level, box_degree(hi, s));
    return out;
}

std::vector<int> scan_level_parallel(const Complex& E, int level, const Exponents& hi) {
    const long long total = box_size(hi);
    std::vector<int> out(total, 0);
    if (level < 0 || level > E.top_level()) return out;
#ifdef CYCLEKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long s = 0; s < total; ++s)
        out[s] = strand_homology_one_level(E, level, box_degree(hi, s));
    return out;
}

std::vector<int> scan_level(const Complex& E, int level, const Exponents& hi) {
#ifdef CYCLEKIT_HAVE_OPENMP
    return scan_level_parallel(E, level, hi);
#else
    return scan_level_serial(E, level, hi);
#endif
}

Exponents certified_box(const Complex& E, int margin) {
    if (margin < 1) margin = 1;
    Exponents cap = E.degree_cap();
    for (int& c : cap) c += margin;
    return cap;
}

}  // namespace cyclekit
