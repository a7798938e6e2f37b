#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace cyclekit {

// All kernel arithmetic is exact; no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

// Exponent vector of a monomial; length is the ambient variable count n.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lexicographic order: total degree first, then entrywise lex.
// Canonical key order for every serialized map in the toolkit.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline bool divides(const Exponents& a, const Exponents& b) {
    // a | b componentwise
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_max(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool is_zero_exp(const Exponents& e) {
    for (int v : e)
        if (v != 0) return false;
    return true;
}

}  // namespace cyclekit
