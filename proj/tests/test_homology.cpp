#include <doctest.h>

#include <random>

#include "cyclekit/homology.hpp"

using namespace cyclekit;

namespace {

Term term(int n, std::vector<int> e, int num, int den = 1) {
    if (static_cast<int>(e.size()) != n) throw DimensionError("bad term literal");
    return Term(Rational(num, den), Exponents(e.begin(), e.end()));
}

long long total_homology(const Complex& E, int level, const Exponents& hi) {
    long long total = 0;
    for (long long s = 0; s < box_size(hi); ++s)
        total += strand_homology_rank(E, level, box_degree(hi, s));
    return total;
}

}  // namespace

TEST_CASE("strand homology of small complexes") {
    const Complex K = koszul({term(2, {1, 0}, 1), term(2, {0, 1}, 1)}, 2);
    CHECK(strand_homology_rank(K, 0, {0, 0}) == 1);
    CHECK(strand_homology_rank(K, 0, {1, 0}) == 0);
    CHECK(strand_homology_rank(K, 1, {1, 1}) == 0);

    const Complex T = taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(total_homology(T, 0, {4, 4}) == 3);  // 1, z1, z2

    const Complex KC = koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2);
    CHECK(total_homology(KC, 1, {4, 4}) == 3);
    CHECK(total_homology(KC, 2, {4, 4}) == 0);
    CHECK(total_homology(KC, 3, {4, 4}) == 0);
}

TEST_CASE("localization by substitution") {
    // identity at the full prime
    const Complex T = taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    const Complex Tfull = localize_complex(T, PrimeSupport({0, 1}));
    CHECK(Tfull.nvars() == 2);
    CHECK(Tfull.module(1).gens == T.module(1).gens);

    // the two-plane ideal at one plane has a length-one quotient
    const Complex T4 =
        taylor_resolution(MonomialIdeal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
    const LocalLength l = local_length(T4, 0, PrimeSupport({0, 1}));
    CHECK(l.finite);
    CHECK(l.length == 1);

    // a single power localizes to its own length
    for (int a = 1; a <= 4; ++a) {
        const Complex K = koszul({term(2, {a, 0}, 1)}, 2);
        const LocalLength la = local_length(K, 0, PrimeSupport({0}));
        CHECK(la.finite);
        CHECK(la.length == a);
    }
}

TEST_CASE("local lengths of the cusp-family Koszul complex") {
    const Complex K = koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2);
    const PrimeSupport origin({0, 1});
    CHECK(local_length(K, 0, origin).length == 3);
    CHECK(local_length(K, 1, origin).length == 3);
    CHECK(local_length(K, 2, origin).length == 0);

    // exact complexes have zero local length everywhere
    const Complex T = taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(local_length(T, 1, origin).length == 0);
    CHECK(local_length(T, 2, PrimeSupport({0})).length == 0);

    // a non-minimal localization is flagged infinite
    const Complex Kx = koszul({term(2, {1, 0}, 1)}, 2);  // resolves O/(z1), support codim 1
    CHECK_FALSE(local_length(Kx, 0, PrimeSupport({0, 1})).finite);
}

TEST_CASE("module cycles") {
    const Complex T4 =
        taylor_resolution(MonomialIdeal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
    Cycle expected;
    expected.add(PrimeSupport({0, 1}), 1);
    expected.add(PrimeSupport({2, 3}), 1);
    CHECK(module_cycle(T4, 0) == expected);

    // complete intersection boxes
    const Complex B = koszul({term(2, {3, 0}, 1), term(2, {0, 2}, 1)}, 2);
    Cycle box_cycle;
    box_cycle.add(PrimeSupport({0, 1}), 6);
    CHECK(module_cycle(B, 0) == box_cycle);

    const Complex T = taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    Cycle origin3;
    origin3.add(PrimeSupport({0, 1}), 3);
    CHECK(module_cycle(T, 0) == origin3);
}

TEST_CASE("total cycle of a complex") {
    const Complex K = koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2);
    CHECK(complex_cycle(K).is_zero());

    // a resolution only contributes at level zero
    const Complex T = taylor_resolution(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(complex_cycle(T) == module_cycle(T, 0));

    // direct sums add
    const Complex A = taylor_resolution(MonomialIdeal(2, {{1, 0}}));
    const Complex B = taylor_resolution(MonomialIdeal(2, {{1, 1}}));
    CHECK(complex_cycle(direct_sum(A, B)) == complex_cycle(A) + complex_cycle(B));
}

TEST_CASE("cycle is unchanged by a split exact summand") {
    const Complex T = taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    const Complex K = taylor_resolution(MonomialIdeal(2, {{1, 2}}));
    std::vector<GradedMatrix> id_blocks;
    for (int l = 0; l <= K.top_level(); ++l) id_blocks.push_back(GradedMatrix::identity(K.module(l)));
    const MappingCone mc = mapping_cone(ChainMap(K, K, 0, id_blocks));
    CHECK(complex_cycle(direct_sum(T, mc.cone)) == complex_cycle(T));
}

TEST_CASE("restricted cycle drops embedded components") {
    // H_0 on the hyperplane, H_1 on the origin inside it
    const Complex A = taylor_resolution(MonomialIdeal(2, {{1, 0}}));
    const Complex B = koszul({term(2, {1, 0}, 1), term(2, {0, 1}, 1)}, 2).shifted_levels(1);
    const Complex E = direct_sum(A, B);

    Cycle full;
    full.add(PrimeSupport({0}), 1);
    full.add(PrimeSupport({0, 1}), -1);
    CHECK(complex_cycle(E) == full);

    Cycle restricted;
    restricted.add(PrimeSupport({0}), 1);
    CHECK(complex_cycle_restricted(E) == restricted);
}

TEST_CASE("cycle additivity along filtration steps") {
    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    Filtration f = prime_filtration(J);
    MonomialIdeal K = J;
    for (const auto& step : f.steps) {
        CHECK(cycle_additivity_check(K, step));
        K = K.plus_monomial(step.witness);
    }

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 8; ++t) {
        std::vector<Exponents> gens;
        for (int i = 0; i < 4; ++i) {
            Exponents e(3, 0);
            while (is_zero_exp(e))
                for (int v = 0; v < 3; ++v) e[v] = d(rng);
            gens.push_back(std::move(e));
        }
        MonomialIdeal I = minimalize(3, gens);
        if (!I.is_proper()) continue;
        Filtration fi = prime_filtration(I);
        MonomialIdeal cur = I;
        for (const auto& step : fi.steps) {
            CHECK(cycle_additivity_check(cur, step));
            cur = cur.plus_monomial(step.witness);
        }
    }
}

TEST_CASE("telescoped additivity recovers the quotient cycle") {
    // sum of the codim-p step contributions equals the codim-p cycle of O/I
    MonomialIdeal I(2, {{2, 0}, {1, 1}});
    const Cycle full = cycle_of_quotient(I);
    Filtration f = prime_filtration(I);
    for (int p : full.codimensions()) {
        Cycle steps_sum;
        for (const auto& st : f.steps)
            if (st.prime.codim() == p) steps_sum.add(st.prime, 1);
        // only the minimal stratum is forced to match
        int min_codim = I.nvars() + 1;
        for (const auto& q : minimal_primes(I)) min_codim = std::min(min_codim, q.codim());
        if (p == min_codim) CHECK(full.stratum(p) == steps_sum);
    }
}

TEST_CASE("Koszul cancellation checks") {
    CHECK(koszul_binomial_check({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2, 2));
    CHECK(koszul_binomial_check({term(1, {1}, 1), term(1, {1}, 1)}, 1, 1));
    CHECK(koszul_binomial_check({term(2, {1, 0}, 1), term(2, {0, 1}, 1), term(2, {1, 1}, 1)}, 2, 2));
    // complete intersection: not applicable (m = p)
    CHECK_THROWS_AS(koszul_binomial_check({term(2, {1, 0}, 1), term(2, {0, 1}, 1)}, 2, 2), DomainError);
    // stated codimension must match
    CHECK_THROWS_AS(koszul_binomial_check({term(2, {1, 0}, 1), term(2, {0, 1}, 1), term(2, {1, 1}, 1)},
                                          2, 1),
                    DomainError);
}

TEST_CASE("widening the box does not change any certified answer") {
    const std::vector<Complex> cases{
        koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2),
        taylor_resolution(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})),
        taylor_resolution(MonomialIdeal(2, {{2, 0}, {1, 1}})),
    };
    for (const auto& E : cases) {
        CHECK(positive_homology_vanishes(E, 2) == positive_homology_vanishes(E, 4));
        for (int l = 0; l <= E.top_level(); ++l) CHECK(module_cycle(E, l, 2) == module_cycle(E, l, 4));
    }
}

TEST_CASE("support primes of a cyclic quotient match the combinatorial ones") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 10; ++t) {
        std::vector<Exponents> gens;
        for (int i = 0; i < 4; ++i) {
            Exponents e(3, 0);
            while (is_zero_exp(e))
                for (int v = 0; v < 3; ++v) e[v] = d(rng);
            gens.push_back(std::move(e));
        }
        MonomialIdeal I = minimalize(3, gens);
        if (!I.is_proper()) continue;
        const Cycle c = cycle_of_quotient(I);
        std::vector<PrimeSupport> from_cycle;
        for (const auto& [p, m] : c.components()) {
            from_cycle.push_back(p);
            CHECK(m == geometric_multiplicity(I, p));
        }
        CHECK(from_cycle == minimal_primes(I));
    }
}

TEST_CASE("resource bounds are enforced") {
    // prime enumeration is capped at twelve variables
    const int n = 13;
    Exponents e(n, 0);
    e[0] = 1;
    const Complex K = koszul({Term(Rational(1), e)}, n);
    CHECK_THROWS_AS(module_cycle(K, 0), ResourceError);

    // Taylor resolutions are capped at twenty generators
    std::vector<Exponents> gens;
    for (int i = 0; i < 21; ++i) {
        Exponents g(21, 0);
        g[i] = 1;
        gens.push_back(std::move(g));
    }
    CHECK_THROWS_AS(taylor_resolution(MonomialIdeal(21, gens)), ResourceError);
}

TEST_CASE("Euler characteristic identity per strand") {
    CHECK(euler_characteristic_check(koszul({term(2, {2, 0}, 1), term(2, {1, 1}, 1), term(2, {0, 2}, 1)}, 2)));
    CHECK(euler_characteristic_check(taylor_resolution(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}))));
}

TEST_CASE("cone of a filtration inclusion computes the quotient cycle") {
    MonomialIdeal K(2, {{2, 0}, {1, 1}});
    Filtration f = prime_filtration(K);
    REQUIRE(!f.steps.empty());
    const FiltrationStep st = f.steps[0];

    std::vector<Exponents> pg;
    for (int v : st.prime.vars) {
        Exponents e(2, 0);
        e[v] = 1;
        pg.push_back(std::move(e));
    }
    const Complex F = taylor_resolution(MonomialIdeal(2, pg)).shifted_degrees(st.witness);
    const Complex E = taylor_resolution(K);
    GradedMatrix alpha(F.module(0), E.module(0));
    alpha.add_entry(0, 0, Rational(1));
    const MappingCone mc = mapping_cone(lift_morphism(alpha, F, E));
    CHECK(positive_homology_vanishes(mc.cone));
    CHECK(module_cycle(mc.cone, 0) == cycle_of_quotient(K.plus_monomial(st.witness)));
}
