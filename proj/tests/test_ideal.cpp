#include <doctest.h>

#include <random>

#include "cyclekit/ideal.hpp"

using namespace cyclekit;

namespace {

Exponents e2(int a, int b) { return {a, b}; }

MonomialIdeal rnd_ideal(std::mt19937_64& rng, int n, int gens, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    std::vector<Exponents> g;
    for (int i = 0; i < gens; ++i) {
        Exponents e(n, 0);
        while (is_zero_exp(e))
            for (int v = 0; v < n; ++v) e[v] = d(rng);
        g.push_back(std::move(e));
    }
    return minimalize(n, g);
}

// every monomial in a bounding box, for membership-style oracles
std::vector<Exponents> box(const Exponents& cap) {
    std::vector<Exponents> out;
    Exponents cur(cap.size(), 0);
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(cap.size()) - 1;
        while (i >= 0 && cur[i] == cap[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

Exponents cap_of(const MonomialIdeal& I, int extra) {
    Exponents c(I.nvars(), 0);
    for (const auto& g : I.generators()) c = exp_max(c, g);
    for (int& x : c) x += extra;
    return c;
}

bool same_ideal_on_box(const MonomialIdeal& a, const MonomialIdeal& b, const Exponents& cap) {
    for (const auto& m : box(cap))
        if (a.contains(m) != b.contains(m)) return false;
    return true;
}

}  // namespace

TEST_CASE("minimalize prunes divisible generators") {
    // {x^2, x^2 y, y^3} -> {x^2, y^3}
    MonomialIdeal I = minimalize(2, {e2(2, 0), e2(2, 1), e2(0, 3)});
    CHECK(I.generators() == std::vector<Exponents>{e2(2, 0), e2(0, 3)});

    CHECK(minimalize(2, {}).is_zero());

    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        std::vector<Exponents> gens;
        std::uniform_int_distribution<int> d(0, 3);
        for (int i = 0; i < 10; ++i) gens.push_back({d(rng), d(rng), d(rng)});
        MonomialIdeal raw(3, {});
        MonomialIdeal I3 = minimalize(3, gens);
        // membership against the raw generating set on a degree box
        for (const auto& m : box(Exponents{4, 4, 4})) {
            bool in_raw = false;
            for (const auto& g : gens)
                if (divides(g, m)) in_raw = true;
            CHECK(in_raw == I3.contains(m));
        }
    }
}

TEST_CASE("membership by divisor scan") {
    MonomialIdeal I = minimalize(2, {e2(2, 0)});
    CHECK_FALSE(I.contains(e2(1, 1)));
    CHECK(I.contains(e2(3, 0)));
}

TEST_CASE("colon matches the membership oracle") {
    // (x^2, xy) : x = (x, y)
    MonomialIdeal I = minimalize(2, {e2(2, 0), e2(1, 1)});
    CHECK(I.colon(e2(1, 0)) == MonomialIdeal(2, {e2(1, 0), e2(0, 1)}));

    // (I : 1) = I
    CHECK(I.colon(e2(0, 0)) == I);

    // (xz, xw, yz, yw) : x = (z, w)
    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    MonomialIdeal Jx = J.colon({1, 0, 0, 0});
    CHECK(Jx == MonomialIdeal(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));

    // oracle: m in (I:w) iff m+w in I, on a degree box
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 40; ++t) {
        MonomialIdeal R = rnd_ideal(rng, 3, 5, 3);
        Exponents w{d(rng), d(rng), d(rng)};
        MonomialIdeal C = R.colon(w);
        for (const auto& m : box(cap_of(R, 1)))
            CHECK(C.contains(m) == R.contains(exp_add(m, w)));
    }
}

TEST_CASE("irreducible decomposition") {
    // (xz, xw, yz, yw) = (x, y) cap (z, w)
    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    auto comps = irreducible_decomposition(J);
    REQUIRE(comps.size() == 2);
    const MonomialIdeal xy(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const MonomialIdeal zw(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(((comps[0] == xy && comps[1] == zw) || (comps[0] == zw && comps[1] == xy)));

    // (x^2, xy, y^2) = (x^2, y) cap (x, y^2)
    MonomialIdeal I(2, {e2(2, 0), e2(1, 1), e2(0, 2)});
    auto comps2 = irreducible_decomposition(I);
    REQUIRE(comps2.size() == 2);
    bool found_a = false, found_b = false;
    for (const auto& c : comps2) {
        if (c == MonomialIdeal(2, {e2(2, 0), e2(0, 1)})) found_a = true;
        if (c == MonomialIdeal(2, {e2(1, 0), e2(0, 2)})) found_b = true;
    }
    CHECK(found_a);
    CHECK(found_b);

    // a prime is its own decomposition
    MonomialIdeal P(3, {{1, 0, 0}, {0, 0, 1}});
    auto comps3 = irreducible_decomposition(P);
    REQUIRE(comps3.size() == 1);
    CHECK(comps3[0] == P);

    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(2, {})), DomainError);
}

TEST_CASE("decomposition intersects back to the ideal") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        MonomialIdeal I = rnd_ideal(rng, 3, 5, 2);
        if (!I.is_proper()) continue;
        auto comps = irreducible_decomposition(I);
        MonomialIdeal meet = comps[0];
        for (std::size_t i = 1; i < comps.size(); ++i) meet = intersect(meet, comps[i]);
        CHECK(same_ideal_on_box(I, meet, cap_of(I, 1)));
        for (const auto& c : comps) CHECK(c.generated_by_pure_powers());
    }
}

TEST_CASE("minimal primes") {
    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    auto mins = minimal_primes(J);
    REQUIRE(mins.size() == 2);
    CHECK(mins[0] == PrimeSupport({0, 1}));
    CHECK(mins[1] == PrimeSupport({2, 3}));

    MonomialIdeal I51(2, {e2(2, 0), e2(1, 1), e2(0, 2)});
    auto m2 = minimal_primes(I51);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == PrimeSupport({0, 1}));

    MonomialIdeal L(1, {{1}});
    auto m3 = minimal_primes(L);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == PrimeSupport({0}));
}

TEST_CASE("minimal primes agree with the minimal cover oracle") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 40; ++t) {
        MonomialIdeal I = rnd_ideal(rng, 4, 5, 2);
        if (!I.is_proper()) continue;
        auto mins = minimal_primes(I);
        // oracle: subsets covering every generator's support, minimal ones
        std::vector<PrimeSupport> covers;
        for (unsigned mask = 1; mask < 16; ++mask) {
            std::vector<int> vars;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) vars.push_back(i);
            bool cover = true;
            for (const auto& g : I.generators()) {
                bool hit = false;
                for (int v : vars)
                    if (g[v] > 0) hit = true;
                if (!hit) cover = false;
            }
            if (cover) covers.push_back(PrimeSupport(vars));
        }
        std::vector<PrimeSupport> minimal;
        for (const auto& p : covers) {
            bool min = true;
            for (const auto& q : covers)
                if (!(q == p) && q.subset_of(p)) min = false;
            if (min) minimal.push_back(p);
        }
        std::sort(minimal.begin(), minimal.end());
        CHECK(mins == minimal);
    }
}

TEST_CASE("prime filtration replays and counts minimal primes") {
    // single step for a principal prime
    MonomialIdeal L(1, {{1}});
    Filtration f1 = prime_filtration(L);
    REQUIRE(f1.steps.size() == 1);
    CHECK(f1.steps[0].prime == PrimeSupport({0}));
    CHECK(filtration_replay_check(f1));

    // the two-plane ideal
    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    Filtration f2 = prime_filtration(J);
    std::string why;
    CHECK_MESSAGE(filtration_replay_check(f2, &why), why);
    int xy = 0, zw = 0;
    for (const auto& st : f2.steps) {
        if (st.prime == PrimeSupport({0, 1})) ++xy;
        if (st.prime == PrimeSupport({2, 3})) ++zw;
    }
    CHECK(xy == 1);
    CHECK(zw == 1);

    // multiplicity via the localization length for a fatter ideal
    MonomialIdeal I(2, {e2(2, 0), e2(1, 1)});
    Filtration f3 = prime_filtration(I);
    CHECK(filtration_replay_check(f3, &why));
    long long at_x = 0;
    for (const auto& st : f3.steps)
        if (st.prime == PrimeSupport({0})) ++at_x;
    CHECK(at_x == geometric_multiplicity(I, PrimeSupport({0})));

    std::mt19937_64 rng(25);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal R = rnd_ideal(rng, 3, 4, 2);
        if (!R.is_proper()) continue;
        Filtration f = prime_filtration(R);
        CHECK_MESSAGE(filtration_replay_check(f, &why), why);
    }
}

TEST_CASE("geometric multiplicity") {
    MonomialIdeal I51(2, {e2(2, 0), e2(1, 1), e2(0, 2)});
    CHECK(geometric_multiplicity(I51, PrimeSupport({0, 1})) == 3);

    for (int a = 1; a <= 6; ++a) {
        MonomialIdeal P(1, {{a}});
        CHECK(geometric_multiplicity(P, PrimeSupport({0})) == a);
    }

    MonomialIdeal J(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    CHECK(geometric_multiplicity(J, PrimeSupport({0, 1})) == 1);
    CHECK(geometric_multiplicity(J, PrimeSupport({2, 3})) == 1);

    CHECK_THROWS_AS(geometric_multiplicity(J, PrimeSupport({0, 1, 2})), DomainError);
}

TEST_CASE("algebraic multiplicity via power fit and Newton volume") {
    MonomialIdeal I51(2, {e2(2, 0), e2(1, 1), e2(0, 2)});
    CHECK(hilbert_samuel_multiplicity(I51) == 4);

    // complete intersections: product of the exponents
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            MonomialIdeal I(2, {e2(a, 0), e2(0, b)});
            CHECK(hilbert_samuel_multiplicity(I) == a * b);
            CHECK(geometric_multiplicity(I, PrimeSupport({0, 1})) == a * b);
        }
    MonomialIdeal box3(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 2}});
    CHECK(hilbert_samuel_multiplicity(box3) == 12);

    // non-complete-intersection: strictly larger than the geometric one
    MonomialIdeal I(2, {e2(3, 0), e2(1, 1), e2(0, 2)});
    const long long hs = hilbert_samuel_multiplicity(I);
    CHECK(hs == 5);
    CHECK(geometric_multiplicity(I, PrimeSupport({0, 1})) == 4);
    CHECK(hs > geometric_multiplicity(I, PrimeSupport({0, 1})));

    // a three-variable mixed case; the internal volume cross-check must agree
    MonomialIdeal M(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
    CHECK(hilbert_samuel_multiplicity(M) > 0);

    CHECK_THROWS_AS(hilbert_samuel_multiplicity(MonomialIdeal(2, {e2(1, 1)})), DomainError);
}

TEST_CASE("Newton region volume for the cusp family") {
    MonomialIdeal I51(2, {e2(2, 0), e2(1, 1), e2(0, 2)});
    CHECK(newton_region_complement_volume(I51, {0, 1}) == Rational(2));

    MonomialIdeal I(2, {e2(3, 0), e2(1, 1), e2(0, 2)});
    CHECK(newton_region_complement_volume(I, {0, 1}) == Rational(5, 2));
}
