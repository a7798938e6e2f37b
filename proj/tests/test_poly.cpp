#include <doctest.h>

#include <map>
#include <random>

#include "cyclekit/poly.hpp"

using namespace cyclekit;

namespace {

Polynomial rnd_poly(std::mt19937_64& rng, int n, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-4, 4), den(1, 3), cnt(0, max_terms);
    Polynomial p(n);
    const int terms = cnt(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = deg(rng);
        p.add_term(e, Rational(num(rng), den(rng)));
    }
    return p;
}

// independent convolution oracle
Polynomial mul_oracle(const Polynomial& a, const Polynomial& b) {
    std::map<Exponents, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    Polynomial r(a.nvars());
    for (const auto& [e, c] : acc) r.add_term(e, c);
    return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);

    // difference of squares
    CHECK((x + y) * (x - y) == x * x - y * y);

    // annihilator
    CHECK(((x + y) * Polynomial::zero(2)).is_zero());

    CHECK_THROWS_AS(Polynomial::variable(2, 0) + Polynomial::variable(3, 0), DimensionError);
}

TEST_CASE("product matches the convolution oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Polynomial a = rnd_poly(rng, 3, 5, 4);
        const Polynomial b = rnd_poly(rng, 3, 5, 4);
        CHECK(a * b == mul_oracle(a, b));
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Polynomial a = rnd_poly(rng, 2, 4, 3);
        const Polynomial b = rnd_poly(rng, 2, 4, 3);
        const Polynomial c = rnd_poly(rng, 2, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("wedge product signs") {
    const int n = 3;
    const DifferentialForm dz1 = DifferentialForm::dz(n, 0);
    const DifferentialForm dz2 = DifferentialForm::dz(n, 1);
    const Polynomial z1 = Polynomial::variable(n, 0);
    const Polynomial z2 = Polynomial::variable(n, 1);

    const DifferentialForm dz12 = DifferentialForm::component(Polynomial::constant(n, 1), {0, 1});
    CHECK(wedge(dz1, dz2) == dz12);
    CHECK(wedge(dz2, dz1) == -dz12);
    CHECK(wedge(dz1, dz1).is_zero());

    // (z2 dz1) ^ (z1 dz2) = z1 z2 dz12, by bilinearity
    const DifferentialForm lhs = wedge(dz1 * z2, dz2 * z1);
    CHECK(lhs == DifferentialForm::component(z1 * z2, {0, 1}));
}

TEST_CASE("wedge is graded-anticommutative") {
    std::mt19937_64 rng(13);
    auto rnd_form = [&](int q) {
        DifferentialForm w(3);
        IndexSet all{0, 1, 2};
        std::shuffle(all.begin(), all.end(), rng);
        IndexSet I(all.begin(), all.begin() + q);
        std::sort(I.begin(), I.end());
        w.add_component(I, rnd_poly(rng, 3, 3, 2));
        std::shuffle(all.begin(), all.end(), rng);
        IndexSet J(all.begin(), all.begin() + q);
        std::sort(J.begin(), J.end());
        w.add_component(J, rnd_poly(rng, 3, 3, 2));
        return w;
    };
    for (int t = 0; t < 120; ++t) {
        const int q1 = t % 3, q2 = (t / 3) % 3;
        const DifferentialForm a = rnd_form(q1);
        const DifferentialForm b = rnd_form(q2);
        DifferentialForm ba = wedge(b, a);
        if ((q1 * q2) % 2) ba = -ba;
        CHECK(wedge(a, b) == ba);
    }
}

TEST_CASE("exterior derivative") {
    const int n = 2;
    const Polynomial z1 = Polynomial::variable(n, 0);
    const Polynomial z2 = Polynomial::variable(n, 1);

    // power rule
    CHECK(exterior_d(z1 * z1) == DifferentialForm::component(z1 * Rational(2), {0}));

    // d(z1 z2 dz1) = z1 dz2 ^ dz1 = -z1 dz12
    const DifferentialForm w = DifferentialForm::component(z1 * z2, {0});
    CHECK(exterior_d(w) == DifferentialForm::component(-z1, {0, 1}));

    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = rnd_poly(rng, 2, 4, 3);
        CHECK(exterior_d(exterior_d(p)).is_zero());
    }
}

TEST_CASE("Leibniz rule for d on random forms") {
    std::mt19937_64 rng(15);
    auto rnd_pure = [&](int q) {
        DifferentialForm w(3);
        IndexSet all{0, 1, 2};
        std::shuffle(all.begin(), all.end(), rng);
        IndexSet I(all.begin(), all.begin() + q);
        std::sort(I.begin(), I.end());
        w.add_component(I, rnd_poly(rng, 3, 3, 2));
        return w;
    };
    for (int t = 0; t < 150; ++t) {
        const int q = t % 3;
        const DifferentialForm a = rnd_pure(q);
        const DifferentialForm b = rnd_pure((t / 3) % 3);
        DifferentialForm rhs = wedge(exterior_d(a), b);
        DifferentialForm adb = wedge(a, exterior_d(b));
        rhs = (q % 2) ? rhs - adb : rhs + adb;
        CHECK(exterior_d(wedge(a, b)) == rhs);
        CHECK(exterior_d(exterior_d(a)).is_zero());
    }
}
