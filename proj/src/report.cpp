#include "cyclekit/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclekit/builders.hpp"
#include "cyclekit/homology.hpp"
#include "cyclekit/residue.hpp"

namespace cyclekit {

namespace {

using Rng = std::mt19937_64;

int rnd_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational rnd_rational(Rng& rng, bool nonzero = false) {
    int num = rnd_int(rng, -3, 3);
    if (nonzero)
        while (num == 0) num = rnd_int(rng, -3, 3);
    return Rational(num, rnd_int(rng, 1, 3));
}

Polynomial rnd_poly(Rng& rng, int n, int max_terms, int max_deg) {
    Polynomial p(n);
    const int terms = rnd_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = rnd_int(rng, 0, max_deg);
        p.add_term(e, rnd_rational(rng));
    }
    return p;
}

DifferentialForm rnd_form(Rng& rng, int n, int q) {
    DifferentialForm w(n);
    const int comps = rnd_int(rng, 1, 2);
    for (int c = 0; c < comps; ++c) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        IndexSet I(pool.begin(), pool.begin() + q);
        std::sort(I.begin(), I.end());
        w.add_component(I, rnd_poly(rng, n, 2, 2));
    }
    return w;
}

FormEndomorphism rnd_endo(Rng& rng, int n, const EndoSlot& src, const EndoSlot& tgt, int q) {
    FormEndomorphism a(n, src, tgt, q);
    for (int i = 0; i < tgt.rank; ++i)
        for (int j = 0; j < src.rank; ++j)
            if (rnd_int(rng, 0, 3) != 0) a.add_entry(i, j, rnd_form(rng, n, q));
    return a;
}

MonomialIdeal rnd_ideal(Rng& rng, int n, int max_gens, int max_exp) {
    std::vector<Exponents> gens;
    const int count = rnd_int(rng, 2, max_gens);
    for (int g = 0; g < count; ++g) {
        Exponents e(n, 0);
        while (is_zero_exp(e))
            for (int i = 0; i < n; ++i) e[i] = rnd_int(rng, 0, max_exp);
        gens.push_back(std::move(e));
    }
    return minimalize(n, gens);
}

std::vector<Term> monomials(int n, const std::vector<std::pair<std::vector<int>, int>>& entries) {
    // entries: (exponents, numerator of the coefficient)
    std::vector<Term> out;
    for (const auto& [e, c] : entries) {
        if (static_cast<int>(e.size()) != n) throw DimensionError("bad tuple literal");
        out.emplace_back(Rational(c), Exponents(e.begin(), e.end()));
    }
    return out;
}

std::vector<Term> power_tuple(const std::vector<int>& a, const std::vector<Rational>& c) {
    const int p = static_cast<int>(a.size());
    std::vector<Term> f;
    for (int i = 0; i < p; ++i) {
        Exponents e(p, 0);
        e[i] = a[i];
        f.emplace_back(c[i], std::move(e));
    }
    return f;
}

void product_tuples_rec(int p, long long bound, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (long long a = 1; a <= bound; ++a) {
        cur.push_back(static_cast<int>(a));
        product_tuples_rec(p, bound / a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> product_tuples(int p, long long bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    product_tuples_rec(p, bound, cur, out);
    return out;
}

CheckResult trial_check(const std::string& id, const std::string& desc, int failures, int trials,
                        const std::string& extra = "") {
    CheckResult r{id, desc, failures == 0, ""};
    std::ostringstream os;
    os << trials - failures << "/" << trials << " exact";
    if (!extra.empty()) os << "; " << extra;
    r.detail = os.str();
    return r;
}

// -- individual randomized laws -------------------------------------------

CheckResult check_composition_law(Rng& rng, int trials) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 3;
        const int qa = rnd_int(rng, 0, 2), qb = rnd_int(rng, 0, 2);
        EndoSlot s1{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot s2{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot s3{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};

        // decomposable case against the explicit sign formula
        DifferentialForm wa = rnd_form(rng, n, qa), wb = rnd_form(rng, n, qb);
        std::vector<std::vector<Rational>> ga(s3.rank, std::vector<Rational>(s2.rank));
        std::vector<std::vector<Rational>> gb(s2.rank, std::vector<Rational>(s1.rank));
        for (auto& row : ga)
            for (auto& x : row) x = rnd_rational(rng);
        for (auto& row : gb)
            for (auto& x : row) x = rnd_rational(rng);
        FormEndomorphism a(n, s2, s3, qa), b(n, s1, s2, qb);
        for (int i = 0; i < s3.rank; ++i)
            for (int j = 0; j < s2.rank; ++j) a.add_entry(i, j, wa * ga[i][j]);
        for (int i = 0; i < s2.rank; ++i)
            for (int j = 0; j < s1.rank; ++j) b.add_entry(i, j, wb * gb[i][j]);

        FormEndomorphism expected(n, s1, s3, qa + qb);
        const DifferentialForm wab = wedge(wa, wb);
        const int sign = ((a.endo_degree() * qb) % 2 + 2) % 2;
        for (int i = 0; i < s3.rank; ++i)
            for (int j = 0; j < s1.rank; ++j) {
                Rational c(0);
                for (int m = 0; m < s2.rank; ++m) c += ga[i][m] * gb[m][j];
                DifferentialForm w = wab * c;
                if (sign) w = -w;
                expected.add_entry(i, j, w);
            }
        if (!(compose(a, b) == expected)) ++failures;

        // associativity on a random third factor
        FormEndomorphism c = rnd_endo(rng, n, s3, EndoSlot{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)},
                                      rnd_int(rng, 0, 1));
        if (!(compose(compose(c, a), b) == compose(c, compose(a, b)))) ++failures;
    }
    return trial_check("sign-compose", "composition sign law on form-valued blocks", failures, trials);
}

CheckResult check_trace_law(Rng& rng, int trials) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 3;
        const int qa = rnd_int(rng, 0, 2), qb = rnd_int(rng, 0, 2);
        EndoSlot sa{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot sb{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        FormEndomorphism a = rnd_endo(rng, n, sa, sb, qa);
        FormEndomorphism b = rnd_endo(rng, n, sb, sa, qb);
        const int da = a.total_degree(), db = b.total_degree();
        const int de = a.endo_degree() * b.endo_degree();
        const int sign = ((da * db - de) % 2 + 2) % 2;
        DifferentialForm lhs = graded_trace(compose(a, b));
        DifferentialForm rhs = graded_trace(compose(b, a));
        if (sign) rhs = -rhs;
        if (!(lhs == rhs)) ++failures;
    }
    return trial_check("sign-trace", "trace commutation law", failures, trials);
}

CheckResult check_leibniz_law(Rng& rng, int trials) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 3;
        EndoSlot s1{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot s2{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot s3{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        FormEndomorphism a = rnd_endo(rng, n, s2, s3, rnd_int(rng, 0, 2));
        FormEndomorphism b = rnd_endo(rng, n, s1, s2, rnd_int(rng, 0, 2));
        FormEndomorphism lhs = connection_D(compose(a, b));
        FormEndomorphism rhs = compose(connection_D(a), b) +
                               compose(a, connection_D(b)).scaled(a.total_degree() % 2 ? -1 : 1);
        if (!(lhs == rhs)) ++failures;
    }
    return trial_check("sign-leibniz", "connection Leibniz rule", failures, trials);
}

CheckResult check_product_commutation(Rng& rng, int trials) {
    int failures = 0;
    int done = 0;
    while (done < trials) {
        const int n = rnd_int(rng, 1, 3);
        Complex E = [&] {
            if (rnd_int(rng, 0, 1) == 0) {
                std::vector<Term> f;
                const int m = rnd_int(rng, 2, 4);
                for (int i = 0; i < m; ++i) {
                    Exponents e(n, 0);
                    while (is_zero_exp(e))
                        for (int v = 0; v < n; ++v) e[v] = rnd_int(rng, 0, 2);
                    f.emplace_back(rnd_rational(rng, true), std::move(e));
                }
                return koszul(f, n);
            }
            return taylor_resolution(rnd_ideal(rng, n, 4, 2));
        }();
        for (int l = 1; l < E.top_level() && done < trials; ++l)
            for (int k = l + 1; k <= E.top_level() && done < trials; ++k) {
                if (!product_commutation_check(E, l, k)) ++failures;
                ++done;
            }
    }
    return trial_check("sign-product-commutation", "differential product commutation across levels", failures, trials);
}

CheckResult check_pluto_mars(Rng& rng, int trials) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 3;
        EndoSlot s1{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        EndoSlot s2{rnd_int(rng, 0, 3), false, rnd_int(rng, 1, 3)};
        // form-degree-0 case commutes without a sign
        FormEndomorphism g = rnd_endo(rng, n, s1, s2, 0);
        if (!(tilde_and_epsilon(g, EpsilonSide::left) == tilde_and_epsilon(g, EpsilonSide::right)))
            ++failures;
        // general form degree picks up (-1)^q
        const int q = rnd_int(rng, 0, 2);
        FormEndomorphism a = rnd_endo(rng, n, s1, s2, q);
        FormEndomorphism lhs = tilde_and_epsilon(a, EpsilonSide::left);
        FormEndomorphism rhs = tilde_and_epsilon(a, EpsilonSide::right).scaled(q % 2 ? -1 : 1);
        if (!(lhs == rhs)) ++failures;
        // eps inverse really inverts
        FormEndomorphism eps = epsilon_map(n, s1.level, s1.rank);
        FormEndomorphism eps_inv = epsilon_map(n, s1.level, s1.rank, true);
        EndoSlot tilde_slot{s1.level, true, s1.rank};
        if (!(compose(eps, eps_inv) == FormEndomorphism::identity(n, tilde_slot))) ++failures;
    }
    return trial_check("sign-reorder", "parity-reversal reordering laws", failures, trials);
}

struct SnikenStats {
    int maps = 0;
    int windows = 0;
    int failures = 0;
    bool degenerate_seen = false;
};

void decomposition_over_windows(const Complex& E, const Complex& G, const std::vector<GradedMatrix>& blocks,
                         SnikenStats& st, bool expect_degenerate) {
    ++st.maps;
    const int top = std::max(E.top_level(), G.top_level());
    for (int p = 1; p <= std::min(3, top); ++p) {
        for (int l = 0; l + p <= top + 1 && l <= 2; ++l) {
            const ProductDecomposition d = product_decomposition(E, G, blocks, l, p);
            ++st.windows;
            if (!d.verified) ++st.failures;
            if (expect_degenerate) {
                if (d.delta.is_zero() && d.alpha.is_zero() && d.beta.is_zero() && d.lhs == d.gamma)
                    st.degenerate_seen = true;
                else
                    ++st.failures;
            }
        }
    }
}

CheckResult check_product_decomposition(Rng& rng, int min_maps) {
    SnikenStats st;

    // identity maps: the connection kills Db entirely
    for (int i = 0; i < 4; ++i) {
        Complex T = taylor_resolution(rnd_ideal(rng, rnd_int(rng, 2, 3), 4, 2));
        std::vector<GradedMatrix> blocks;
        for (int l = 0; l <= T.top_level(); ++l) blocks.push_back(GradedMatrix::identity(T.module(l)));
        decomposition_over_windows(T, T, blocks, st, true);
    }

    // lifted inclusions from filtration steps and cone embeddings
    while (st.maps < min_maps) {
        MonomialIdeal I = rnd_ideal(rng, rnd_int(rng, 2, 3), 4, 2);
        if (!I.is_proper()) continue;
        Filtration f = prime_filtration(I);
        MonomialIdeal K = I;
        for (const auto& step : f.steps) {
            std::vector<Exponents> pg;
            for (int v : step.prime.vars) {
                Exponents e(I.nvars(), 0);
                e[v] = 1;
                pg.push_back(std::move(e));
            }
            Complex F = taylor_resolution(MonomialIdeal(I.nvars(), pg)).shifted_degrees(step.witness);
            Complex E = taylor_resolution(K);
            GradedMatrix alpha(F.module(0), E.module(0));
            alpha.add_entry(0, 0, Rational(1));
            ChainMap a = lift_morphism(alpha, F, E);
            std::vector<GradedMatrix> blocks;
            for (int l = 0; l < a.block_count(); ++l) blocks.push_back(a.block(l));
            decomposition_over_windows(F, E, blocks, st, false);

            MappingCone cone = mapping_cone(a);
            std::vector<GradedMatrix> tb;
            for (int l = 0; l < cone.theta.block_count(); ++l) tb.push_back(cone.theta.block(l));
            decomposition_over_windows(E, cone.cone, tb, st, false);

            K = K.plus_monomial(step.witness);
            if (st.maps >= min_maps) break;
        }
    }

    CheckResult r = trial_check("sign-product-decomposition",
                                "chain-map product decomposition, including the flat case",
                                st.failures, st.windows);
    std::ostringstream os;
    os << r.detail << "; " << st.maps << " chain maps";
    r.detail = os.str();
    r.pass = r.pass && st.degenerate_seen && st.maps >= min_maps;
    return r;
}

}  // namespace

std::vector<CheckResult> run_sign_suite(const ReportOptions& opt) {
    Rng rng(opt.seed);
    std::vector<CheckResult> out;
    out.push_back(check_composition_law(rng, opt.trials));
    out.push_back(check_trace_law(rng, opt.trials));
    out.push_back(check_leibniz_law(rng, opt.trials));
    out.push_back(check_product_commutation(rng, opt.trials));
    out.push_back(check_pluto_mars(rng, opt.trials));
    out.push_back(check_product_decomposition(rng, 20));
    return out;
}

namespace {

// -- acceptance checks ------------------------------------------------------

CheckResult acceptance_multiplicities(const ReportOptions&) {
    CheckResult r{"mult-example", "cusp-family ideal: algebraic 4, geometric 3, methods agree", false, ""};
    try {
        MonomialIdeal I(2, {{2, 0}, {1, 1}, {0, 2}});
        const long long hs = hilbert_samuel_multiplicity(I);  // cross-checked internally
        const long long geo = geometric_multiplicity(I, PrimeSupport({0, 1}));
        r.pass = (hs == 4 && geo == 3);
        r.detail = "hilbert_samuel=" + std::to_string(hs) + " geometric=" + std::to_string(geo);
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_filtration(const ReportOptions&) {
    CheckResult r{"filtration-example", "two-plane ideal: valid chain, both planes exactly once", false, ""};
    try {
        // (xz, xw, yz, yw) in variables x, y, z, w
        MonomialIdeal I(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
        Filtration f = prime_filtration(I);
        std::string why;
        bool ok = filtration_replay_check(f, &why);
        int xy = 0, zw = 0;
        bool rest_ok = true;
        const auto mins = minimal_primes(I);
        for (const auto& st : f.steps) {
            if (st.prime == PrimeSupport({0, 1})) ++xy;
            else if (st.prime == PrimeSupport({2, 3})) ++zw;
            else {
                bool in_support = false;
                for (const auto& q : mins)
                    if (q.subset_of(st.prime)) in_support = true;
                if (st.prime.codim() < 3 || !in_support) rest_ok = false;
            }
        }
        r.pass = ok && xy == 1 && zw == 1 && rest_ok;
        std::ostringstream os;
        os << f.steps.size() << " steps, replay " << (ok ? "valid" : why);
        r.detail = os.str();
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_cancellation(const ReportOptions& opt) {
    CheckResult r{"koszul-cancellation", "total cycle vanishes, level-0 cycle does not", false, ""};
    try {
        const Complex K = koszul(monomials(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}), 2);
        Cycle expected;
        expected.add(PrimeSupport({0, 1}), 3);
        bool ok = complex_cycle(K, opt.margin).is_zero() && module_cycle(K, 0, opt.margin) == expected;

        struct Case {
            std::vector<Term> f;
            int n, p;
        };
        const std::vector<Case> more = {
            {monomials(1, {{{1}, 1}, {{1}, 1}}), 1, 1},
            {monomials(1, {{{1}, 1}, {{2}, 1}}), 1, 1},
            {monomials(1, {{{1}, 1}, {{2}, 1}, {{3}, 1}}), 1, 1},
            {monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}), 2, 2},
            {monomials(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 3}, 1}}), 2, 2},
            {monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}), 2, 2},
        };
        int extra = 0;
        for (const auto& c : more)
            if (koszul_binomial_check(c.f, c.n, c.p, opt.margin)) ++extra;
        r.pass = ok && extra == static_cast<int>(more.size());
        r.detail = "base case " + std::string(ok ? "ok" : "failed") + ", " + std::to_string(extra) + "/" +
                   std::to_string(more.size()) + " further tuples";
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_pl_sweep(const ReportOptions& opt, std::vector<std::vector<Term>>* tuples_out) {
    CheckResult r{"point-mass-factorization",
                  "residue functional, monomial count and level-0 cycle agree on power tuples", false, ""};
    try {
        Rng rng(opt.seed + 1);
        int count = 0, failures = 0;
        auto run = [&](const std::vector<int>& a) {
            std::vector<Rational> c;
            for (std::size_t i = 0; i < a.size(); ++i) c.push_back(rnd_rational(rng, true));
            std::vector<Term> f = power_tuple(a, c);
            const PlVerification v = pl_verify(f, static_cast<int>(a.size()));
            ++count;
            if (!v.pass) ++failures;
            if (tuples_out) tuples_out->push_back(std::move(f));
        };
        for (int p = 1; p <= 4; ++p)
            for (const auto& a : product_tuples(p, 64)) run(a);
        // taller tuples, sampled
        run({1, 1, 1, 1, 1});
        run({2, 2, 2, 2, 2});
        run({4, 2, 2, 1, 1});
        run({1, 1, 1, 1, 1, 1});
        run({2, 2, 2, 2, 2, 2});
        r.pass = failures == 0;
        r.detail = std::to_string(count - failures) + "/" + std::to_string(count) + " tuples";
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_sign_suite(const ReportOptions& opt) {
    const std::vector<CheckResult> sub = run_sign_suite(opt);
    CheckResult r{"sign-calculus", "randomized identity suite", all_pass(sub), ""};
    std::ostringstream os;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (i) os << ", ";
        os << sub[i].id << (sub[i].pass ? " ok" : " FAILED");
    }
    r.detail = os.str();
    return r;
}

struct SesCase {
    MonomialIdeal before;
    FiltrationStep step;
};

std::vector<SesCase> sample_ses_cases(const ReportOptions& opt, int wanted) {
    Rng rng(opt.seed + 2);
    std::vector<SesCase> out;
    while (static_cast<int>(out.size()) < wanted) {
        const int n = rnd_int(rng, 2, 4);
        MonomialIdeal I = rnd_ideal(rng, n, 5, 2);
        if (!I.is_proper()) continue;
        Filtration f = prime_filtration(I);
        MonomialIdeal K = I;
        for (const auto& step : f.steps) {
            out.push_back({K, step});
            K = K.plus_monomial(step.witness);
            if (static_cast<int>(out.size()) >= wanted) break;
        }
    }
    return out;
}

CheckResult acceptance_cone_resolutions(const ReportOptions& opt, const std::vector<SesCase>& cases) {
    CheckResult r{"cone-resolution", "cone of a lifted inclusion resolves the quotient", false, ""};
    try {
        int ok = 0;
        for (const auto& c : cases) {
            std::vector<Exponents> pg;
            for (int v : c.step.prime.vars) {
                Exponents e(c.before.nvars(), 0);
                e[v] = 1;
                pg.push_back(std::move(e));
            }
            Complex F =
                taylor_resolution(MonomialIdeal(c.before.nvars(), pg)).shifted_degrees(c.step.witness);
            Complex E = taylor_resolution(c.before);
            GradedMatrix alpha(F.module(0), E.module(0));
            alpha.add_entry(0, 0, Rational(1));
            ChainMap a = lift_morphism(alpha, F, E);
            MappingCone mc = mapping_cone(a);
            const MonomialIdeal after = c.before.plus_monomial(c.step.witness);
            const bool exact = positive_homology_vanishes(mc.cone, opt.margin);
            const bool cycles = module_cycle(mc.cone, 0, opt.margin) == cycle_of_quotient(after, opt.margin);
            if (exact && cycles) ++ok;
        }
        r.pass = ok == static_cast<int>(cases.size());
        r.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " short exact sequences";
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_big_diagram(const ReportOptions& opt) {
    CheckResult r{"three-row-diagram", "row homology tables reproduced strand by strand", false, ""};
    try {
        std::vector<std::pair<Complex, std::optional<Complex>>> cases;
        cases.emplace_back(koszul(monomials(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}), 2), std::nullopt);
        cases.emplace_back(koszul(monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}), 2), std::nullopt);
        cases.emplace_back(koszul(monomials(2, {{{3, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}), 2), std::nullopt);
        cases.emplace_back(koszul(monomials(2, {{{2, 0}, 1}, {{1, 2}, 1}, {{0, 3}, 1}}), 2), std::nullopt);
        cases.emplace_back(
            koszul(monomials(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 1}}), 3),
            std::nullopt);
        {
            // direct sum with a shifted resolution: one extra homology level,
            // cokernel presentation has a zero column, so the tail is supplied
            MonomialIdeal J(2, {{2, 0}, {1, 1}, {0, 2}});
            Complex T = taylor_resolution(J);
            Complex Kz = koszul(monomials(2, {{{1, 0}, 1}, {{0, 1}, 1}}), 2).shifted_levels(1);
            Complex E = direct_sum(T, Kz);
            std::vector<FreeModule> dm(3);
            dm[1].gens = {Exponents{0, 0}};
            dm[2].gens = {Exponents{0, 0}};
            std::vector<GradedMatrix> dd;
            dd.emplace_back(dm[1], dm[0]);
            GradedMatrix id2(dm[2], dm[1]);
            id2.add_entry(0, 0, Rational(1));
            dd.push_back(std::move(id2));
            Complex D(2, std::move(dm), std::move(dd));
            Complex G = direct_sum(T, D);
            cases.emplace_back(std::move(E), std::move(G));
        }

        int ok = 0;
        std::string why;
        for (auto& [E, G] : cases) {
            BigDiagram d = big_diagram(E, 1, G);
            if (verify_big_diagram_rows(E, d, opt.margin, &why)) ++ok;
        }
        r.pass = ok == static_cast<int>(cases.size());
        r.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " instances";
        if (!r.pass) r.detail += "; last: " + why;
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_additivity(const ReportOptions& opt, const std::vector<SesCase>& cases) {
    CheckResult r{"cycle-additivity", "cycles add along filtration steps at the support codimension",
                  false, ""};
    try {
        // the steps of the two-plane example plus every sampled step
        std::vector<SesCase> all = cases;
        MonomialIdeal I(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
        Filtration f = prime_filtration(I);
        MonomialIdeal K = I;
        for (const auto& step : f.steps) {
            all.push_back({K, step});
            K = K.plus_monomial(step.witness);
        }
        int ok = 0;
        for (const auto& c : all)
            if (cycle_additivity_check(c.before, c.step, opt.margin)) ++ok;
        r.pass = ok == static_cast<int>(all.size());
        r.detail = std::to_string(ok) + "/" + std::to_string(all.size()) + " steps";
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult acceptance_disputation(const std::vector<std::vector<Term>>& tuples) {
    CheckResult r{"contraction-normalization", "factorial normalization of the derivative product",
                  false, ""};
    try {
        int ok = 0;
        for (const auto& f : tuples)
            if (contraction_normalization_check(f, static_cast<int>(f.size()))) ++ok;
        r.pass = ok == static_cast<int>(tuples.size()) && !tuples.empty();
        r.detail = std::to_string(ok) + "/" + std::to_string(tuples.size()) + " tuples";
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const ReportOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(acceptance_multiplicities(opt));
    out.push_back(acceptance_filtration(opt));
    out.push_back(acceptance_cancellation(opt));
    std::vector<std::vector<Term>> tuples;
    out.push_back(acceptance_pl_sweep(opt, &tuples));
    out.push_back(acceptance_sign_suite(opt));
    const std::vector<SesCase> cases = sample_ses_cases(opt, 10);
    out.push_back(acceptance_cone_resolutions(opt, cases));
    out.push_back(acceptance_big_diagram(opt));
    out.push_back(acceptance_additivity(opt, cases));
    out.push_back(acceptance_disputation(tuples));
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace cyclekit
