#include "cyclekit/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclekit {

PrimeSupport::PrimeSupport(std::vector<int> v) : vars(std::move(v)) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

bool PrimeSupport::contains_var(int i) const {
    return std::binary_search(vars.begin(), vars.end(), i);
}

bool PrimeSupport::subset_of(const PrimeSupport& o) const {
    return std::includes(o.vars.begin(), o.vars.end(), vars.begin(), vars.end());
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponents> gens) : n_(nvars) {
    std::vector<Exponents> kept;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != nvars)
            throw DimensionError("generator exponent length != nvars");
        for (int e : g)
            if (e < 0) throw DomainError("negative exponent in generator");
        bool dominated = false;
        for (const auto& h : kept)
            if (divides(h, g)) { dominated = true; break; }
        if (dominated) continue;
        kept.erase(std::remove_if(kept.begin(), kept.end(),
                                  [&](const Exponents& h) { return divides(g, h); }),
                   kept.end());
        kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), GradedLexLess{});
    gens_ = std::move(kept);
}

MonomialIdeal minimalize(int nvars, const std::vector<Exponents>& gens) {
    return MonomialIdeal(nvars, gens);
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && is_zero_exp(gens_[0]);
}

bool MonomialIdeal::contains(const Exponents& m) const {
    if (static_cast<int>(m.size()) != n_) throw DimensionError("membership across variable counts");
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::colon(const Exponents& m) const {
    if (static_cast<int>(m.size()) != n_) throw DimensionError("colon across variable counts");
    std::vector<Exponents> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
        Exponents q(n_);
        for (int i = 0; i < n_; ++i) q[i] = std::max(0, g[i] - m[i]);
        out.push_back(std::move(q));
    }
    return minimalize(n_, out);
}

MonomialIdeal MonomialIdeal::plus_monomial(const Exponents& m) const {
    std::vector<Exponents> out = gens_;
    out.push_back(m);
    return minimalize(n_, out);
}

MonomialIdeal MonomialIdeal::localize_at(const PrimeSupport& P) const {
    std::vector<Exponents> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
        Exponents q(P.vars.size());
        for (std::size_t j = 0; j < P.vars.size(); ++j) q[j] = g[P.vars[j]];
        out.push_back(std::move(q));
    }
    return minimalize(static_cast<int>(P.vars.size()), out);
}

bool MonomialIdeal::generated_by_pure_powers() const {
    for (const auto& g : gens_) {
        int positive = 0;
        for (int e : g)
            if (e > 0) ++positive;
        if (positive != 1) return false;
    }
    return true;
}

bool MonomialIdeal::is_prime() const {
    for (const auto& g : gens_) {
        int positive = 0;
        bool linear = true;
        for (int e : g) {
            if (e > 0) ++positive;
            if (e > 1) linear = false;
        }
        if (positive != 1 || !linear) return false;
    }
    return !gens_.empty();
}

std::optional<PrimeSupport> MonomialIdeal::as_prime() const {
    if (!is_prime()) return std::nullopt;
    std::vector<int> vars;
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i)
            if (g[i] > 0) vars.push_back(i);
    return PrimeSupport(std::move(vars));
}

std::optional<int> MonomialIdeal::pure_power_exponent(int var) const {
    std::optional<int> best;
    for (const auto& g : gens_) {
        bool pure = g[var] > 0;
        for (int i = 0; i < n_ && pure; ++i)
            if (i != var && g[i] > 0) pure = false;
        if (pure && (!best || g[var] < *best)) best = g[var];
    }
    return best;
}

bool MonomialIdeal::is_artinian_in(const std::vector<int>& vars) const {
    for (int v : vars)
        if (!pure_power_exponent(v)) return false;
    return true;
}

std::vector<int> MonomialIdeal::support_vars() const {
    std::set<int> s;
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i)
            if (g[i] > 0) s.insert(i);
    return std::vector<int>(s.begin(), s.end());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("intersect across variable counts");
    std::vector<Exponents> out;
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) out.push_back(exp_max(g, h));
    return minimalize(a.nvars(), out);
}

namespace {

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    // a subset of b iff every generator of a lies in b
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

void decompose_rec(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
    if (I.generated_by_pure_powers()) {
        out.push_back(I);
        return;
    }
    // pick the first mixed generator and split at its first variable
    for (const auto& g : I.generators()) {
        int vars = 0;
        for (int e : g)
            if (e > 0) ++vars;
        if (vars < 2) continue;
        int i = 0;
        while (g[i] == 0) ++i;
        Exponents u(I.nvars(), 0), v = g;
        u[i] = g[i];
        v[i] = 0;
        decompose_rec(I.plus_monomial(u), out);
        decompose_rec(I.plus_monomial(v), out);
        return;
    }
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
    if (!I.is_proper()) throw DomainError("irreducible decomposition needs a nonzero proper ideal");
    std::vector<MonomialIdeal> comps;
    decompose_rec(I, comps);

    // dedupe
    std::sort(comps.begin(), comps.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.generators() < b.generators();
    });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // drop components containing the intersection of the others
    for (std::size_t i = 0; i < comps.size();) {
        MonomialIdeal rest(I.nvars(), {Exponents(I.nvars(), 0)});  // unit ideal
        bool first = true;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (j == i) continue;
            rest = first ? comps[j] : intersect(rest, comps[j]);
            first = false;
        }
        if (!first && ideal_subset(rest, comps[i])) comps.erase(comps.begin() + i);
        else ++i;
    }
    return comps;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
    if (!I.is_proper()) throw DomainError("minimal primes need a nonzero proper ideal");
    std::set<PrimeSupport> rads;
    for (const auto& C : irreducible_decomposition(I)) {
        std::vector<int> vars;
        for (const auto& g : C.generators())
            for (int i = 0; i < C.nvars(); ++i)
                if (g[i] > 0) vars.push_back(i);
        rads.insert(PrimeSupport(std::move(vars)));
    }
    std::vector<PrimeSupport> out;
    for (const auto& p : rads) {
        bool minimal = true;
        for (const auto& q : rads)
            if (!(q == p) && q.subset_of(p)) { minimal = false; break; }
        if (minimal) out.push_back(p);
    }
    return out;
}

namespace {

// All exponent vectors in the box [0, cap] by increasing total degree,
// graded-lex within a degree.
std::vector<Exponents> box_monomials(const Exponents& cap) {
    std::vector<Exponents> out;
    Exponents cur(cap.size(), 0);
    std::size_t total = 1;
    for (int c : cap) total *= static_cast<std::size_t>(c) + 1;
    out.reserve(total);
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(cap.size()) - 1;
        while (i >= 0 && cur[i] == cap[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

Exponents generator_cap(const MonomialIdeal& I) {
    Exponents cap(I.nvars(), 0);
    for (const auto& g : I.generators()) cap = exp_max(cap, g);
    return cap;
}

}  // namespace

Filtration prime_filtration(const MonomialIdeal& I) {
    if (!I.is_proper()) throw DomainError("prime filtration needs a nonzero proper ideal");
    Filtration f{I, {}};
    const std::vector<Exponents> candidates = box_monomials(generator_cap(I));
    MonomialIdeal K = I;
    while (!K.is_unit()) {
        bool found = false;
        for (const auto& m : candidates) {
            if (K.contains(m)) continue;
            MonomialIdeal q = K.colon(m);
            if (auto P = q.as_prime()) {
                f.steps.push_back({m, *P});
                K = K.plus_monomial(m);
                found = true;
                break;
            }
        }
        if (!found) throw InternalConsistencyError("no prime witness found inside the generator box");
    }
    return f;
}

bool filtration_replay_check(const Filtration& f, std::string* why) {
    MonomialIdeal K = f.base;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!K.is_proper()) return fail("base ideal not proper");
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const auto& st = f.steps[i];
        if (K.contains(st.witness)) return fail("witness already in ideal at step " + std::to_string(i));
        MonomialIdeal q = K.colon(st.witness);
        auto P = q.as_prime();
        if (!P || !(*P == st.prime)) return fail("colon not the claimed prime at step " + std::to_string(i));
        K = K.plus_monomial(st.witness);
    }
    if (!K.is_unit()) return fail("chain does not exhaust the quotient");
    // each minimal prime of the base must occur exactly its local length times
    for (const auto& P : minimal_primes(f.base)) {
        long long expected = geometric_multiplicity(f.base, P);
        long long seen = 0;
        for (const auto& st : f.steps)
            if (st.prime == P) ++seen;
        if (seen != expected)
            return fail("minimal prime count mismatch (expected " + std::to_string(expected) +
                        ", saw " + std::to_string(seen) + ")");
    }
    return true;
}

long long standard_monomial_count(const MonomialIdeal& I, const std::vector<int>& vars) {
    // count in the polynomial ring on `vars`; the ideal must not involve others
    PrimeSupport P{std::vector<int>(vars)};
    MonomialIdeal J = I.localize_at(P);
    if (!J.is_artinian_in([&] {
            std::vector<int> all(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) all[i] = static_cast<int>(i);
            return all;
        }()))
        throw DomainError("standard monomial count needs an Artinian ideal");
    Exponents cap(J.nvars());
    for (int i = 0; i < J.nvars(); ++i) cap[i] = *J.pure_power_exponent(i) - 1;
    long long count = 0;
    for (const auto& m : box_monomials(cap))
        if (!J.contains(m)) ++count;
    return count;
}

long long geometric_multiplicity(const MonomialIdeal& I, const PrimeSupport& P) {
    if (!I.is_proper()) throw DomainError("geometric multiplicity needs a nonzero proper ideal");
    const auto mins = minimal_primes(I);
    if (std::find(mins.begin(), mins.end(), P) == mins.end())
        throw DomainError("prime is not minimal over the ideal");
    MonomialIdeal J = I.localize_at(P);
    std::vector<int> all(P.vars.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return standard_monomial_count(J, all);
}

MonomialIdeal ideal_power(const MonomialIdeal& I, int t) {
    if (t < 1) throw DomainError("ideal power needs t >= 1");
    MonomialIdeal R = I;
    for (int k = 1; k < t; ++k) {
        std::vector<Exponents> out;
        for (const auto& g : R.generators())
            for (const auto& h : I.generators()) out.push_back(exp_add(g, h));
        R = minimalize(I.nvars(), out);
    }
    return R;
}

namespace {

using Vec = std::vector<Integer>;

Integer det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Integer det3(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec to_vec(const Exponents& e) {
    Vec v;
    v.reserve(e.size());
    for (int x : e) v.emplace_back(x);
    return v;
}

// Facet of conv(points)+orthant with inner normal w >= 0 and offset h > 0.
struct Facet {
    Vec w;
    Integer h;
    std::vector<std::size_t> on;  // indices of points on the facet
    bool operator<(const Facet& o) const { return std::tie(w, h) < std::tie(o.w, o.h); }
    bool operator==(const Facet& o) const { return w == o.w && h == o.h; }
};

void normalize(Vec& w, Integer& h) {
    Integer g = abs(h);
    for (const auto& x : w) g = gcd(g, abs(x));
    if (g > 1) {
        for (auto& x : w) x /= g;
        h /= g;
    }
}

std::vector<Facet> lower_facets(const std::vector<Vec>& pts, int dim) {
    std::vector<Facet> facets;
    auto consider = [&](Vec w, Integer h) {
        bool nonneg = true;
        for (const auto& x : w) nonneg = nonneg && x >= 0;
        if (!nonneg || h <= 0) return;
        for (const auto& p : pts) {
            Integer s = 0;
            for (int i = 0; i < dim; ++i) s += w[i] * p[i];
            if (s < h) return;
        }
        normalize(w, h);
        Facet f{std::move(w), std::move(h), {}};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Integer s = 0;
            for (int d = 0; d < dim; ++d) s += f.w[d] * pts[i][d];
            if (s == f.h) f.on.push_back(i);
        }
        facets.push_back(std::move(f));
    };
    const std::size_t m = pts.size();
    if (dim == 2) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                // normal to the segment, both orientations
                Vec w{pts[i][1] - pts[j][1], pts[j][0] - pts[i][0]};
                Integer h = w[0] * pts[i][0] + w[1] * pts[i][1];
                consider(w, h);
                consider(Vec{-w[0], -w[1]}, -h);
            }
    } else if (dim == 3) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    Vec u{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
                    Vec v{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2]};
                    Vec w{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                          u[0] * v[1] - u[1] * v[0]};
                    if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
                    Integer h = w[0] * pts[i][0] + w[1] * pts[i][1] + w[2] * pts[i][2];
                    consider(w, h);
                    consider(Vec{-w[0], -w[1], -w[2]}, -h);
                }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

}  // namespace

Rational newton_region_complement_volume(const MonomialIdeal& I, const std::vector<int>& vars) {
    const int s = static_cast<int>(vars.size());
    if (s < 1 || s > 3) throw ResourceError("Newton region volume supported for 1..3 variables");
    PrimeSupport P{std::vector<int>(vars)};
    MonomialIdeal J = I.localize_at(P);
    std::vector<int> all(vars.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (!J.is_artinian_in(all)) throw DomainError("Newton region volume needs an Artinian ideal");

    std::vector<Vec> pts;
    for (const auto& g : J.generators()) pts.push_back(to_vec(g));

    if (s == 1) {
        Integer best = pts[0][0];
        for (const auto& p : pts) best = std::min(best, p[0]);
        return Rational(best);
    }

    // The complement region is star-shaped from the origin: sum the cones
    // over the facets of the Newton region with positive offset.
    Rational vol(0);
    for (const auto& f : lower_facets(pts, s)) {
        if (s == 2) {
            std::vector<Vec> on;
            for (auto i : f.on) on.push_back(pts[i]);
            std::sort(on.begin(), on.end());
            for (std::size_t i = 0; i + 1 < on.size(); ++i)
                vol += Rational(abs(det2(on[i], on[i + 1])), 2);
        } else {
            // order the facet polygon via a 2D hull in projected coordinates
            int drop = 0;
            for (int d = 0; d < 3; ++d)
                if (f.w[d] != 0) drop = d;
            std::vector<std::pair<Vec, std::size_t>> proj;
            for (auto i : f.on) {
                Vec q;
                for (int d = 0; d < 3; ++d)
                    if (d != drop) q.push_back(pts[i][d]);
                proj.push_back({std::move(q), i});
            }
            std::sort(proj.begin(), proj.end());
            proj.erase(std::unique(proj.begin(), proj.end(),
                                   [](const auto& a, const auto& b) { return a.first == b.first; }),
                       proj.end());
            if (proj.size() < 3) continue;
            auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
                return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
            };
            // monotone chain hull on the projected points
            std::vector<std::pair<Vec, std::size_t>> lower, upper;
            for (const auto& p : proj) {
                while (lower.size() >= 2 &&
                       cross(lower[lower.size() - 2].first, lower.back().first, p.first) <= 0)
                    lower.pop_back();
                lower.push_back(p);
            }
            for (auto it = proj.rbegin(); it != proj.rend(); ++it) {
                while (upper.size() >= 2 &&
                       cross(upper[upper.size() - 2].first, upper.back().first, it->first) <= 0)
                    upper.pop_back();
                upper.push_back(*it);
            }
            std::vector<std::pair<Vec, std::size_t>> hull(lower.begin(), lower.end() - 1);
            hull.insert(hull.end(), upper.begin(), upper.end() - 1);
            for (std::size_t i = 1; i + 1 < hull.size(); ++i) {
                Integer d = det3(pts[hull[0].second], pts[hull[i].second], pts[hull[i + 1].second]);
                vol += Rational(abs(d), 6);
            }
        }
    }
    return vol;
}

namespace {

long long factorial(int s) {
    long long f = 1;
    for (int i = 2; i <= s; ++i) f *= i;
    return f;
}

}  // namespace

long long hilbert_samuel_multiplicity(const MonomialIdeal& I) {
    if (!I.is_proper()) throw DomainError("multiplicity needs a nonzero proper ideal");
    const std::vector<int> S = I.support_vars();
    if (!I.is_artinian_in(S)) throw DomainError("multiplicity needs an ideal Artinian in its support");
    const int s = static_cast<int>(S.size());
    PrimeSupport P{std::vector<int>(S)};
    MonomialIdeal J = I.localize_at(P);
    std::vector<int> all(S.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

    // lengths of O/J^t until a degree-s polynomial fit is exact on s+2
    // consecutive points, twice in a row
    std::vector<long long> L;
    const int t_max = 40;
    long long mult = -1;
    for (int t = 1; t <= t_max; ++t) {
        L.push_back(standard_monomial_count(ideal_power(J, t), all));
        const int need = s + 3;  // window of s+2 plus one extra for the repeat
        if (static_cast<int>(L.size()) < need) continue;
        for (int t0 = 0; t0 + need <= static_cast<int>(L.size()); ++t0) {
            std::vector<long long> d(L.begin() + t0, L.begin() + t0 + need);
            std::vector<long long> lead;
            for (int order = 0; order < s + 1; ++order) {
                if (order == s) lead = d;
                for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
                d.pop_back();
            }
            bool flat = true;
            for (long long x : d) flat = flat && x == 0;
            if (flat) {
                mult = lead[0];
                break;
            }
        }
        if (mult >= 0) break;
    }
    if (mult < 0) throw InternalConsistencyError("length function did not stabilize to a polynomial");

    if (s <= 3) {
        Rational vol = newton_region_complement_volume(J, all);
        Rational alt = vol * factorial(s);
        if (alt != mult)
            throw InternalConsistencyError("power-fit and Newton-region multiplicities disagree");
    }
    return mult;
}

}  // namespace cyclekit
