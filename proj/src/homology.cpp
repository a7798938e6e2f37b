#include "cyclekit/homology.hpp"

#include <algorithm>

namespace cyclekit {

void Cycle::add(const PrimeSupport& P, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = comps_.emplace(P, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) comps_.erase(it);
    }
}

Cycle Cycle::operator+(const Cycle& o) const {
    Cycle r = *this;
    for (const auto& [p, m] : o.comps_) r.add(p, m);
    return r;
}

Cycle Cycle::operator-(const Cycle& o) const {
    Cycle r = *this;
    for (const auto& [p, m] : o.comps_) r.add(p, -m);
    return r;
}

Cycle Cycle::scaled(long long c) const {
    Cycle r;
    if (c == 0) return r;
    for (const auto& [p, m] : comps_) r.add(p, m * c);
    return r;
}

Cycle Cycle::stratum(int codim) const {
    Cycle r;
    for (const auto& [p, m] : comps_)
        if (p.codim() == codim) r.add(p, m);
    return r;
}

std::set<int> Cycle::codimensions() const {
    std::set<int> s;
    for (const auto& [p, m] : comps_) s.insert(p.codim());
    return s;
}

Complex localize_complex(const Complex& E, const PrimeSupport& P) {
    const int s = static_cast<int>(P.vars.size());
    auto restrict_exp = [&](const Exponents& e) {
        Exponents r(s);
        for (int j = 0; j < s; ++j) r[j] = e[P.vars[j]];
        return r;
    };
    std::vector<FreeModule> mods(E.top_level() + 1);
    for (int l = 0; l <= E.top_level(); ++l)
        for (const auto& g : E.module(l).gens) mods[l].gens.push_back(restrict_exp(g));
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= E.top_level(); ++k) {
        GradedMatrix d(mods[k], mods[k - 1]);
        for (const auto& [rc, t] : E.differential(k).entries()) d.add_entry(rc.first, rc.second, t.coeff);
        diffs.push_back(std::move(d));
    }
    return Complex(s, std::move(mods), std::move(diffs), E.parity_shift());
}

namespace {

struct LevelScan {
    long long total = 0;
    bool shell_nonzero = false;
};

// Scan the certified box of the localized complex and aggregate one level.
// A strand belongs to the shell when it exceeds the generator cap somewhere;
// patterns repeat beyond the cap, so nonzero shell homology persists forever.
LevelScan aggregate_level(const Complex& L, int l, int margin) {
    LevelScan out;
    if (l < 0 || l > L.top_level()) return out;
    const Exponents cap = L.degree_cap();
    const Exponents hi = certified_box(L, margin);
    const std::vector<int> ranks = scan_level(L, l, hi);
    for (long long s = 0; s < static_cast<long long>(ranks.size()); ++s) {
        if (ranks[s] == 0) continue;
        out.total += ranks[s];
        const Exponents b = box_degree(hi, s);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] > cap[i]) { out.shell_nonzero = true; break; }
    }
    return out;
}

}  // namespace

LocalLength local_length(const Complex& E, int l, const PrimeSupport& P, int margin) {
    for (int v : P.vars)
        if (v < 0 || v >= E.nvars()) throw DimensionError("prime variable outside the ring");
    const Complex L = localize_complex(E, P);
    const LevelScan scan = aggregate_level(L, l, margin);
    if (scan.shell_nonzero) return LocalLength{false, 0};
    return LocalLength{true, scan.total};
}

namespace {

std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

Cycle module_cycle(const Complex& E, int l, int margin) {
    if (E.nvars() > 12) throw ResourceError("coordinate prime enumeration limited to 12 variables");
    Cycle out;
    std::vector<PrimeSupport> minimal;
    for (auto& s : subsets_by_size(E.nvars())) {
        PrimeSupport P(std::move(s));
        bool above = false;
        for (const auto& m : minimal)
            if (m.subset_of(P)) { above = true; break; }
        if (above) continue;
        const LocalLength L = local_length(E, l, P, margin);
        if (!L.finite)
            throw InternalConsistencyError("infinite length at a subset with no smaller support");
        if (L.length > 0) {
            out.add(P, L.length);
            minimal.push_back(P);
        }
    }
    return out;
}

Cycle complex_cycle(const Complex& E, int margin) {
    Cycle out;
    for (int l = 0; l <= E.top_level(); ++l) {
        const Cycle c = module_cycle(E, l, margin);
        out = (l % 2 == 0) ? out + c : out - c;
    }
    return out;
}

Cycle complex_cycle_restricted(const Complex& E, int margin) {
    // minimal primes of the union of all supports
    std::vector<Cycle> levels;
    for (int l = 0; l <= E.top_level(); ++l) levels.push_back(module_cycle(E, l, margin));
    std::vector<PrimeSupport> all;
    for (const auto& c : levels)
        for (const auto& [p, m] : c.components()) all.push_back(p);
    std::vector<PrimeSupport> minimal;
    for (const auto& p : all) {
        bool min = true;
        for (const auto& q : all)
            if (!(q == p) && q.subset_of(p)) { min = false; break; }
        if (min && std::find(minimal.begin(), minimal.end(), p) == minimal.end()) minimal.push_back(p);
    }
    Cycle out;
    for (int l = 0; l <= E.top_level(); ++l) {
        const long long sign = (l % 2 == 0) ? 1 : -1;
        for (const auto& P : minimal) {
            const LocalLength L = local_length(E, l, P, margin);
            if (!L.finite) throw InternalConsistencyError("infinite length at a minimal support prime");
            out.add(P, sign * L.length);
        }
    }
    return out;
}

Cycle cycle_of_quotient(const MonomialIdeal& I, int margin) {
    if (I.is_unit()) return Cycle{};
    if (I.is_zero()) {
        Cycle c;
        c.add(PrimeSupport{}, 1);
        return c;
    }
    return module_cycle(taylor_resolution(I), 0, margin);
}

bool positive_homology_vanishes(const Complex& E, int margin) {
    const BoxScan scan = scan_box(E, certified_box(E, margin));
    const long long total = scan.strand_count();
    for (long long s = 0; s < total; ++s)
        for (int l = 1; l < scan.levels; ++l)
            if (scan.rank_at(s, l) != 0) return false;
    return true;
}

bool euler_characteristic_check(const Complex& E, int margin) {
    const Exponents hi = certified_box(E, margin);
    const BoxScan scan = scan_box(E, hi);
    const long long total = scan.strand_count();
    for (long long s = 0; s < total; ++s) {
        const Exponents b = scan.strand_degree(s);
        long long lhs = 0, rhs = 0;
        for (int l = 0; l <= E.top_level(); ++l) {
            const long long dim = static_cast<long long>(strand_basis(E.module(l), b).size());
            const long long sign = (l % 2 == 0) ? 1 : -1;
            lhs += sign * dim;
            rhs += sign * scan.rank_at(s, l);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool cycle_additivity_check(const MonomialIdeal& K, const FiltrationStep& step, int margin) {
    if (!K.is_proper()) throw DomainError("additivity check needs a proper ideal");
    if (K.contains(step.witness)) throw DomainError("witness already in the ideal");
    if (!(K.colon(step.witness).as_prime().value_or(PrimeSupport{}) == step.prime))
        throw DomainError("step does not present a prime quotient");

    int p = K.nvars() + 1;
    for (const auto& q : minimal_primes(K)) p = std::min(p, q.codim());

    const MonomialIdeal next = K.plus_monomial(step.witness);
    Cycle a = cycle_of_quotient(K, margin).stratum(p);
    Cycle app = next.is_unit() ? Cycle{} : cycle_of_quotient(next, margin).stratum(p);
    Cycle ap;
    if (step.prime.codim() == p) ap.add(step.prime, 1);
    return a == ap + app;
}

bool koszul_binomial_check(const std::vector<Term>& f, int nvars, int p, int margin) {
    std::vector<Exponents> gens;
    for (const auto& t : f) gens.push_back(t.exp);
    const MonomialIdeal J = minimalize(nvars, gens);
    if (!J.is_proper()) throw DomainError("tuple must generate a proper nonzero ideal");
    int codim = nvars + 1;
    for (const auto& q : minimal_primes(J)) codim = std::min(codim, q.codim());
    if (codim != p) throw DomainError("stated codimension does not match the zero set");
    if (static_cast<int>(f.size()) <= p) throw DomainError("tuple must be longer than the codimension");

    const Complex K = koszul(f, nvars);
    return complex_cycle(K, margin).is_zero() && !module_cycle(K, 0, margin).is_zero();
}

bool verify_big_diagram_rows(const Complex& E, const BigDiagram& D, int margin, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Exponents hi = certified_box(E, margin);
    hi = exp_max(hi, certified_box(D.top, margin));
    hi = exp_max(hi, certified_box(D.bottom, margin));

    const BoxScan se = scan_box(E, hi);
    const BoxScan st = scan_box(D.top, hi);
    const BoxScan sb = scan_box(D.bottom, hi);

    const long long total = se.strand_count();
    for (long long s = 0; s < total; ++s) {
        for (int l = 0; l < std::max({se.levels, st.levels, sb.levels}); ++l) {
            const int he = l < se.levels ? se.rank_at(s, l) : 0;
            const int ht = l < st.levels ? st.rank_at(s, l) : 0;
            const int hb = l < sb.levels ? sb.rank_at(s, l) : 0;
            const int want_t = (l < D.k) ? he : 0;
            const int want_b = (l == D.k) ? he : 0;
            if (ht != want_t)
                return fail("top row homology mismatch at level " + std::to_string(l));
            if (hb != want_b)
                return fail("bottom row homology mismatch at level " + std::to_string(l));
        }
    }
    return true;
}

}  // namespace cyclekit
