#include "cyclekit/builders.hpp"

#include <algorithm>
#include <map>

#include "cyclekit/strand.hpp"

namespace cyclekit {

namespace {

// all k-subsets of {0..m-1} in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

GradedMatrix zero_block(const FreeModule& src, const FreeModule& tgt) { return GradedMatrix(src, tgt); }

}  // namespace

ChainMap::ChainMap(Complex source, Complex target, int degree, std::vector<GradedMatrix> blocks)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree), blocks_(std::move(blocks)) {
    if (degree_ != 0 && degree_ != -1) throw DomainError("chain map degree must be 0 or -1");
    validate();
}

const GradedMatrix& ChainMap::block(int l) const {
    if (l < 0 || l >= static_cast<int>(blocks_.size()))
        throw DomainError("chain map block outside range");
    return blocks_[l];
}

void ChainMap::validate() const {
    if (src_.nvars() != tgt_.nvars()) throw DimensionError("chain map across variable counts");
    const int shift = (degree_ == 0) ? 0 : 1;
    // blocks[l] : src_{l+shift} -> tgt_l, present for l = 0 .. needed top
    const int need = std::max(src_.top_level() - shift, tgt_.top_level()) + 1;
    if (static_cast<int>(blocks_.size()) < need)
        throw ContractViolation("chain map is missing blocks");
    for (int l = 0; l < static_cast<int>(blocks_.size()); ++l) {
        if (blocks_[l].source().gens != src_.module(l + shift).gens ||
            blocks_[l].target().gens != tgt_.module(l).gens)
            throw ContractViolation("chain map block modules do not match the complexes");
    }
    auto src_diff = [&](int k) {
        return (k >= 1 && k <= src_.top_level()) ? src_.differential(k)
                                                 : zero_block(src_.module(k), src_.module(k - 1));
    };
    auto tgt_diff = [&](int k) {
        return (k >= 1 && k <= tgt_.top_level()) ? tgt_.differential(k)
                                                 : zero_block(tgt_.module(k), tgt_.module(k - 1));
    };
    auto blk = [&](int l) {
        if (l >= 0 && l < static_cast<int>(blocks_.size())) return blocks_[l];
        return zero_block(src_.module(l + shift), tgt_.module(l));
    };
    const int top = std::max(src_.top_level() + 1, tgt_.top_level() + 1);
    for (int k = 1; k <= top; ++k) {
        // degree 0:  b_{k-1} phi_k = eta_k b_k
        // degree -1: b_{k-1} phi_{k+1} = eta_k b_k (blocks shifted one level up)
        GradedMatrix lhs = blk(k - 1) * src_diff(k + shift);
        GradedMatrix rhs = tgt_diff(k) * blk(k);
        if (!(lhs == rhs))
            throw ContractViolation("chain map does not commute with the differentials at level " +
                                    std::to_string(k));
    }
}

Complex koszul(const std::vector<Term>& f, int nvars) {
    const int m = static_cast<int>(f.size());
    if (m < 1) throw DomainError("Koszul complex needs at least one term");
    for (const auto& t : f) {
        if (t.is_zero()) throw DomainError("Koszul complex of a tuple with a zero entry");
        if (t.nvars() != nvars) throw DimensionError("Koszul term nvars mismatch");
    }

    std::vector<FreeModule> mods(m + 1);
    std::vector<std::vector<std::vector<int>>> bases(m + 1);
    std::vector<std::map<std::vector<int>, int>> index(m + 1);
    for (int k = 0; k <= m; ++k) {
        bases[k] = subsets_of_size(m, k);
        mods[k].gens.reserve(bases[k].size());
        for (std::size_t i = 0; i < bases[k].size(); ++i) {
            Exponents deg(nvars, 0);
            for (int j : bases[k][i]) deg = exp_add(deg, f[j].exp);
            mods[k].gens.push_back(deg);
            index[k][bases[k][i]] = static_cast<int>(i);
        }
    }

    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= m; ++k) {
        GradedMatrix d(mods[k], mods[k - 1]);
        for (std::size_t col = 0; col < bases[k].size(); ++col) {
            const auto& S = bases[k][col];
            for (int t = 0; t < k; ++t) {
                std::vector<int> T = S;
                T.erase(T.begin() + t);
                const Rational sign = (t % 2 == 0) ? Rational(1) : Rational(-1);
                d.add_entry(index[k - 1][T], static_cast<int>(col), sign * f[S[t]].coeff);
            }
        }
        diffs.push_back(std::move(d));
    }
    return Complex(nvars, std::move(mods), std::move(diffs));
}

FormEndomorphism koszul_D_contraction(const Complex& K, int p) {
    if (p < 1 || p > K.top_level()) throw DomainError("contraction range outside the complex");
    return product_D_range(K, 1, p);
}

Complex taylor_of_terms(const std::vector<Term>& gens, int nvars) {
    const int r = static_cast<int>(gens.size());
    if (r < 1) throw DomainError("Taylor resolution needs at least one generator");
    if (r > 20) throw ResourceError("Taylor resolution limited to 20 generators");
    for (const auto& t : gens) {
        if (t.is_zero()) throw DomainError("Taylor resolution of a list with a zero entry");
        if (t.nvars() != nvars) throw DimensionError("Taylor generator nvars mismatch");
    }

    std::vector<FreeModule> mods(r + 1);
    std::vector<std::vector<std::vector<int>>> bases(r + 1);
    std::vector<std::map<std::vector<int>, int>> index(r + 1);
    auto lcm_of = [&](const std::vector<int>& S) {
        Exponents l(nvars, 0);
        for (int j : S) l = exp_max(l, gens[j].exp);
        return l;
    };
    for (int k = 0; k <= r; ++k) {
        bases[k] = subsets_of_size(r, k);
        for (std::size_t i = 0; i < bases[k].size(); ++i) {
            mods[k].gens.push_back(lcm_of(bases[k][i]));
            index[k][bases[k][i]] = static_cast<int>(i);
        }
    }
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= r; ++k) {
        GradedMatrix d(mods[k], mods[k - 1]);
        for (std::size_t col = 0; col < bases[k].size(); ++col) {
            const auto& S = bases[k][col];
            for (int t = 0; t < k; ++t) {
                std::vector<int> T = S;
                T.erase(T.begin() + t);
                const Rational sign = (t % 2 == 0) ? Rational(1) : Rational(-1);
                d.add_entry(index[k - 1][T], static_cast<int>(col), sign * gens[S[t]].coeff);
            }
        }
        diffs.push_back(std::move(d));
    }
    return Complex(nvars, std::move(mods), std::move(diffs));
}

Complex taylor_resolution(const MonomialIdeal& I) {
    if (!I.is_proper()) throw DomainError("Taylor resolution needs a nonzero proper ideal");
    std::vector<Term> gens;
    for (const auto& g : I.generators()) gens.emplace_back(Rational(1), g);
    return taylor_of_terms(gens, I.nvars());
}

MappingCone mapping_cone(const ChainMap& c) {
    if (c.degree() != 0) throw ContractViolation("mapping cone needs a degree-0 chain map");
    const Complex& L = c.source();
    const Complex& K = c.target();
    const int n = K.nvars();
    const int top = std::max(K.top_level(), L.top_level() + 1);

    std::vector<FreeModule> mods(top + 1);
    mods[0].gens = K.module(0).gens;
    for (int k = 1; k <= top; ++k) {
        mods[k].gens = K.module(k).gens;
        for (const auto& g : L.module(k - 1).gens) mods[k].gens.push_back(g);
    }

    auto K_rank = [&](int k) { return K.module(k).rank(); };

    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= top; ++k) {
        GradedMatrix mu(mods[k], mods[k - 1]);
        if (k <= K.top_level())
            for (const auto& [rc, t] : K.differential(k).entries())
                mu.add_entry(rc.first, rc.second, -t.coeff);
        // c_{k-1} : L_{k-1} -> K_{k-1}
        if (k - 1 < c.block_count())
            for (const auto& [rc, t] : c.block(k - 1).entries())
                mu.add_entry(rc.first, K_rank(k) + rc.second, t.coeff);
        if (k >= 2 && k - 1 <= L.top_level())
            for (const auto& [rc, t] : L.differential(k - 1).entries())
                mu.add_entry(K_rank(k - 1) + rc.first, K_rank(k) + rc.second, t.coeff);
        diffs.push_back(std::move(mu));
    }
    Complex cone(n, std::move(mods), std::move(diffs));

    // theta_k = [(-1)^k Id; 0] : K_k -> C_k
    std::vector<GradedMatrix> theta_blocks;
    for (int k = 0; k <= std::max(K.top_level(), cone.top_level()); ++k) {
        GradedMatrix b(K.module(k), cone.module(k));
        const Rational s = (k % 2 == 0) ? Rational(1) : Rational(-1);
        for (int i = 0; i < K.module(k).rank(); ++i) b.add_entry(i, i, s);
        theta_blocks.push_back(std::move(b));
    }
    ChainMap theta(K, cone, 0, std::move(theta_blocks));

    // vartheta_k = [0, Id] : C_{k+1} -> L_k
    std::vector<GradedMatrix> var_blocks;
    for (int k = 0; k <= std::max(cone.top_level() - 1, L.top_level()); ++k) {
        GradedMatrix b(cone.module(k + 1), L.module(k));
        for (int i = 0; i < L.module(k).rank(); ++i) b.add_entry(i, K_rank(k + 1) + i, Rational(1));
        var_blocks.push_back(std::move(b));
    }
    ChainMap vartheta(cone, L, -1, std::move(var_blocks));

    return MappingCone{std::move(cone), std::move(theta), std::move(vartheta)};
}

namespace {

// Solve eta_l x = rhs_column for every generator of the new source module;
// returns the block src -> E_l or nullopt when some strand is inconsistent.
std::optional<GradedMatrix> solve_block(const Complex& E, int l, const FreeModule& src,
                                        const GradedMatrix& rhs) {
    GradedMatrix out(src, E.module(l));
    for (int col = 0; col < src.rank(); ++col) {
        const Exponents& d = src.gens[col];
        // right-hand side in the strand of E_{l-1} at degree d
        const std::vector<int> rows = strand_basis(E.module(l - 1), d);
        std::vector<Rational> b(rows.size(), Rational(0));
        bool nonzero = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (const Term* t = rhs.entry(rows[r], col)) {
                b[r] = t->coeff;
                nonzero = true;
            }
        }
        // entries of rhs outside the strand cannot exist: their exponent
        // would be negative somewhere, which GradedMatrix forbids
        if (l > E.top_level()) {
            if (nonzero) return std::nullopt;
            continue;
        }
        // unknowns in descending degree order: the generator whose strand we
        // solve has the maximal degree there, so a trivial preimage (the
        // generator itself) is found before any lower syzygy correction
        std::vector<int> cols = strand_basis(E.module(l), d);
        std::reverse(cols.begin(), cols.end());
        auto x = solve_first(strand_matrix(E.differential(l), rows, cols), std::move(b));
        if (!x) return std::nullopt;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if ((*x)[c] != 0) out.add_entry(cols[c], col, (*x)[c]);
    }
    return out;
}

}  // namespace

ChainMap lift_morphism(const GradedMatrix& alpha, const Complex& F, const Complex& E) {
    if (F.nvars() != E.nvars()) throw DimensionError("lift across variable counts");
    if (alpha.source().gens != F.module(0).gens || alpha.target().gens != E.module(0).gens)
        throw DomainError("generator map must go from F_0 to E_0");

    std::vector<GradedMatrix> blocks{alpha};
    const int top = std::max(F.top_level(), E.top_level());
    for (int l = 1; l <= top; ++l) {
        const FreeModule& src = F.module(l);
        GradedMatrix rhs =
            blocks[l - 1] * (l <= F.top_level() ? F.differential(l)
                                                : GradedMatrix(F.module(l), F.module(l - 1)));
        auto blk = solve_block(E, l, src, rhs);
        if (!blk)
            throw ResolutionDefect("no strand solution at level " + std::to_string(l) +
                                   "; target complex is not exact there");
        blocks.push_back(std::move(*blk));
    }
    return ChainMap(F, E, 0, std::move(blocks));
}

std::optional<Complex> cokernel_taylor(const Complex& E, int k) {
    if (k < 1 || k > E.top_level()) return std::nullopt;
    if (E.module(k - 1).rank() != 1) return std::nullopt;
    const GradedMatrix& phi = E.differential(k);
    std::vector<Term> cols;
    for (int j = 0; j < E.module(k).rank(); ++j) {
        const Term* t = phi.entry(0, j);
        if (!t) return std::nullopt;  // zero column: cokernel not presented by the term list
        cols.push_back(*t);
    }
    if (cols.empty()) return std::nullopt;
    Complex T = taylor_of_terms(cols, E.nvars());
    return T.shifted_degrees(E.module(k - 1).gens[0]);
}

BigDiagram big_diagram(const Complex& E, int k, std::optional<Complex> G) {
    if (k < 1 || k >= E.top_level())
        throw DomainError("diagram level must satisfy 1 <= k < N");
    if (!G) {
        G = cokernel_taylor(E, k);
        if (!G)
            throw DomainError(
                "cokernel of phi_k is not presented by a single-generator term list; supply a "
                "resolution");
    }
    // G extends the presentation: levels 0/1 match E_{k-1}/E_k, d_1 = phi_k
    if (G->nvars() != E.nvars()) throw DimensionError("resolution across variable counts");
    if (G->module(0).gens != E.module(k - 1).gens || G->module(1).gens != E.module(k).gens ||
        !(G->differential(1) == E.differential(k)))
        throw DomainError("supplied resolution does not extend the presentation at level k");

    const int n = E.nvars();

    // top row: E_0..E_{k-1}, then G_1, G_2, ... at levels k, k+1, ...
    const int top_len = (k - 1) + G->top_level();
    std::vector<FreeModule> tmods(top_len + 1);
    for (int l = 0; l <= k - 1; ++l) tmods[l].gens = E.module(l).gens;
    for (int j = 1; j <= G->top_level(); ++j) tmods[k - 1 + j].gens = G->module(j).gens;
    std::vector<GradedMatrix> tdiffs;
    for (int l = 1; l <= top_len; ++l) {
        GradedMatrix d(tmods[l], tmods[l - 1]);
        const GradedMatrix& srcd = (l <= k - 1) ? E.differential(l) : G->differential(l - k + 1);
        for (const auto& [rc, t] : srcd.entries()) d.add_entry(rc.first, rc.second, t.coeff);
        tdiffs.push_back(std::move(d));
    }
    Complex Grow(n, std::move(tmods), std::move(tdiffs));

    // b : E -> Grow, identity through level k, then a strand-local chase
    std::vector<GradedMatrix> bblocks;
    for (int l = 0; l <= k; ++l) bblocks.push_back(GradedMatrix::identity(E.module(l)));
    for (int l = k + 1; l <= E.top_level(); ++l) {
        GradedMatrix rhs = bblocks[l - 1] * E.differential(l);
        auto blk = solve_block(Grow, l, E.module(l), rhs);
        if (!blk)
            throw ResolutionDefect("diagram chase failed at level " + std::to_string(l) +
                                   "; the top row is not exact there");
        bblocks.push_back(std::move(*blk));
    }
    for (int l = E.top_level() + 1; l <= Grow.top_level(); ++l)
        bblocks.push_back(GradedMatrix(E.module(l), Grow.module(l)));
    ChainMap b(E, Grow, 0, bblocks);

    // bottom row: F_k = Grow_{k+1}, F_l = Grow_{l+1} + E_l above, with
    // psi_l = [-eta_{l+1}, b_l; 0, phi_l]
    const int bot_top = std::max(Grow.top_level() - 1, E.top_level());
    std::vector<FreeModule> fmods(bot_top + 1);
    for (int l = k; l <= bot_top; ++l) {
        fmods[l].gens = Grow.module(l + 1).gens;
        if (l >= k + 1)
            for (const auto& g : E.module(l).gens) fmods[l].gens.push_back(g);
    }
    auto grow_rank = [&](int l) { return Grow.module(l).rank(); };
    std::vector<GradedMatrix> fdiffs;
    for (int l = 1; l <= bot_top; ++l) {
        GradedMatrix d(fmods[l], fmods[l - 1]);
        if (l >= k + 1) {
            if (l + 1 <= Grow.top_level())
                for (const auto& [rc, t] : Grow.differential(l + 1).entries())
                    d.add_entry(rc.first, rc.second, -t.coeff);
            for (const auto& [rc, t] : bblocks[l].entries())
                d.add_entry(rc.first, grow_rank(l + 1) + rc.second, t.coeff);
            if (l >= k + 2 && l <= E.top_level())
                for (const auto& [rc, t] : E.differential(l).entries())
                    d.add_entry(grow_rank(l) + rc.first, grow_rank(l + 1) + rc.second, t.coeff);
        }
        fdiffs.push_back(std::move(d));
    }
    Complex F(n, std::move(fmods), std::move(fdiffs));

    // a : F -> E, [0, Id] above level k and eta_{k+1} at level k
    std::vector<GradedMatrix> ablocks;
    for (int l = 0; l < k; ++l) ablocks.push_back(GradedMatrix(F.module(l), E.module(l)));
    {
        GradedMatrix ak(F.module(k), E.module(k));
        if (k + 1 <= Grow.top_level())
            for (const auto& [rc, t] : Grow.differential(k + 1).entries())
                ak.add_entry(rc.first, rc.second, t.coeff);
        ablocks.push_back(std::move(ak));
    }
    for (int l = k + 1; l <= std::max(F.top_level(), E.top_level()); ++l) {
        GradedMatrix al(F.module(l), E.module(l));
        for (int i = 0; i < E.module(l).rank(); ++i) al.add_entry(i, grow_rank(l + 1) + i, Rational(1));
        ablocks.push_back(std::move(al));
    }
    ChainMap a(F, E, 0, std::move(ablocks));

    return BigDiagram{k, std::move(Grow), std::move(b), std::move(F), std::move(a)};
}

}  // namespace cyclekit
