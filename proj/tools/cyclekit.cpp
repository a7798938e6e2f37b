// Command-line front end: parse ideal/complex descriptions, dispatch the
// computations, print text or JSON reports.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclekit/io.hpp"
#include "cyclekit/report.hpp"
#include "cyclekit/residue.hpp"

using namespace cyclekit;

namespace {

int box_margin_from_env() {
    if (const char* v = std::getenv("CYCLEKIT_BOX_MARGIN")) {
        const int m = std::atoi(v);
        if (m >= 1) return m;
    }
    return 2;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const std::string& text, const Json& j, const std::string& format) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

struct TupleInput {
    std::vector<Term> terms;
    int nvars = 0;
    std::vector<std::string> names;
};

TupleInput tuple_input(const std::string& expr) {
    ParsedTuple t = parse_monomial_list(expr);
    return {t.terms, t.nvars, t.vars.names};
}

int run_mult(const std::string& ideal_expr, const std::string& prime_expr, const std::string& format) {
    ParsedIdeal in = parse_ideal_expr(ideal_expr);
    const long long hs = hilbert_samuel_multiplicity(in.ideal);
    PrimeSupport P = prime_expr.empty() ? PrimeSupport(in.ideal.support_vars())
                                        : parse_prime_expr(prime_expr, in.vars);
    const long long geo = geometric_multiplicity(in.ideal, P);
    std::ostringstream os;
    os << "hilbert_samuel: " << hs << ", geometric: " << geo << "\n";
    emit(os.str(), Json{{"hilbert_samuel", hs}, {"geometric", geo}}, format);
    return 0;
}

int run_cycle(const std::string& koszul_expr, const std::string& taylor_expr,
              const std::string& complex_path, std::optional<int> level, std::optional<int> codim,
              const std::string& format, int margin) {
    Complex E = [&] {
        if (!koszul_expr.empty()) {
            TupleInput t = tuple_input(koszul_expr);
            return koszul(t.terms, t.nvars);
        }
        if (!taylor_expr.empty()) return taylor_resolution(parse_ideal_expr(taylor_expr).ideal);
        if (!complex_path.empty()) return complex_from_json(read_json_file(complex_path));
        throw DomainError("one of --koszul, --taylor, --complex is required");
    }();
    std::vector<std::string> names;
    if (!koszul_expr.empty()) names = tuple_input(koszul_expr).names;
    else if (!taylor_expr.empty()) names = parse_ideal_expr(taylor_expr).vars.names;
    else names = default_names(E.nvars());

    auto restrict_codim = [&](Cycle c) { return codim ? c.stratum(*codim) : c; };

    std::ostringstream os;
    Json j;
    const Cycle total = restrict_codim(complex_cycle(E, margin));
    os << "total: " << cycle_to_string(total, names) << "\n";
    j["total"] = cycle_to_json(total);
    for (int l = 0; l <= E.top_level(); ++l) {
        if (level && *level != l) continue;
        const Cycle c = restrict_codim(module_cycle(E, l, margin));
        os << "level " << l << ": " << cycle_to_string(c, names) << "\n";
        j["levels"][std::to_string(l)] = cycle_to_json(c);
    }
    emit(os.str(), j, format);
    return 0;
}

int run_filtration(const std::string& ideal_expr, const std::string& format) {
    ParsedIdeal in = parse_ideal_expr(ideal_expr);
    Filtration f = prime_filtration(in.ideal);
    std::string why;
    const bool ok = filtration_replay_check(f, &why);
    std::ostringstream os;
    Json steps = Json::array();
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        os << (i + 1) << ": witness " << monomial_to_string(f.steps[i].witness, in.vars.names)
           << ", prime " << prime_to_string(f.steps[i].prime, in.vars.names) << "\n";
        steps.push_back(Json{{"witness", f.steps[i].witness}, {"prime", f.steps[i].prime.vars}});
    }
    os << "replay: " << (ok ? "valid" : ("INVALID: " + why)) << "\n";
    emit(os.str(), Json{{"steps", steps}, {"valid", ok}}, format);
    return ok ? 0 : 4;
}

int run_koszul(const std::string& tuple_expr) {
    TupleInput t = tuple_input(tuple_expr);
    std::cout << complex_to_json(koszul(t.terms, t.nvars)).dump(2) << "\n";
    return 0;
}

int run_taylor(const std::string& ideal_expr) {
    ParsedIdeal in = parse_ideal_expr(ideal_expr);
    std::cout << complex_to_json(taylor_resolution(in.ideal)).dump(2) << "\n";
    return 0;
}

// cone of a chain map, either supplied in full or built as the lifted
// inclusion of one filtration step of O/I
int run_cone(const std::string& ideal_expr, const std::string& witness_expr,
             const std::string& map_path, int margin) {
    std::optional<MappingCone> mc;
    if (!map_path.empty()) {
        const Json j = read_json_file(map_path);
        Complex L = complex_from_json(j.at("source"));
        Complex K = complex_from_json(j.at("target"));
        mc = mapping_cone(chain_map_from_json(j.at("chain_map"), std::move(L), std::move(K)));
    } else {
        if (ideal_expr.empty() || witness_expr.empty())
            throw DomainError("cone needs either --map or --ideal with --witness");
        ParsedIdeal in = parse_ideal_expr(ideal_expr);
        const Exponents m = parse_monomial_with_vars(witness_expr, in.vars).exp;
        MonomialIdeal P = in.ideal.colon(m);
        if (!P.is_prime()) throw DomainError("colon of the witness is not prime");
        Complex F = taylor_resolution(P).shifted_degrees(m);
        Complex E = taylor_resolution(in.ideal);
        GradedMatrix alpha(F.module(0), E.module(0));
        alpha.add_entry(0, 0, Rational(1));
        mc = mapping_cone(lift_morphism(alpha, F, E));
    }
    Json out = complex_to_json(mc->cone);
    out["chain_map"] = chain_map_to_json(mc->theta);
    out["chain_map"]["role"] = "target-to-cone";
    out["exact_in_positive_levels"] = positive_homology_vanishes(mc->cone, margin);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_lift(const std::string& map_path) {
    const Json j = read_json_file(map_path);
    Complex F = complex_from_json(j.at("source"));
    Complex E = complex_from_json(j.at("target"));
    GradedMatrix alpha(F.module(0), E.module(0));
    for (const auto& e : j.at("alpha").at("entries")) {
        alpha.add_entry(e.at(0).get<int>(), e.at(1).get<int>(), Rational(e.at(2).get<std::string>()));
    }
    ChainMap a = lift_morphism(alpha, F, E);
    Json out = complex_to_json(E);
    out["chain_map"] = chain_map_to_json(a);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_bigdiagram(const std::string& complex_path, int k, const std::string& resolution_path,
                   int margin) {
    Complex E = complex_from_json(read_json_file(complex_path));
    std::optional<Complex> G;
    if (!resolution_path.empty()) G = complex_from_json(read_json_file(resolution_path));
    BigDiagram d = big_diagram(E, k, G);
    std::string why;
    const bool rows_ok = verify_big_diagram_rows(E, d, margin, &why);
    Json out;
    out["k"] = k;
    out["top_row"] = complex_to_json(d.top);
    out["top_row"]["chain_map"] = chain_map_to_json(d.b);
    out["bottom_row"] = complex_to_json(d.bottom);
    out["bottom_row"]["chain_map"] = chain_map_to_json(d.a);
    out["rows_verified"] = rows_ok;
    std::cout << out.dump(2) << "\n";
    if (!rows_ok) {
        std::cerr << "row homology mismatch: " << why << "\n";
        return 4;
    }
    return 0;
}

int run_verify_pl(const std::string& tuple_expr, const std::string& format) {
    TupleInput t = tuple_input(tuple_expr);
    const PlVerification v = pl_verify(t.terms, t.nvars);
    std::ostringstream os;
    os << "functional: " << (v.functional_is_point_mass ? std::to_string(v.functional_mult) + "*point"
                                                        : std::string("not a point mass"))
       << "\nideal_length: " << v.ideal_length << "\nkoszul_h0: " << v.koszul_h0_mult << "\n"
       << (v.pass ? "PASS" : "FAIL") << "\n";
    emit(os.str(),
         Json{{"functional", v.functional_mult},
              {"point_mass", v.functional_is_point_mass},
              {"ideal_length", v.ideal_length},
              {"koszul_h0", v.koszul_h0_mult},
              {"pass", v.pass}},
         format);
    return v.pass ? 0 : 4;
}

int print_results(const std::vector<CheckResult>& results, const std::string& format) {
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back(Json{{"id", r.id}, {"description", r.description}, {"pass", r.pass},
                             {"detail", r.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& r : results) width = std::max(width, r.id.size());
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id
                      << std::string(width - r.id.size() + 2, ' ') << r.description;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
        std::cout << (all_pass(results) ? "PASS" : "FAIL") << "\n";
    }
    return all_pass(results) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cycle calculus for multigraded complexes"};
    app.require_subcommand(1);

    std::string ideal_expr, tuple_expr, prime_expr, complex_path, resolution_path, map_path;
    std::string koszul_expr, taylor_expr, witness_expr;
    std::string format = "text";
    std::optional<int> level, codim;
    int k = 1;
    unsigned long long seed = 7;
    int trials = 100;
    const int margin = box_margin_from_env();

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* mult = app.add_subcommand("mult", "multiplicities of a monomial ideal");
    mult->add_option("--ideal", ideal_expr, "comma-separated monomial generators")->required();
    mult->add_option("--prime", prime_expr, "prime for the geometric multiplicity");
    add_format(mult);

    CLI::App* cycle = app.add_subcommand("cycle", "total and per-level cycles of a complex");
    cycle->add_option("--koszul", koszul_expr, "build the Koszul complex of this tuple");
    cycle->add_option("--taylor", taylor_expr, "build the Taylor resolution of this ideal");
    cycle->add_option("--complex", complex_path, "JSON file with a complex");
    cycle->add_option("--level", level, "restrict to one homology level");
    cycle->add_option("--codim", codim, "restrict to one codimension stratum");
    add_format(cycle);

    CLI::App* filt = app.add_subcommand("filtration", "prime filtration with replay check");
    filt->add_option("--ideal", ideal_expr)->required();
    add_format(filt);

    CLI::App* kosz = app.add_subcommand("koszul", "Koszul complex as JSON");
    kosz->add_option("--tuple", tuple_expr)->required();

    CLI::App* tayl = app.add_subcommand("taylor", "Taylor resolution as JSON");
    tayl->add_option("--ideal", ideal_expr)->required();

    CLI::App* cone = app.add_subcommand("cone", "mapping cone of a chain map");
    cone->add_option("--map", map_path, "JSON with source, target, chain_map");
    cone->add_option("--ideal", ideal_expr, "build the lifted inclusion of a filtration step instead");
    cone->add_option("--witness", witness_expr, "monomial adjoined by the step");

    CLI::App* lift = app.add_subcommand("lift", "lift a generator map to a chain map");
    lift->add_option("--map", map_path, "JSON file with source, target, alpha")->required();

    CLI::App* bigd = app.add_subcommand("bigdiagram", "three-row diagram at a homology level");
    bigd->add_option("--complex", complex_path)->required();
    bigd->add_option("--k", k, "homology level")->required();
    bigd->add_option("--resolution", resolution_path, "resolution extending the presentation");

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    CLI::App* vpl = verify->add_subcommand("pl", "three-way factorization check for a power tuple");
    vpl->add_option("--tuple", tuple_expr)->required();
    add_format(vpl);
    CLI::App* vsigns = verify->add_subcommand("signs", "randomized sign-identity suite");
    vsigns->add_option("--seed", seed);
    vsigns->add_option("--trials", trials)->check(CLI::PositiveNumber);
    add_format(vsigns);

    CLI::App* report = app.add_subcommand("report", "full verification table");
    report->add_option("--seed", seed);
    report->add_option("--trials", trials)->check(CLI::PositiveNumber);
    add_format(report);

    try {
        app.parse(argc, argv);

        if (mult->parsed()) return run_mult(ideal_expr, prime_expr, format);
        if (cycle->parsed())
            return run_cycle(koszul_expr, taylor_expr, complex_path, level, codim, format, margin);
        if (filt->parsed()) return run_filtration(ideal_expr, format);
        if (kosz->parsed()) return run_koszul(tuple_expr);
        if (tayl->parsed()) return run_taylor(ideal_expr);
        if (cone->parsed()) return run_cone(ideal_expr, witness_expr, map_path, margin);
        if (lift->parsed()) return run_lift(map_path);
        if (bigd->parsed()) return run_bigdiagram(complex_path, k, resolution_path, margin);
        if (verify->parsed()) {
            ReportOptions opt{seed, trials, margin};
            if (vpl->parsed()) return run_verify_pl(tuple_expr, format);
            return print_results(run_sign_suite(opt), format);
        }
        if (report->parsed()) {
            ReportOptions opt{seed, trials, margin};
            return print_results(run_acceptance(opt), format);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
