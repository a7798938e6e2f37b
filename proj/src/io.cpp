#include "cyclekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cyclekit {

namespace {

std::string rational_str(const Rational& c) { return c.str(); }

Rational rational_parse(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

Exponents exponents_from_json(const Json& j, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != nvars)
        throw DomainError("exponent array has wrong length");
    Exponents e;
    for (const auto& x : j) e.push_back(x.get<int>());
    return e;
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({rational_str(c), e}));
    return out;
}

Polynomial polynomial_from_json(const Json& j, int nvars) {
    Polynomial p(nvars);
    for (const auto& t : j)
        p.add_term(exponents_from_json(t.at(1), nvars), rational_parse(t.at(0).get<std::string>()));
    return p;
}

Json form_to_json(const DifferentialForm& w) {
    Json out = Json::array();
    for (const auto& [I, p] : w.components()) out.push_back(Json::array({I, polynomial_to_json(p)}));
    return out;
}

DifferentialForm form_from_json(const Json& j, int nvars) {
    DifferentialForm w(nvars);
    for (const auto& c : j) {
        IndexSet I = c.at(0).get<IndexSet>();
        w.add_component(I, polynomial_from_json(c.at(1), nvars));
    }
    return w;
}

Json ideal_to_json(const MonomialIdeal& I) {
    return Json{{"n", I.nvars()}, {"generators", I.generators()}};
}

MonomialIdeal ideal_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Exponents> gens;
    for (const auto& g : j.at("generators")) gens.push_back(exponents_from_json(g, n));
    return MonomialIdeal(n, std::move(gens));
}

namespace {

Json matrix_entries_to_json(const GradedMatrix& m) {
    Json entries = Json::array();
    for (const auto& [rc, t] : m.entries())
        entries.push_back(Json::array({rc.first, rc.second, rational_str(t.coeff), t.exp}));
    return Json{{"entries", entries}};
}

void matrix_entries_from_json(GradedMatrix& m, const Json& j, int nvars) {
    for (const auto& e : j.at("entries")) {
        const int row = e.at(0).get<int>();
        const int col = e.at(1).get<int>();
        const Rational c = rational_parse(e.at(2).get<std::string>());
        const Exponents exp = exponents_from_json(e.at(3), nvars);
        if (m.required_exponent(row, col) != exp)
            throw DomainError("listed entry exponent violates the multigrading");
        m.add_entry(row, col, c);
    }
}

}  // namespace

Json complex_to_json(const Complex& E) {
    Json levels = Json::array();
    for (int l = 0; l <= E.top_level(); ++l) levels.push_back(Json{{"generators", E.module(l).gens}});
    Json diffs = Json::array();
    for (int k = 1; k <= E.top_level(); ++k) diffs.push_back(matrix_entries_to_json(E.differential(k)));
    return Json{{"n", E.nvars()}, {"levels", levels}, {"differentials", diffs}};
}

Complex complex_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<FreeModule> mods;
    for (const auto& lvl : j.at("levels")) {
        FreeModule m;
        for (const auto& g : lvl.at("generators")) m.gens.push_back(exponents_from_json(g, n));
        mods.push_back(std::move(m));
    }
    std::vector<GradedMatrix> diffs;
    const Json& dj = j.at("differentials");
    if (dj.size() + 1 != mods.size()) throw DomainError("differential count does not match levels");
    for (std::size_t k = 0; k + 1 < mods.size(); ++k) {
        GradedMatrix d(mods[k + 1], mods[k]);
        matrix_entries_from_json(d, dj.at(k), n);
        diffs.push_back(std::move(d));
    }
    return Complex(n, std::move(mods), std::move(diffs));
}

Json chain_map_to_json(const ChainMap& c) {
    Json blocks = Json::array();
    for (int l = 0; l < c.block_count(); ++l) blocks.push_back(matrix_entries_to_json(c.block(l)));
    return Json{{"degree", c.degree()}, {"blocks", blocks}};
}

ChainMap chain_map_from_json(const Json& j, Complex source, Complex target) {
    const int degree = j.at("degree").get<int>();
    const int shift = (degree == 0) ? 0 : 1;
    std::vector<GradedMatrix> blocks;
    const Json& bj = j.at("blocks");
    for (std::size_t l = 0; l < bj.size(); ++l) {
        GradedMatrix m(source.module(static_cast<int>(l) + shift), target.module(static_cast<int>(l)));
        matrix_entries_from_json(m, bj.at(l), source.nvars());
        blocks.push_back(std::move(m));
    }
    return ChainMap(std::move(source), std::move(target), degree, std::move(blocks));
}

Json cycle_to_json(const Cycle& c) {
    Json comps = Json::array();
    Json by_codim = Json::object();
    for (const auto& [p, m] : c.components()) {
        Json comp{{"variables", p.vars}, {"multiplicity", m}};
        comps.push_back(comp);
        by_codim[std::to_string(p.codim())].push_back(comp);
    }
    return Json{{"components", comps}, {"by_codim", by_codim}};
}

int VarTable::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

namespace {

struct Token {
    enum Kind { Number, Name, Star, Caret, Comma, Slash, Minus, Plus, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
            case '*': out.push_back({Token::Star, "*", i}); break;
            case '^': out.push_back({Token::Caret, "^", i}); break;
            case ',': out.push_back({Token::Comma, ",", i}); break;
            case '/': out.push_back({Token::Slash, "/", i}); break;
            case '-': out.push_back({Token::Minus, "-", i}); break;
            case '+': out.push_back({Token::Plus, "+", i}); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

struct RawTerm {
    Rational coeff{1};
    std::map<std::string, int> exponents;
    std::size_t pos = 0;
};

std::vector<RawTerm> parse_raw_terms(const std::string& s) {
    const std::vector<Token> toks = tokenize(s);
    std::vector<RawTerm> terms;
    std::size_t i = 0;

    auto parse_int = [&](const Token& t) {
        long long v = 0;
        for (char c : t.text) v = v * 10 + (c - '0');
        return v;
    };

    while (toks[i].kind != Token::End) {
        RawTerm term;
        term.pos = toks[i].pos;
        bool saw_factor = false;
        if (toks[i].kind == Token::Plus) ++i;
        else if (toks[i].kind == Token::Minus) {
            term.coeff = -term.coeff;
            ++i;
        }
        for (;;) {
            const Token& t = toks[i];
            if (t.kind == Token::Number) {
                Rational v(parse_int(t));
                ++i;
                if (toks[i].kind == Token::Slash) {
                    ++i;
                    if (toks[i].kind != Token::Number) throw ParseError("expected denominator", toks[i].pos);
                    const long long den = parse_int(toks[i]);
                    if (den == 0) throw ParseError("zero denominator", toks[i].pos);
                    v /= den;
                    ++i;
                }
                term.coeff *= v;
                saw_factor = true;
            } else if (t.kind == Token::Name) {
                ++i;
                int e = 1;
                if (toks[i].kind == Token::Caret) {
                    ++i;
                    if (toks[i].kind != Token::Number) throw ParseError("expected exponent", toks[i].pos);
                    e = static_cast<int>(parse_int(toks[i]));
                    ++i;
                }
                term.exponents[t.text] += e;
                saw_factor = true;
            } else if (t.kind == Token::Star) {
                if (!saw_factor) throw ParseError("'*' without a left factor", t.pos);
                ++i;
            } else {
                break;
            }
        }
        if (!saw_factor) throw ParseError("expected a monomial", toks[i].pos);
        terms.push_back(std::move(term));
        if (toks[i].kind == Token::Comma) {
            ++i;
            if (toks[i].kind == Token::End) throw ParseError("trailing comma", toks[i].pos);
        } else if (toks[i].kind != Token::End) {
            throw ParseError("expected ',' between monomials", toks[i].pos);
        }
    }
    if (terms.empty()) throw ParseError("empty expression", 0);
    return terms;
}

// letter+digits with a common letter across all names selects indexed mode
bool indexed_mode(const std::vector<std::string>& names, char* letter, int* max_index) {
    char common = 0;
    int mx = 0;
    for (const auto& n : names) {
        if (n.size() < 2 || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
        for (std::size_t i = 1; i < n.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
        if (common == 0) common = n[0];
        else if (common != n[0]) return false;
        const int idx = std::stoi(n.substr(1));
        if (idx < 1) return false;
        mx = std::max(mx, idx);
    }
    if (common == 0) return false;
    *letter = common;
    *max_index = mx;
    return true;
}

}  // namespace

ParsedTuple parse_monomial_list(const std::string& s) {
    const std::vector<RawTerm> raw = parse_raw_terms(s);

    std::vector<std::string> appearance;
    for (const auto& t : raw)
        for (const auto& [name, e] : t.exponents)
            if (std::find(appearance.begin(), appearance.end(), name) == appearance.end())
                appearance.push_back(name);

    ParsedTuple out;
    char letter = 0;
    int max_index = 0;
    std::map<std::string, int> position;
    if (!appearance.empty() && indexed_mode(appearance, &letter, &max_index)) {
        out.nvars = max_index;
        for (int i = 1; i <= max_index; ++i) out.vars.names.push_back(std::string(1, letter) + std::to_string(i));
        for (const auto& n : appearance) position[n] = std::stoi(n.substr(1)) - 1;
    } else {
        out.nvars = static_cast<int>(appearance.size());
        out.vars.names = appearance;
        for (std::size_t i = 0; i < appearance.size(); ++i) position[appearance[i]] = static_cast<int>(i);
    }

    for (const auto& t : raw) {
        Exponents e(out.nvars, 0);
        for (const auto& [name, k] : t.exponents) e[position[name]] += k;
        out.terms.emplace_back(t.coeff, std::move(e));
    }
    return out;
}

ParsedIdeal parse_ideal_expr(const std::string& s) {
    ParsedTuple t = parse_monomial_list(s);
    std::vector<Exponents> gens;
    for (const auto& term : t.terms)
        if (!term.is_zero()) gens.push_back(term.exp);
    ParsedIdeal out;
    out.ideal = minimalize(t.nvars, gens);
    out.vars = t.vars;
    return out;
}

PrimeSupport parse_prime_expr(const std::string& s, const VarTable& vars) {
    std::vector<int> idx;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string name = s.substr(start, end - start);
        name.erase(std::remove_if(name.begin(), name.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        if (!name.empty()) {
            const int i = vars.index_of(name);
            if (i < 0) throw ParseError("unknown variable '" + name + "'", start);
            idx.push_back(i);
        }
        if (end == s.size()) break;
        start = end + 1;
    }
    if (idx.empty()) throw ParseError("empty prime", 0);
    return PrimeSupport(std::move(idx));
}

Term parse_monomial_with_vars(const std::string& s, const VarTable& vars) {
    const std::vector<RawTerm> raw = parse_raw_terms(s);
    if (raw.size() != 1) throw ParseError("expected a single monomial", raw.size() > 1 ? raw[1].pos : 0);
    Exponents e(vars.names.size(), 0);
    for (const auto& [name, k] : raw[0].exponents) {
        const int i = vars.index_of(name);
        if (i < 0) throw ParseError("unknown variable '" + name + "'", raw[0].pos);
        e[i] += k;
    }
    return Term(raw[0].coeff, std::move(e));
}

std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names) {
    if (is_zero_exp(e)) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
        if (e[i] > 1) os << "^" << e[i];
    }
    return os.str();
}

std::string prime_to_string(const PrimeSupport& P, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < P.vars.size(); ++i) {
        if (i) os << ", ";
        const int v = P.vars[i];
        os << (static_cast<std::size_t>(v) < names.size() ? names[v] : "x" + std::to_string(v + 1));
    }
    os << "]";
    return os.str();
}

std::vector<std::string> cycle_lines(const Cycle& c, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& [p, m] : c.components()) {
        std::ostringstream os;
        os << m << "·" << prime_to_string(p, names);
        out.push_back(os.str());
    }
    return out;
}

std::string cycle_to_string(const Cycle& c, const std::vector<std::string>& names) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    const auto lines = cycle_lines(c, names);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) os << " + ";
        os << lines[i];
    }
    return os.str();
}

}  // namespace cyclekit
