#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclekit/builders.hpp"
#include "cyclekit/homology.hpp"

namespace cyclekit {

using Json = nlohmann::json;

// Coefficients travel as exact fraction strings; all indices are 0-based.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int nvars);

Json form_to_json(const DifferentialForm& w);
DifferentialForm form_from_json(const Json& j, int nvars);

Json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const Json& j);

Json complex_to_json(const Complex& E);
Complex complex_from_json(const Json& j);

Json chain_map_to_json(const ChainMap& c);
ChainMap chain_map_from_json(const Json& j, Complex source, Complex target);

Json cycle_to_json(const Cycle& c);

// Names of the ambient variables, for parsing and printing.
struct VarTable {
    std::vector<std::string> names;
    int index_of(const std::string& name) const;  // -1 when unknown
};

struct ParsedTuple {
    std::vector<Term> terms;
    int nvars = 0;
    VarTable vars;
};

struct ParsedIdeal {
    MonomialIdeal ideal;
    VarTable vars;
    ParsedIdeal() : ideal(0) {}
};

// Comma-separated monomials with optional rational coefficients, variables
// either letter+index (x1, z2 -> position = index) or bare names in order of
// first appearance.
ParsedTuple parse_monomial_list(const std::string& s);
ParsedIdeal parse_ideal_expr(const std::string& s);

// "x,y" against an existing variable table
PrimeSupport parse_prime_expr(const std::string& s, const VarTable& vars);

// single monomial resolved against an existing variable table
Term parse_monomial_with_vars(const std::string& s, const VarTable& vars);

std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names);
std::string prime_to_string(const PrimeSupport& P, const std::vector<std::string>& names);

// One line per component, sorted by codimension then lexicographically;
// "0" for the zero cycle.
std::vector<std::string> cycle_lines(const Cycle& c, const std::vector<std::string>& names);
std::string cycle_to_string(const Cycle& c, const std::vector<std::string>& names);

std::vector<std::string> default_names(int nvars);

}  // namespace cyclekit
