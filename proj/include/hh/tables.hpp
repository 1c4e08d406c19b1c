#pragma once

// Expected products and module relations, kept as data so every expectation
// can be audited against its printed form in one place. Coefficients are
// elements of S = k[x^2, y^2, z] in the parser's text syntax.

#include <string>
#include <vector>

namespace hh {

struct ExpectedTerm {
    std::string generator;
    std::string coefficient;
};

/// left * right == sum coefficient * generator, modulo boundaries.
struct TableEntry {
    std::string id;
    std::string location;
    std::string left, right;
    std::vector<ExpectedTerm> expected;  // empty means zero
    std::string note;
};

/// multiplier * generator == sum coefficient * generator, modulo boundaries.
struct ModuleRelation {
    std::string id;
    std::string location;
    std::string generator;
    std::string multiplier;
    std::vector<ExpectedTerm> expected;
};

/// sum coefficient * generator == 0 exactly, as cochains.
struct CochainRelation {
    std::string id;
    std::string location;
    std::vector<ExpectedTerm> terms;
    std::string note;
};

/// HH^1 x HH^1: six products and the four squares.
const std::vector<TableEntry>& hh1_hh1_table();

/// HH^1 x HH^2: sixteen products.
const std::vector<TableEntry>& hh1_hh2_table();

/// z on m_0, z on nu_0, and x^2, y^2, z on q_1.
const std::vector<ModuleRelation>& module_relations();

/// The printed four-term relation among nu_0..nu_3, and the one that holds.
const std::vector<CochainRelation>& cochain_relations();

/// Degree-2 cycles listed as optional extra generators.
struct RedundantCycle {
    std::string id;
    std::string cochain;
};
const std::vector<RedundantCycle>& redundant_cycles();

/// The third summand of B^1 as printed.
inline constexpr const char* kB1Summand = "t # (2*x^2*y - x*z) - u # (2*x*y^2 - y*z)";

}  // namespace hh
