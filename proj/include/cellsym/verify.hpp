#pragma once

#include <string>
#include <vector>

#include "cellsym/cell_graph.hpp"
#include "cellsym/exceptional.hpp"

namespace cellsym {

// Built-in graphs: "1", "2", "3", "4", "5", "11", "17" are the exceptional
// family graphs; "bp1".."bp4" are the subspace-catalog graphs (distinct
// subspaces as vertices, printed arrows where available). Throws UnknownId
// on any other key.
CellGraph builtin_graph(const std::string& key);
const std::vector<std::string>& builtin_graph_keys();

// Named consistency suites: "catalan", "lattice", "dtype", "paper", "all".
// Each check reports pass/fail; known data anomalies (the duplicated p = 4
// catalog entry, the r = 0 lift defects, the misaligned-source lift
// labelling) count as passing when detected and reported as expected.
// Throws UnknownSuite.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace cellsym
