#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cellsym/cell_graph.hpp"
#include "cellsym/common.hpp"

namespace cellsym {

// Catalog record for one exceptional-type family, keyed by |c|. Labels are
// kept exactly as printed in the source tables and never reinterpreted.
// Graph vertices use the attached subgroup names as ids where those are
// printed (sizes 4, 5, 11, 17) and the member labels otherwise; node labels
// always carry the member labels, in the same order as as_labels.
struct ExceptionalFamily {
    unsigned size = 0;                      // |c|
    std::vector<std::string> as_labels;     // antispecial member labels
    std::vector<std::string> indexing;      // printed (g_i, eps) indexing, may be empty
    std::vector<std::string> cal_c;         // subgroup names, may be empty
    CellGraph graph;                        // vertices in as_labels order
    std::map<std::string, std::int64_t> expected_counts;  // by as_label, may be empty
    bool counts_derived = false;  // true when frozen from this solver, not supplied data
    std::vector<std::pair<std::string, std::string>> gamma;  // label -> unipotent class
};

const std::vector<unsigned>& exceptional_sizes();  // {1, 2, 3, 4, 5, 11, 17}

// Throws UnknownSize outside the allowed set.
const ExceptionalFamily& lookup_family(unsigned size);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every embedded consistency check: the size table, DAG validation per
// record, the solver against expected counts (sizes 17 and 11), and
// injectivity of the unipotent-class table.
std::vector<CheckResult> validate_all();

}  // namespace cellsym
