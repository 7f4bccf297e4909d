#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellsym/common.hpp"

namespace cellsym {

// Oriented multiplicity-one graph on a family's antispecial members. An
// arrow (from, to) says `to` occurs with multiplicity one in the basis
// element attached to `from`, so `from` must precede `to` in any order that
// makes the multiplicity matrix unitriangular. The graph must be a simple
// DAG.
struct GraphVertex {
    std::string id;
    std::string label;
    std::optional<std::int64_t> dim;

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct CellGraph {
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<std::string, std::string>> arrows;  // (from, to)

    friend bool operator==(const CellGraph&, const CellGraph&) = default;
};

// Violations are data, not exceptions.
struct GraphViolation {
    std::string code;  // DuplicateId, UnknownEndpoint, SelfArrow, DuplicateArrow, CycleDetected
    std::string detail;
};

struct GraphReport {
    std::vector<GraphViolation> violations;
    bool ok() const { return violations.empty(); }
};

GraphReport validate_graph(const CellGraph& g);

// Vertex ids ordered so every arrow's source precedes its target (making the
// multiplicity matrix lower-triangular with unit diagonal); ties broken by
// input order. Throws CyclicInput / InvalidGraph.
std::vector<std::string> topological_order(const CellGraph& g);

// Left-cell counts N(E): the unique integer solution of
//   N(E) + sum over arrows E' -> E of N(E') = dim(E).
struct MultiplicitySolution {
    std::vector<std::pair<std::string, std::int64_t>> counts;  // input vertex order
    bool nonpositive_warning = false;

    std::int64_t count_for(const std::string& id) const;
};

// Exact back-substitution along a topological order. Values are reported
// even if nonpositive (warning flag set). Throws MissingDims, CyclicInput,
// InvalidGraph.
MultiplicitySolution solve_left_cell_counts(const CellGraph& g);

// Deterministic DOT text; vertices in input order, then arrows.
std::string export_dot(const CellGraph& g);

// {"vertices":[{"id":..,"label":..,"dim":..},...],"arrows":[[from,to],...]}
CellGraph graph_from_json(const std::string& text);
std::string graph_to_json(const CellGraph& g);

}  // namespace cellsym
