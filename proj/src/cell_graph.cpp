#include "cellsym/cell_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace cellsym {

namespace {

std::map<std::string, std::size_t> index_by_id(const CellGraph& g) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) idx.emplace(g.vertices[i].id, i);
    return idx;
}

// Kahn's algorithm, always taking the remaining indegree-zero vertex with the
// smallest input index. Returns vertex indices; leftovers (cycle members and
// their ancestors) stay out.
std::vector<std::size_t> kahn_order(const CellGraph& g,
                                    const std::map<std::string, std::size_t>& idx) {
    const std::size_t n = g.vertices.size();
    std::vector<unsigned> indeg(n, 0);
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [from, to] : g.arrows) {
        const std::size_t f = idx.at(from), t = idx.at(to);
        succ[f].push_back(t);
        ++indeg[t];
    }
    std::vector<std::size_t> order;
    std::vector<bool> done(n, false);
    for (;;) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == n) break;
        done[pick] = true;
        order.push_back(pick);
        for (auto t : succ[pick]) --indeg[t];
    }
    return order;
}

std::string find_cycle(const CellGraph& g, const std::map<std::string, std::size_t>& idx,
                       const std::vector<bool>& leftover) {
    // Every leftover vertex has a leftover predecessor; walking predecessors
    // must revisit a vertex, closing a cycle.
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<std::size_t>> pred(n);
    for (const auto& [from, to] : g.arrows) pred[idx.at(to)].push_back(idx.at(from));
    std::size_t cur = 0;
    while (cur < n && !leftover[cur]) ++cur;
    std::vector<std::size_t> walk;
    std::vector<int> seen_at(n, -1);
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        std::size_t next = n;
        for (auto p : pred[cur])
            if (leftover[p]) {
                next = p;
                break;
            }
        cur = next;
    }
    // Arrows run walk[i+1] -> walk[i]; the closing arrow is cur -> walk.back().
    std::string out = g.vertices[cur].id;
    for (std::size_t i = walk.size(); i-- > static_cast<std::size_t>(seen_at[cur]);) {
        out += " -> ";
        out += g.vertices[walk[i]].id;
    }
    return out;
}

}  // namespace

GraphReport validate_graph(const CellGraph& g) {
    GraphReport report;
    std::set<std::string> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second)
            report.violations.push_back({"DuplicateId", "vertex id \"" + v.id + "\" repeats"});
    std::set<std::pair<std::string, std::string>> seen_arrows;
    bool endpoints_ok = true;
    for (const auto& [from, to] : g.arrows) {
        if (!ids.count(from) || !ids.count(to)) {
            report.violations.push_back(
                {"UnknownEndpoint", "arrow " + from + " -> " + to + " references a missing id"});
            endpoints_ok = false;
            continue;
        }
        if (from == to)
            report.violations.push_back({"SelfArrow", "self arrow on \"" + from + "\""});
        if (!seen_arrows.emplace(from, to).second)
            report.violations.push_back(
                {"DuplicateArrow", "arrow " + from + " -> " + to + " repeats"});
    }
    if (endpoints_ok && report.violations.empty()) {
        const auto idx = index_by_id(g);
        const auto order = kahn_order(g, idx);
        if (order.size() != g.vertices.size()) {
            std::vector<bool> leftover(g.vertices.size(), true);
            for (auto i : order) leftover[i] = false;
            report.violations.push_back({"CycleDetected", find_cycle(g, idx, leftover)});
        }
    }
    return report;
}

namespace {

void require_valid(const CellGraph& g) {
    const GraphReport report = validate_graph(g);
    if (report.ok()) return;
    for (const auto& v : report.violations)
        if (v.code == "CycleDetected") throw Error("CyclicInput", v.detail);
    throw Error("InvalidGraph",
                report.violations.front().code + ": " + report.violations.front().detail);
}

}  // namespace

std::vector<std::string> topological_order(const CellGraph& g) {
    require_valid(g);
    const auto idx = index_by_id(g);
    const auto order = kahn_order(g, idx);
    std::vector<std::string> ids;
    ids.reserve(order.size());
    for (auto i : order) ids.push_back(g.vertices[i].id);
    return ids;
}

std::int64_t MultiplicitySolution::count_for(const std::string& id) const {
    for (const auto& [vid, n] : counts)
        if (vid == id) return n;
    throw Error("UnknownId", "no count for vertex \"" + id + "\"");
}

MultiplicitySolution solve_left_cell_counts(const CellGraph& g) {
    require_valid(g);
    for (const auto& v : g.vertices)
        if (!v.dim)
            throw Error("MissingDims", "vertex \"" + v.id + "\" has no dimension");

    const auto idx = index_by_id(g);
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<std::size_t>> incoming(n);
    for (const auto& [from, to] : g.arrows) incoming[idx.at(to)].push_back(idx.at(from));

    std::vector<std::int64_t> value(n, 0);
    for (auto i : kahn_order(g, idx)) {
        std::int64_t acc = *g.vertices[i].dim;
        for (auto src : incoming[i]) acc -= value[src];
        value[i] = acc;
    }

    MultiplicitySolution sol;
    for (std::size_t i = 0; i < n; ++i) {
        sol.counts.emplace_back(g.vertices[i].id, value[i]);
        if (value[i] <= 0) sol.nonpositive_warning = true;
    }
    return sol;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const CellGraph& g) {
    std::string out = "digraph cell {\n";
    for (const auto& v : g.vertices) {
        out += "  \"" + dot_escape(v.id) + "\" [label=\"" + dot_escape(v.label) + "\"";
        if (v.dim) out += ", dim=" + std::to_string(*v.dim);
        out += "];\n";
    }
    for (const auto& [from, to] : g.arrows)
        out += "  \"" + dot_escape(from) + "\" -> \"" + dot_escape(to) + "\";\n";
    out += "}\n";
    return out;
}

CellGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw Error("ParseError", "expected an object with a \"vertices\" array");
    CellGraph g;
    for (const auto& jv : j["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string())
            throw Error("ParseError", "vertex needs a string \"id\"");
        GraphVertex v;
        v.id = jv["id"].get<std::string>();
        v.label = jv.value("label", v.id);
        if (jv.contains("dim")) {
            if (!jv["dim"].is_number_integer() || jv["dim"].get<std::int64_t>() <= 0)
                throw Error("ParseError", "vertex \"" + v.id + "\" dim must be a positive integer");
            v.dim = jv["dim"].get<std::int64_t>();
        }
        g.vertices.push_back(std::move(v));
    }
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw Error("ParseError", "\"arrows\" must be an array");
        for (const auto& ja : j["arrows"]) {
            if (!ja.is_array() || ja.size() != 2 || !ja[0].is_string() || !ja[1].is_string())
                throw Error("ParseError", "arrow must be a [from, to] pair of strings");
            g.arrows.emplace_back(ja[0].get<std::string>(), ja[1].get<std::string>());
        }
    }
    return g;
}

std::string graph_to_json(const CellGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["label"] = v.label;
        if (v.dim) jv["dim"] = *v.dim;
        j["vertices"].push_back(std::move(jv));
    }
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : g.arrows)
        j["arrows"].push_back(nlohmann::ordered_json::array({from, to}));
    return j.dump(2);
}

}  // namespace cellsym
