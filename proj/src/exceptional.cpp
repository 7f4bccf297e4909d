#include "cellsym/exceptional.hpp"

#include <algorithm>
#include <set>

namespace cellsym {

namespace {

GraphVertex vertex(std::string id, std::string label) {
    return GraphVertex{std::move(id), std::move(label), std::nullopt};
}

GraphVertex vertex(std::string id, std::string label, std::int64_t dim) {
    return GraphVertex{std::move(id), std::move(label), dim};
}

std::vector<ExceptionalFamily> build_families() {
    std::vector<ExceptionalFamily> fams;

    {
        ExceptionalFamily f;
        f.size = 1;
        f.as_labels = {"special"};
        f.graph.vertices = {vertex("special", "special")};
        fams.push_back(std::move(f));
    }
    {
        ExceptionalFamily f;
        f.size = 2;
        f.as_labels = {"nonspecial"};
        f.graph.vertices = {vertex("nonspecial", "nonspecial")};
        fams.push_back(std::move(f));
    }
    {
        ExceptionalFamily f;
        f.size = 3;
        f.as_labels = {"nonspecial_1", "nonspecial_2"};
        f.graph.vertices = {vertex("nonspecial_1", "nonspecial_1"),
                            vertex("nonspecial_2", "nonspecial_2")};
        fams.push_back(std::move(f));
    }
    {
        // The two-dimensional nonspecial member and one of the two
        // one-dimensional members (which one is not recorded).
        ExceptionalFamily f;
        f.size = 4;
        f.as_labels = {"nonspecial_2dim", "onedim_unresolved"};
        f.cal_c = {"S_2", "S_3"};
        f.graph.vertices = {vertex("S_2", "nonspecial_2dim"),
                            vertex("S_3", "onedim_unresolved")};
        f.graph.arrows = {{"S_3", "S_2"}};
        fams.push_back(std::move(f));
    }
    {
        ExceptionalFamily f;
        f.size = 5;
        f.as_labels = {"(1,ε)", "(g_2,1)", "(g_3,1)"};
        f.indexing = f.as_labels;
        f.cal_c = {"S_1", "S_2", "S_3"};
        f.graph.vertices = {vertex("S_1", "(1,ε)"), vertex("S_2", "(g_2,1)"),
                            vertex("S_3", "(g_3,1)")};
        f.graph.arrows = {{"S_3", "S_2"}};  // S_1 is isolated
        fams.push_back(std::move(f));
    }
    {
        ExceptionalFamily f;
        f.size = 11;
        f.as_labels = {"4_4", "6_1", "4_3", "4_1", "1_2"};
        f.indexing = {"(g_2,ε'')", "(g_3,1)", "(g_4,1)", "(g'_2,ε'')", "(g'_2,ε')"};
        f.cal_c = {"S_2", "S_3", "S_4", "S_2×S_2", "Δ_8"};
        f.graph.vertices = {vertex("S_2", "4_4", 4), vertex("S_3", "6_1", 6),
                            vertex("S_4", "4_3", 4), vertex("S_2×S_2", "4_1", 4),
                            vertex("Δ_8", "1_2", 1)};
        f.graph.arrows = {{"Δ_8", "S_4"}, {"S_4", "S_3"}, {"S_3", "S_2"}};  // S_2×S_2 isolated
        // Left-cell counts frozen from this solver run (not supplied data).
        f.expected_counts = {{"4_4", 1}, {"6_1", 3}, {"4_3", 3}, {"4_1", 4}, {"1_2", 1}};
        f.counts_derived = true;
        fams.push_back(std::move(f));
    }
    {
        ExceptionalFamily f;
        f.size = 17;
        f.as_labels = {"2688", "2016", "448", "1134", "1344", "420", "168"};
        f.indexing = {"(g'_2,ε'')", "(g_6,1)", "(g_2,ε)", "(g_3,ε)",
                      "(g_4,1)",    "(g_5,1)", "(g'_2,ε')"};
        f.cal_c = {"S_2×S_2", "S_2×S_3", "S_2", "S_3", "S_4", "S_5", "Δ_8"};
        f.graph.vertices = {vertex("S_2×S_2", "2688", 2688), vertex("S_2×S_3", "2016", 2016),
                            vertex("S_2", "448", 448),       vertex("S_3", "1134", 1134),
                            vertex("S_4", "1344", 1344),     vertex("S_5", "420", 420),
                            vertex("Δ_8", "168", 168)};
        f.graph.arrows = {{"S_3", "S_2"},      {"S_4", "S_3"}, {"S_5", "S_4"},
                          {"S_5", "S_2×S_3"},  {"S_2×S_3", "S_2×S_2"}, {"Δ_8", "S_4"}};
        f.expected_counts = {{"2688", 1092}, {"2016", 1596}, {"448", 70}, {"1134", 378},
                             {"1344", 756},  {"420", 420},   {"168", 168}};
        f.gamma = {{"448", "A_5+A_2"},         {"2688", "D_6(a_2)"}, {"1134", "A_5+2A_1"},
                   {"2016", "(A_5+A_1)'"},     {"1344", "D_5(a_1)+A_2"}, {"420", "A_4+A_3"},
                   {"168", "D_4+A_2"}};
        fams.push_back(std::move(f));
    }
    return fams;
}

const std::vector<ExceptionalFamily>& families() {
    static const std::vector<ExceptionalFamily> fams = build_families();
    return fams;
}

}  // namespace

const std::vector<unsigned>& exceptional_sizes() {
    static const std::vector<unsigned> sizes = {1, 2, 3, 4, 5, 11, 17};
    return sizes;
}

const ExceptionalFamily& lookup_family(unsigned size) {
    for (const auto& f : families())
        if (f.size == size) return f;
    throw Error("UnknownSize", "|c| = " + std::to_string(size) +
                                   " is not one of 1, 2, 3, 4, 5, 11, 17");
}

std::vector<CheckResult> validate_all() {
    std::vector<CheckResult> out;

    {
        static const std::vector<std::pair<unsigned, std::size_t>> table = {
            {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {11, 5}, {17, 7}};
        bool pass = true;
        std::string detail;
        for (const auto& [size, expect] : table) {
            const auto& f = lookup_family(size);
            if (f.as_labels.size() != expect) {
                pass = false;
                detail += "|c|=" + std::to_string(size) + " has " +
                          std::to_string(f.as_labels.size()) + " members, expected " +
                          std::to_string(expect) + "; ";
            }
        }
        out.push_back({"size-table", pass, detail});
    }

    for (unsigned size : exceptional_sizes()) {
        const auto& f = lookup_family(size);
        const auto report = validate_graph(f.graph);
        std::string detail;
        for (const auto& v : report.violations) detail += v.code + ": " + v.detail + "; ";
        out.push_back({"graph-valid-" + std::to_string(size), report.ok(), detail});

        bool labels_ok = f.graph.vertices.size() == f.as_labels.size();
        for (std::size_t i = 0; labels_ok && i < f.as_labels.size(); ++i)
            labels_ok = f.graph.vertices[i].label == f.as_labels[i];
        out.push_back({"labels-match-" + std::to_string(size), labels_ok, ""});
    }

    for (unsigned size : {11u, 17u}) {
        const auto& f = lookup_family(size);
        CheckResult check{"solver-" + std::to_string(size), true, ""};
        const auto sol = solve_left_cell_counts(f.graph);
        for (std::size_t i = 0; i < f.as_labels.size(); ++i) {
            const std::int64_t got = sol.counts[i].second;
            const std::int64_t want = f.expected_counts.at(f.as_labels[i]);
            if (got != want) {
                check.pass = false;
                check.detail += f.as_labels[i] + ": " + std::to_string(got) + " != " +
                                std::to_string(want) + "; ";
            }
            if (got <= 0) {
                check.pass = false;
                check.detail += f.as_labels[i] + " nonpositive; ";
            }
        }
        out.push_back(std::move(check));
    }

    {
        const auto& f = lookup_family(17);
        std::set<std::string> targets;
        for (const auto& [label, cls] : f.gamma) targets.insert(cls);
        const bool pass = f.gamma.size() == 7 && targets.size() == 7;
        out.push_back({"gamma-injective-17", pass,
                       std::to_string(targets.size()) + " distinct targets"});
    }

    {
        auto isolated = [](const CellGraph& g, const std::string& id) {
            for (const auto& [from, to] : g.arrows)
                if (from == id || to == id) return false;
            return true;
        };
        const bool five = isolated(lookup_family(5).graph, "S_1") &&
                          lookup_family(5).graph.arrows.size() == 1;
        out.push_back({"isolated-5", five, "S_1 isolated, one arrow"});
        const bool eleven = isolated(lookup_family(11).graph, "S_2×S_2");
        out.push_back({"isolated-11", eleven, "S_2×S_2 isolated"});
        const auto& four = lookup_family(4).graph;
        const bool four_ok = four.arrows.size() == 1 && four.arrows[0].first == "S_3" &&
                             four.arrows[0].second == "S_2";
        out.push_back({"arrow-4", four_ok, "single arrow S_3 -> S_2"});
    }

    return out;
}

}  // namespace cellsym
