// cellsym — exact combinatorics of Weyl-group symbols, families, and cell
// graphs. Subcommands: enum, families, graph, lift, apas, lattice, verify.
// Exit codes: 0 success, 1 usage or unexpected failure, 2 data/limit failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cellsym/bsymbol.hpp"
#include "cellsym/cell_graph.hpp"
#include "cellsym/dsymbol.hpp"
#include "cellsym/exceptional.hpp"
#include "cellsym/f2_lattice.hpp"
#include "cellsym/lifting.hpp"
#include "cellsym/report.hpp"
#include "cellsym/tableaux.hpp"
#include "cellsym/verify.hpp"

namespace {

struct Config {
    unsigned max_n = 12;
    unsigned max_p = 6;
};

Config load_config() {
    Config cfg;
    if (const char* env = std::getenv("CELLSYM_MAX_N")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) cfg.max_n = static_cast<unsigned>(v);
    }
    return cfg;
}

std::vector<std::uint32_t> parse_key(const std::string& text) {
    std::vector<std::uint32_t> key;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        key.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    std::sort(key.begin(), key.end());
    return key;
}

cellsym::CellGraph resolve_graph(const std::string& builtin, const std::string& input) {
    if (!builtin.empty()) return cellsym::builtin_graph(builtin);
    std::ifstream in(input);
    if (!in) throw cellsym::Error("ParseError", "cannot open " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    return cellsym::graph_from_json(buf.str());
}

int run(int argc, char** argv) {
    const Config cfg = load_config();

    CLI::App app{"exact symbol/family/cell-graph combinatorics for Weyl groups of types B and D"};
    app.require_subcommand(1);

    std::string type = "b", kind = "prime", key_text, suite = "all";
    std::string builtin, input;
    unsigned n = 0, p = 0, r = 0;
    bool as_json = false, antispecial_only = false, list_symbols = false;

    auto* cmd_enum = app.add_subcommand("enum", "enumerate the rank-n symbols");
    cmd_enum->add_option("--type", type, "b or d")->check(CLI::IsMember({"b", "d"}));
    cmd_enum->add_option("--n", n, "rank")->required();
    cmd_enum->add_option("--kind", kind, "prime or doubleprime (type d)")
        ->check(CLI::IsMember({"prime", "doubleprime"}));
    cmd_enum->add_flag("--json", as_json, "JSON output");

    auto* cmd_families = app.add_subcommand("families", "partition the rank-n symbols into families");
    cmd_families->add_option("--type", type, "b or d")->check(CLI::IsMember({"b", "d"}));
    cmd_families->add_option("--n", n, "rank")->required();
    cmd_families->add_option("--key", key_text, "restrict to the family with this entry multiset");
    cmd_families->add_flag("--antispecial-only", antispecial_only, "list only antispecial members");
    cmd_families->add_flag("--json", as_json, "JSON output");

    auto* cmd_graph = app.add_subcommand("graph", "validate, export, or solve a cell graph");
    std::string action;
    cmd_graph->add_option("action", action, "validate | dot | solve")
        ->required()
        ->check(CLI::IsMember({"validate", "dot", "solve"}));
    cmd_graph->add_option("--builtin", builtin, "builtin key: 1,2,3,4,5,11,17,bp1..bp4");
    cmd_graph->add_option("--input", input, "graph JSON file");
    cmd_graph->add_flag("--json", as_json, "JSON output (solve)");

    auto* cmd_lift = app.add_subcommand("lift", "lift a doubled-entry family into the permutation family");
    cmd_lift->add_option("--p", p, "family parameter")->required();
    cmd_lift->add_option("--r", r, "doubled entry (0 for the prepend variant)")->required();

    auto* cmd_apas = app.add_subcommand("apas", "antispecial members of the permutation family via tableaux");
    cmd_apas->add_option("--p", p, "family parameter")->required();
    cmd_apas->add_flag("--list", list_symbols, "print the symbols, not just the count");

    auto* cmd_lattice = app.add_subcommand("lattice", "subspace catalog for the rank p^2+p family");
    cmd_lattice->add_option("--p", p, "catalog parameter, 1..4")->required();
    cmd_lattice->add_flag("--json", as_json, "JSON output");

    auto* cmd_exceptional =
        app.add_subcommand("exceptional", "dump an exceptional family record as JSON");
    unsigned size = 0;
    cmd_exceptional->add_option("--size", size, "family size: 1,2,3,4,5,11,17")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a consistency suite");
    cmd_verify->add_option("--suite", suite, "all | paper | catalan | lattice | dtype")
        ->check(CLI::IsMember({"all", "paper", "catalan", "lattice", "dtype"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    using namespace cellsym;
    try {
        if (*cmd_enum) {
            if (type == "b") {
                const auto symbols = enumerate_symbols(n, cfg.max_n);
                if (as_json) {
                    std::cout << symbols_json(n, symbols) << "\n";
                } else {
                    for (const auto& s : symbols) std::cout << s.str() << "\n";
                }
            } else {
                const DKind k = kind == "prime" ? DKind::Prime : DKind::DoublePrime;
                const auto symbols = enumerate_symbols_d(n, k, cfg.max_n);
                if (as_json) {
                    std::cout << symbols_json_d(n, k, symbols) << "\n";
                } else {
                    for (const auto& s : symbols) std::cout << s.str() << "\n";
                }
            }
            return 0;
        }

        if (*cmd_families) {
            const auto key = key_text.empty() ? std::vector<std::uint32_t>{} : parse_key(key_text);
            if (type == "b") {
                auto fams = partition_families(n, cfg.max_n);
                if (!key.empty())
                    std::erase_if(fams, [&](const Family& f) { return f.key != key; });
                if (as_json) {
                    std::cout << families_json(n, fams) << "\n";
                } else {
                    for (const auto& f : fams) {
                        std::cout << "key=" << sequence_str(f.key) << " p=" << f.p_c
                                  << " members=" << f.members.size()
                                  << " special=" << f.members[f.special].str()
                                  << " antispecial=" << f.antispecial.size() << "\n";
                        if (antispecial_only)
                            for (auto i : f.antispecial)
                                std::cout << "  " << f.members[i].str() << "\n";
                    }
                }
            } else {
                auto fams = partition_families_d(n, cfg.max_n);
                if (!key.empty())
                    std::erase_if(fams, [&](const DFamily& f) { return f.key != key; });
                if (as_json) {
                    std::cout << families_json_d(n, fams) << "\n";
                } else {
                    for (const auto& f : fams) {
                        std::cout << "key=" << sequence_str(f.key) << " p=" << f.p_c
                                  << " members=" << f.members.size()
                                  << " special=" << f.members[f.special].str()
                                  << " antispecial=" << f.antispecial.size() << "\n";
                        if (antispecial_only)
                            for (auto i : f.antispecial)
                                std::cout << "  " << f.members[i].str() << "\n";
                    }
                }
            }
            return 0;
        }

        if (*cmd_graph) {
            const CellGraph g = resolve_graph(builtin, input);
            if (action == "validate") {
                const auto report = validate_graph(g);
                if (report.ok()) {
                    std::cout << "ok\n";
                    return 0;
                }
                for (const auto& v : report.violations)
                    std::cout << v.code << ": " << v.detail << "\n";
                return 2;
            }
            if (action == "dot") {
                const auto report = validate_graph(g);
                if (!report.ok()) {
                    for (const auto& v : report.violations)
                        std::cerr << v.code << ": " << v.detail << "\n";
                    return 2;
                }
                std::cout << export_dot(g);
                return 0;
            }
            const auto sol = solve_left_cell_counts(g);
            if (as_json) {
                nlohmann::ordered_json j;
                for (const auto& [id, count] : sol.counts) j[id] = count;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [id, count] : sol.counts)
                    std::cout << id << " " << count << "\n";
            }
            if (sol.nonpositive_warning)
                std::cerr << "warning: nonpositive counts; input data is inconsistent\n";
            return 0;
        }

        if (*cmd_lift) {
            if (p > cfg.max_p)
                throw Error("ResourceLimit", "p exceeds guardrail " + std::to_string(cfg.max_p));
            if (r == 0) {
                for (const auto& src : doubled_family(p, 0)) {
                    const auto rep = lift_pair_r0(src, p);
                    auto show = [](const LiftCandidate& c) {
                        return sequence_str(c.entries) +
                               (c.valid ? " valid" : " invalid[" + c.error_code + "]") +
                               " rank " + std::to_string(c.rank);
                    };
                    std::cout << src.str() << " : " << show(rep.zero_one) << " | "
                              << show(rep.one_zero) << "\n";
                }
                return 0;
            }
            for (const auto& src : doubled_family(p, r)) {
                const auto s = descent_data(src).descents.size();
                try {
                    const auto pair = lift_pair(src, p, r);
                    std::cout << src.str() << " -> " << pair.primed.str() << " | "
                              << pair.double_primed.str() << " (|S|: " << s << " -> " << s
                              << ", " << s + 1 << ")\n";
                } catch (const Error& e) {
                    if (std::string(e.code()) != "AmbiguousLabeling") throw;
                    const auto [a, b] = lift_candidates(src, p, r);
                    std::cout << src.str() << " -> " << a.str() << " | " << b.str()
                              << " (ambiguous: |S| " << descent_data(a).descents.size() << ", "
                              << descent_data(b).descents.size() << " vs source " << s << ")\n";
                }
            }
            return 0;
        }

        if (*cmd_apas) {
            if (p > cfg.max_p)
                throw Error("ResourceLimit", "p exceeds guardrail " + std::to_string(cfg.max_p));
            const auto symbols = antispecial_via_tableaux(p);
            std::cout << "p=" << p << " antispecial=" << symbols.size() << "\n";
            if (list_symbols)
                for (const auto& s : symbols) std::cout << s.str() << "\n";
            return 0;
        }

        if (*cmd_lattice) {
            const auto cat = validate_catalog(p);
            if (as_json) {
                std::cout << catalog_json(cat) << "\n";
                return 0;
            }
            std::cout << "p=" << p << " entries=" << cat.entries.size()
                      << " distinct=" << cat.distinct_count() << "\n";
            for (const auto& v : covering_check(cat, catalog_arrows(p)))
                std::cout << (v.pass ? "cover " : "FAIL  ") << v.from << " -> " << v.to
                          << (v.detail.empty() ? "" : "  (" + v.detail + ")") << "\n";
            for (const auto& a : cat.anomalies)
                std::cout << "anomaly " << a.kind << ": " << a.detail << "\n";
            return 0;
        }

        if (*cmd_exceptional) {
            std::cout << family_record_json(lookup_family(size)) << "\n";
            return 0;
        }

        if (*cmd_verify) {
            const auto checks = run_suite(suite);
            bool all_pass = true;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
                all_pass = all_pass && c.pass;
            }
            std::cout << (all_pass ? "all checks passed\n" : "checks failed\n");
            return all_pass ? 0 : 1;
        }
    } catch (const cellsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
