#include "cellsym/f2_lattice.hpp"

#include <algorithm>
#include <set>

#include "cellsym/tableaux.hpp"

namespace cellsym {

namespace {

// Reduce v against an echelon basis; returns the residue (0 iff v in span).
std::uint32_t reduce(std::uint32_t v, const std::vector<std::uint32_t>& basis) {
    for (auto b : basis) {
        const std::uint32_t lead = std::uint32_t(1) << (31 - __builtin_clz(b));
        if (v & lead) v ^= b;
    }
    return v;
}

std::vector<std::uint32_t> echelonize(std::vector<std::uint32_t> vecs) {
    std::vector<std::uint32_t> basis;  // kept sorted by leading bit descending
    for (auto v : vecs) {
        v = reduce(v, basis);
        if (v == 0) continue;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<>());
    }
    // Back-substitute so each leading bit appears in exactly one vector.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint32_t lead = std::uint32_t(1) << (31 - __builtin_clz(basis[i]));
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i && (basis[j] & lead)) basis[j] ^= basis[i];
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

}  // namespace

F2Subspace make_subspace(unsigned p, const std::vector<std::uint32_t>& generators) {
    for (auto g : generators)
        if (p < 32 && (g >> p) != 0)
            throw Error("OutOfRange", "generator uses coordinates beyond e_" +
                                          std::to_string(2 * p - 1));
    return F2Subspace{p, echelonize(generators)};
}

F2Subspace parse_generators(std::string_view text, unsigned p) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    const std::string_view whole = trim(text);
    if (whole == "-" || whole == "−") return F2Subspace{p, {}};

    std::vector<std::uint32_t> gens;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= whole.size(); ++i) {
        if (i != whole.size() && whole[i] != ',') continue;
        const std::string_view token = trim(whole.substr(start, i - start));
        start = i + 1;
        if (token.empty()) throw Error("BadDigit", "empty generator");
        std::uint32_t vec = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw Error("BadDigit", std::string("unexpected character '") + c + "'");
            const unsigned d = static_cast<unsigned>(c - '0');
            if (d % 2 == 0)
                throw Error("BadDigit", "even digit " + std::to_string(d) +
                                            "; coordinates are e_1, e_3, ...");
            if (d > 2 * p - 1)
                throw Error("OutOfRange", "digit " + std::to_string(d) + " beyond e_" +
                                              std::to_string(2 * p - 1));
            vec |= std::uint32_t(1) << ((d - 1) / 2);
        }
        gens.push_back(vec);
    }
    return make_subspace(p, gens);
}

std::vector<std::string> basis_bitstrings(const F2Subspace& s) {
    std::vector<std::string> out;
    for (auto v : s.basis) {
        std::string bits(s.p, '0');
        for (unsigned k = 0; k < s.p; ++k)
            if (v & (std::uint32_t(1) << k)) bits[k] = '1';
        out.push_back(std::move(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const F2Subspace& a, const F2Subspace& b) {
    if (a.p != b.p)
        throw Error("DimensionMismatch", "ambient dimensions differ: " + std::to_string(a.p) +
                                             " vs " + std::to_string(b.p));
    for (auto v : b.basis)
        if (reduce(v, a.basis) != 0) return false;
    return true;
}

std::vector<F2Subspace> enumerate_subspaces(unsigned p) {
    if (p > 16) throw Error("ResourceLimit", "ambient dimension too large");
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> queue;
    queue.emplace_back();  // the zero subspace
    seen.insert(std::vector<std::uint32_t>{});
    // Grow every subspace by every vector outside it.
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto basis = queue[q];
        for (std::uint32_t v = 1; v < (std::uint32_t(1) << p); ++v) {
            if (reduce(v, basis) == 0) continue;
            auto bigger = basis;
            bigger.push_back(v);
            bigger = echelonize(bigger);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    std::vector<F2Subspace> out;
    for (const auto& b : seen) out.push_back(F2Subspace{p, b});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct CatalogData {
    unsigned p;
    std::vector<const char*> entries;
    std::vector<std::pair<const char*, const char*>> arrows;
};

const CatalogData& catalog_data(unsigned p) {
    static const CatalogData p1{1, {"1", "-"}, {}};
    static const CatalogData p2{2,
                                {"1,3", "13", "1", "3", "-"},
                                {{"1,3", "13"}, {"-", "3"}}};
    static const CatalogData p3{3,
                                {"1,3,5", "1,35", "13,5", "1,3", "3,5", "1,5", "3,135", "13",
                                 "35", "1", "3", "5", "135", "-"},
                                {{"1,3,5", "1,35"},
                                 {"1,3,5", "13,5"},
                                 {"1,35", "135"},
                                 {"13,5", "135"},
                                 {"135", "3,135"},
                                 {"-", "3"},
                                 {"-", "5"},
                                 {"3", "3,5"},
                                 {"5", "3,5"},
                                 {"3,5", "35"},
                                 {"1,3", "13"},
                                 {"1", "1,5"}}};
    // The p = 4 list is reproduced exactly as printed, including the repeated
    // "1,35,7"; the arrow list is not printed for p = 4.
    static const CatalogData p4{
        4,
        {"1,3,5,7", "1,3,5",  "1,3,7",  "1,5,7",   "3,5,7",   "1,35,7", "1,3,57",
         "1,35,7",  "13,5,7", "3,135,7", "1,357,5", "1,3",     "1,5",    "1,7",
         "3,5",     "3,7",    "5,7",     "1,357",   "135,7",   "3,135",  "5,357",
         "1,35",    "1,57",   "3,57",    "13,5",    "13,7",    "35,7",   "3,1357",
         "5,1357",  "35,1357", "13,57",  "1357",    "135",     "357",    "13",
         "35",      "57",      "1",      "3",       "5",       "7",      "-"},
        {}};
    switch (p) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        case 4: return p4;
        default:
            throw Error("OutOfRange", "catalogs exist for p in [1, 4], got " + std::to_string(p));
    }
}

}  // namespace

std::size_t SubspaceCatalog::distinct_count() const {
    std::set<F2Subspace> distinct;
    for (const auto& e : entries) distinct.insert(e.space);
    return distinct.size();
}

const F2Subspace& SubspaceCatalog::by_printed(const std::string& printed) const {
    for (const auto& e : entries)
        if (e.printed == printed) return e.space;
    throw Error("UnknownId", "no catalog entry \"" + printed + "\"");
}

SubspaceCatalog validate_catalog(unsigned p) {
    const CatalogData& data = catalog_data(p);
    SubspaceCatalog cat;
    cat.p = p;
    for (const char* text : data.entries)
        cat.entries.push_back(CatalogEntry{text, parse_generators(text, p)});

    for (std::size_t i = 0; i < cat.entries.size(); ++i)
        for (std::size_t j = i + 1; j < cat.entries.size(); ++j)
            if (cat.entries[i].space == cat.entries[j].space)
                cat.anomalies.push_back(
                    {"DuplicateEntry", "entries " + std::to_string(i) + " and " +
                                           std::to_string(j) + " both give \"" +
                                           cat.entries[i].printed + "\""});

    const std::uint64_t expected = catalan(p + 1);
    const std::size_t distinct = cat.distinct_count();
    if (distinct != expected)
        cat.anomalies.push_back({"CountMismatch", std::to_string(distinct) +
                                                      " distinct subspaces, expected " +
                                                      std::to_string(expected)});
    return cat;
}

const std::vector<std::pair<std::string, std::string>>& catalog_arrows(unsigned p) {
    auto make = [](unsigned q) {
        std::vector<std::pair<std::string, std::string>> v;
        for (const auto& [a, b] : catalog_data(q).arrows) v.emplace_back(a, b);
        return v;
    };
    static const std::vector<std::pair<std::string, std::string>> a1 = make(1), a2 = make(2),
                                                                   a3 = make(3), a4 = make(4);
    switch (p) {
        case 1: return a1;
        case 2: return a2;
        case 3: return a3;
        case 4: return a4;
        default:
            throw Error("OutOfRange", "catalogs exist for p in [1, 4], got " + std::to_string(p));
    }
}

std::vector<CoveringVerdict> covering_check(
    const SubspaceCatalog& catalog,
    const std::vector<std::pair<std::string, std::string>>& arrows) {
    std::vector<CoveringVerdict> out;
    for (const auto& [from, to] : arrows) {
        CoveringVerdict v{from, to, false, ""};
        const F2Subspace& a = catalog.by_printed(from);
        const F2Subspace& b = catalog.by_printed(to);
        const F2Subspace *small = nullptr, *big = nullptr;
        if (contains(a, b) && a.dim() != b.dim()) {
            big = &a;
            small = &b;
        } else if (contains(b, a) && a.dim() != b.dim()) {
            big = &b;
            small = &a;
        }
        if (!big) {
            v.detail = "endpoints are not strictly nested";
            out.push_back(std::move(v));
            continue;
        }
        v.pass = true;
        for (const auto& e : catalog.entries) {
            if (e.space == *small || e.space == *big) continue;
            if (contains(*big, e.space) && contains(e.space, *small)) {
                v.pass = false;
                v.detail = "\"" + e.printed + "\" lies strictly between";
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cellsym
