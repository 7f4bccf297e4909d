#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cellsym/common.hpp"

namespace cellsym {

// A subspace of the F_2 vector space with basis e_1, e_3, ..., e_{2p-1}
// (bit k of a word is the coefficient of e_{2k+1}). The basis is kept in a
// unique reduced echelon form — each vector has a distinct leading bit that
// is clear in all the others, sorted by leading bit descending — so equality
// of subspaces is equality of the representation.
struct F2Subspace {
    unsigned p = 0;                    // ambient dimension
    std::vector<std::uint32_t> basis;  // canonical reduced echelon form

    unsigned dim() const { return static_cast<unsigned>(basis.size()); }

    friend bool operator==(const F2Subspace&, const F2Subspace&) = default;
    friend auto operator<=>(const F2Subspace&, const F2Subspace&) = default;
};

F2Subspace make_subspace(unsigned p, const std::vector<std::uint32_t>& generators);

// Generator syntax: comma-separated digit strings over the odd digits
// 1, 3, ..., 2p-1, each string denoting the sum of the named basis vectors
// ("1,35" is {e_1, e_3+e_5}); "-" (ASCII or U+2212) denotes the zero
// subspace. Throws BadDigit / OutOfRange.
F2Subspace parse_generators(std::string_view text, unsigned p);

// Basis vectors rendered as bit-strings, leftmost character = e_1
// coefficient, sorted ascending.
std::vector<std::string> basis_bitstrings(const F2Subspace& s);

// True when b is contained in a. Throws DimensionMismatch on different p.
bool contains(const F2Subspace& a, const F2Subspace& b);

// All subspaces of the ambient p-dimensional space, in canonical order.
std::vector<F2Subspace> enumerate_subspaces(unsigned p);

// One printed catalog entry, kept verbatim alongside its canonical form.
struct CatalogEntry {
    std::string printed;  // generator text, e.g. "1,35" or "-"
    F2Subspace space;
};

struct CatalogAnomaly {
    std::string kind;  // DuplicateEntry | CountMismatch
    std::string detail;
};

// The distinguished subspace collection attached to the rank p^2+p
// permutation family, exactly as printed, for p in [1,4]. Anomalies are
// detected and reported, never repaired: the p = 4 list repeats "1,35,7",
// leaving 41 distinct subspaces against the expected Cat_5 = 42.
struct SubspaceCatalog {
    unsigned p = 0;
    std::vector<CatalogEntry> entries;  // print order
    std::vector<CatalogAnomaly> anomalies;

    std::size_t distinct_count() const;
    const F2Subspace& by_printed(const std::string& printed) const;  // UnknownId
};

SubspaceCatalog validate_catalog(unsigned p);

// The printed arrow lists between catalog entries (p = 2 has two arrows,
// p = 3 twelve; p = 1 and p = 4 have none).
const std::vector<std::pair<std::string, std::string>>& catalog_arrows(unsigned p);

// Covering verdict for one arrow {G, G'}: after orienting by containment,
// one endpoint must contain the other with no catalog member strictly
// between.
struct CoveringVerdict {
    std::string from, to;
    bool pass = false;
    std::string detail;
};

std::vector<CoveringVerdict> covering_check(
    const SubspaceCatalog& catalog,
    const std::vector<std::pair<std::string, std::string>>& arrows);

}  // namespace cellsym
