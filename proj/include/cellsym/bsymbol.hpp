#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cellsym/common.hpp"

namespace cellsym {

// A type-B symbol: an odd-length sequence (a_1, ..., a_{2m+1}) of naturals
// whose odd-position and even-position subsequences are each strictly
// increasing, and in which the value 0 occurs at most once. The rank is
// sum(a_i) - m^2; Sym_n is the set of symbols of rank n.
class BSymbol {
public:
    // Validates on construction; throws Error with one of the codes
    // EvenLength, RowNotIncreasing, ZeroTwice, NegativeRank.
    explicit BSymbol(std::vector<std::uint32_t> entries);

    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    unsigned half() const noexcept;  // m, where the length is 2m+1
    std::uint64_t rank() const noexcept;
    std::string str() const { return sequence_str(entries_); }

    friend bool operator==(const BSymbol&, const BSymbol&) = default;
    friend auto operator<=>(const BSymbol&, const BSymbol&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

BSymbol validate_b(std::vector<std::uint32_t> entries);

// The entries occurring exactly once, with their descent positions.
//
// Every value occurring twice takes one odd-position and one even-position
// slot, so deleting all doubled values and closing up each row leaves a
// smaller symbol made of the once-occurring entries. `singles` is that
// reduced symbol's sequence: odd-row and even-row singles interleaved in row
// order. It agrees with plain position order whenever the single entries
// alternate between the two rows (in particular on symbols with all entries
// distinct). For a type-B symbol it has odd length 2p+1 and descents live in
// [1, 2p]; |descents| <= p always.
struct DescentData {
    std::vector<std::uint32_t> singles;  // reduced-symbol order (see above)
    std::vector<unsigned> descents;      // 1-based j with singles[j-1] > singles[j]
    unsigned p = 0;
};

DescentData descent_data(const BSymbol& sym);

// Special members are exactly those with an empty descent set.
bool is_special(const BSymbol& sym);

// All of Sym_n in lexicographic order on entry sequences. Sym_0 = {(0)}.
std::vector<BSymbol> enumerate_symbols(unsigned n, unsigned guard = limits::max_rank);

// An equivalence class of symbols sharing one entry multiset. Each family
// has a constant descent parameter p_c, a unique special member and a
// non-empty antispecial subset (members with |descents| = p_c).
struct Family {
    std::vector<std::uint32_t> key;        // sorted entry multiset
    std::vector<BSymbol> members;          // lexicographic order
    unsigned p_c = 0;
    std::size_t special = 0;               // index into members
    std::vector<std::size_t> antispecial;  // indices into members, ascending
};

// Families of Sym_n, sorted by key.
std::vector<Family> partition_families(unsigned n, unsigned guard = limits::max_rank);

std::size_t antispecial_count(const Family& fam);

}  // namespace cellsym
