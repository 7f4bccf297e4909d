#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellsym/bsymbol.hpp"
#include "cellsym/common.hpp"

namespace cellsym {

enum class DKind { Prime, DoublePrime };

// A type-D symbol: an even-length sequence (a_1, ..., a_{2m}) of naturals
// with both position-parity rows strictly increasing, 0 occurring at most
// once, and — when some value occurs exactly once — the largest such value
// sitting at an even position. Rank is sum(a_i) - m^2 + m. Symbols with a
// once-occurring value are Prime (the set Sym'_n); symbols whose every value
// occurs twice are DoublePrime (Sym''_n).
class DSymbol {
public:
    // Throws Error with one of OddLength, RowNotIncreasing, ZeroTwice,
    // ConditionDViolated, NegativeRank.
    explicit DSymbol(std::vector<std::uint32_t> entries);

    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    unsigned half() const noexcept;  // m, where the length is 2m
    std::uint64_t rank() const noexcept;
    DKind kind() const noexcept { return kind_; }
    std::string str() const { return sequence_str(entries_); }

    friend bool operator==(const DSymbol&, const DSymbol&) = default;
    friend auto operator<=>(const DSymbol&, const DSymbol&) = default;

private:
    std::vector<std::uint32_t> entries_;
    DKind kind_ = DKind::DoublePrime;
};

DSymbol validate_d(std::vector<std::uint32_t> entries);

// Descents of a Prime symbol's once-occurring entries, in the same
// row-interleaved reduced order as for type B. The subsequence has even
// length 2p (p >= 1), descents live in [1, 2p-1], and 2p-1 is never a
// descent (the largest single closes the even row). Throws NotPrime on a
// DoublePrime symbol.
DescentData descent_data_d(const DSymbol& sym);

bool is_special_d(const DSymbol& sym);

// Sym'_n (Prime) or Sym''_n (DoublePrime) in lexicographic order; n >= 2.
std::vector<DSymbol> enumerate_symbols_d(unsigned n, DKind kind,
                                         unsigned guard = limits::max_rank);

struct DFamily {
    std::vector<std::uint32_t> key;        // sorted entry multiset
    std::vector<DSymbol> members;          // lexicographic order
    unsigned p_c = 0;
    std::size_t special = 0;               // index into members
    std::vector<std::size_t> antispecial;  // members with |descents| = p_c - 1
};

// Families of Sym'_n, sorted by key. The antispecial threshold is p_c - 1:
// the printed threshold p_c would leave every family without antispecial
// members (the maximum of |S| on a Prime family is p - 1), so the off-by-one
// reading consistent with the type-B reduction below is used.
std::vector<DFamily> partition_families_d(unsigned n, unsigned guard = limits::max_rank);

// Appends the forced top entry 2p-1 to a permutation of 0..2p-2, giving the
// rank-p^2 Prime symbol with the same descent set. Inverse strips it. Both
// throw DomainViolation when the input is not the expected permutation.
DSymbol to_d_symbol(const BSymbol& sym, unsigned p);
BSymbol to_b_symbol(const DSymbol& sym, unsigned p);

}  // namespace cellsym
