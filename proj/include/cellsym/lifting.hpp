#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellsym/bsymbol.hpp"
#include "cellsym/common.hpp"

namespace cellsym {

// The permutation family: all symbols whose entries are exactly 0..2p, i.e.
// the rank p^2+p family with binomial(2p+1, p) members. Lexicographic order.
std::vector<BSymbol> permutation_family(unsigned p, unsigned guard = limits::max_p);

// The doubled-entry variants: for r in [1, 2p-1], all symbols over the
// multiset {0,...,2p-1} with r doubled (rank p^2-p+r); for r = 0, the
// permutation family of 0..2p-2. Throws BadR outside [0, 2p-1].
std::vector<BSymbol> doubled_family(unsigned p, unsigned r, unsigned guard = limits::max_p);

// Lifting a doubled-family symbol into the permutation family by raising one
// copy of r to r+1 and shifting every entry in {r+1,...,2p-1} up by one.
// `primed` is the candidate preserving |S|, `double_primed` the one raising
// it by exactly one; labels are assigned by computing both descent sets.
struct LiftPair {
    BSymbol source;
    BSymbol primed;
    BSymbol double_primed;
    unsigned p = 0;
    unsigned r = 0;
};

// The unlabeled candidate pair (first raises the earlier copy of r).
// Throws NotInApR / BadR.
std::pair<BSymbol, BSymbol> lift_candidates(const BSymbol& source, unsigned p, unsigned r);

// Throws NotInApR when the source is not in the doubled family, and
// AmbiguousLabeling when neither assignment of labels gives the
// (|S|, |S|+1) bookkeeping — this happens exactly on sources whose single
// entries do not alternate rows, and is surfaced rather than hidden.
LiftPair lift_pair(const BSymbol& source, unsigned p, unsigned r);

// The r = 0 lift prepends (0,1) or (1,0) and shifts the rest up. The printed
// recipe does not in general produce valid symbols of the stated rank, so
// this returns verdicts instead of asserting validity: each candidate is
// tagged valid/invalid (with the failing check) and carries its computed
// rank, which is p^2-p+1 rather than p^2-p.
struct LiftCandidate {
    std::vector<std::uint32_t> entries;
    bool valid = false;
    std::string error_code;  // empty when valid
    std::int64_t rank = 0;   // entry sum minus p^2
};

struct LiftR0Report {
    LiftCandidate zero_one;  // (0, 1, a_1+1, ...)
    LiftCandidate one_zero;  // (1, 0, a_1+1, ...)
};

LiftR0Report lift_pair_r0(const BSymbol& source, unsigned p);

}  // namespace cellsym
