#pragma once

#include <cstdint>
#include <vector>

#include "cellsym/bsymbol.hpp"
#include "cellsym/common.hpp"

namespace cellsym {

// Exact binomial coefficient; throws Overflow if the result (or an
// intermediate) would not fit in 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

// Catalan number (2t)! / (t!(t+1)!), exact; throws Overflow for t > 30.
std::uint64_t catalan(unsigned t);

// A standard two-row tableau of rectangular shape: top and bottom rows
// strictly increasing, with the column condition top[k] < bottom[k].
struct TwoRowTableau {
    std::vector<std::uint32_t> top;
    std::vector<std::uint32_t> bottom;

    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

// All two-row tableaux filling the given set of distinct values (even size);
// there are catalan(|ground|/2) of them. Throws OddGround on odd size.
std::vector<TwoRowTableau> enumerate_tableaux(std::vector<std::uint32_t> ground);

// Builds the antispecial permutation symbol
//   (j_1, i_1, ..., j_t, i_t, 2t, l_1, k_1, ..., l_{p-t}, k_{p-t})
// from a tableau t1 on {0..2t-1} (rows i/j) and a tableau t2 on {2t+1..2p}
// (rows k/l). The result has descent set {1,3,...,2t-1} u {2t+2,...,2p} of
// size exactly p. Throws GroundMismatch when the tableaux do not fill those
// intervals.
BSymbol build_antispecial(const TwoRowTableau& t1, unsigned t, const TwoRowTableau& t2,
                          unsigned p);

// The antispecial members of the permutation family of 0..2p obtained by the
// tableau construction over all splits t in [0, p]; sorted, pairwise
// distinct, of cardinality sum_t Cat_t * Cat_{p-t} = Cat_{p+1}.
std::vector<BSymbol> antispecial_via_tableaux(unsigned p, unsigned guard = limits::max_p);

// Segner's identity Cat_{p+1} = sum_{t=0}^{p} Cat_t * Cat_{p-t}.
bool segner_identity_holds(unsigned p);

}  // namespace cellsym
