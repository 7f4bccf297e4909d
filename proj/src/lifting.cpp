#include "cellsym/lifting.hpp"

#include <algorithm>
#include <numeric>

namespace cellsym {

namespace {

// All ways to pick `k` values out of `pool` (sorted); calls f(chosen).
template <class F>
void choose(const std::vector<std::uint32_t>& pool, std::size_t from, std::size_t k,
            std::vector<std::uint32_t>& cur, F&& f) {
    if (k == 0) {
        f(cur);
        return;
    }
    for (std::size_t i = from; i + k <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        choose(pool, i + 1, k - 1, cur, f);
        cur.pop_back();
    }
}

std::vector<std::uint32_t> interleave(const std::vector<std::uint32_t>& odd_row,
                                      const std::vector<std::uint32_t>& even_row) {
    std::vector<std::uint32_t> entries(odd_row.size() + even_row.size());
    for (std::size_t i = 0; i < odd_row.size(); ++i) entries[2 * i] = odd_row[i];
    for (std::size_t i = 0; i < even_row.size(); ++i) entries[2 * i + 1] = even_row[i];
    return entries;
}

std::vector<std::uint32_t> sorted_complement(const std::vector<std::uint32_t>& pool,
                                             const std::vector<std::uint32_t>& taken) {
    std::vector<std::uint32_t> rest;
    std::set_difference(pool.begin(), pool.end(), taken.begin(), taken.end(),
                        std::back_inserter(rest));
    return rest;
}

}  // namespace

std::vector<BSymbol> permutation_family(unsigned p, unsigned guard) {
    if (p > guard)
        throw Error("ResourceLimit", "p = " + std::to_string(p) + " exceeds guardrail " +
                                         std::to_string(guard));
    std::vector<std::uint32_t> values(2 * p + 1);
    std::iota(values.begin(), values.end(), 0);
    // Any p-subset as the even row gives a symbol: both rows are sorted sets
    // of distinct values and the sum is fixed.
    std::vector<BSymbol> out;
    std::vector<std::uint32_t> even_row;
    choose(values, 0, p, even_row, [&](const std::vector<std::uint32_t>& er) {
        out.emplace_back(interleave(sorted_complement(values, er), er));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BSymbol> doubled_family(unsigned p, unsigned r, unsigned guard) {
    if (p > guard)
        throw Error("ResourceLimit", "p = " + std::to_string(p) + " exceeds guardrail " +
                                         std::to_string(guard));
    if (p == 0 || r > 2 * p - 1)
        throw Error("BadR", "r = " + std::to_string(r) + " outside [0, 2p-1]");
    if (r == 0) return permutation_family(p - 1, guard);

    std::vector<std::uint32_t> values(2 * p);
    std::iota(values.begin(), values.end(), 0);
    std::vector<std::uint32_t> others;  // values except r; r itself joins both rows
    for (auto v : values)
        if (v != r) others.push_back(v);

    std::vector<BSymbol> out;
    std::vector<std::uint32_t> picked;
    choose(others, 0, p - 1, picked, [&](const std::vector<std::uint32_t>& pk) {
        std::vector<std::uint32_t> even_row(pk);
        even_row.push_back(r);
        std::sort(even_row.begin(), even_row.end());
        std::vector<std::uint32_t> odd_row = sorted_complement(values, pk);  // contains r
        out.emplace_back(interleave(odd_row, even_row));
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool in_doubled_family(const BSymbol& sym, unsigned p, unsigned r) {
    if (sym.entries().size() != 2 * std::size_t(p) + 1) return false;
    std::vector<std::uint32_t> sorted(sym.entries());
    std::sort(sorted.begin(), sorted.end());
    std::size_t idx = 0;
    for (std::uint32_t v = 0; v < 2 * p; ++v) {
        if (idx >= sorted.size() || sorted[idx] != v) return false;
        ++idx;
        if (v == r) {
            if (idx >= sorted.size() || sorted[idx] != v) return false;
            ++idx;
        }
    }
    return idx == sorted.size();
}

}  // namespace

std::pair<BSymbol, BSymbol> lift_candidates(const BSymbol& source, unsigned p, unsigned r) {
    if (p == 0 || r == 0 || r > 2 * p - 1)
        throw Error("BadR", "r = " + std::to_string(r) + " outside [1, 2p-1]");
    if (!in_doubled_family(source, p, r))
        throw Error("NotInApR", source.str() + " is not over {0..2p-1} with " +
                                    std::to_string(r) + " doubled");

    const auto& e = source.entries();
    std::vector<std::size_t> copies;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == r) copies.push_back(i);

    auto lift_at = [&](std::size_t raised) {
        std::vector<std::uint32_t> out(e);
        for (auto& v : out)
            if (v > r) ++v;
        out[raised] = r + 1;
        return BSymbol(std::move(out));
    };
    return {lift_at(copies[0]), lift_at(copies[1])};
}

LiftPair lift_pair(const BSymbol& source, unsigned p, unsigned r) {
    auto [a, b] = lift_candidates(source, p, r);

    const std::size_t s = descent_data(source).descents.size();
    const std::size_t sa = descent_data(a).descents.size();
    const std::size_t sb = descent_data(b).descents.size();

    LiftPair pair{source, a, b, p, r};
    if (sa == s && sb == s + 1) {
        return pair;
    } else if (sb == s && sa == s + 1) {
        pair.primed = std::move(b);
        pair.double_primed = std::move(a);
        return pair;
    }
    throw Error("AmbiguousLabeling",
                "lift of " + source.str() + " gives descent counts {" + std::to_string(sa) +
                    "," + std::to_string(sb) + "}, not {" + std::to_string(s) + "," +
                    std::to_string(s + 1) + "}");
}

LiftR0Report lift_pair_r0(const BSymbol& source, unsigned p) {
    if (p == 0) throw Error("BadR", "p must be positive for the r = 0 lift");
    std::vector<std::uint32_t> sorted(source.entries());
    std::sort(sorted.begin(), sorted.end());
    bool in_family = sorted.size() == 2 * std::size_t(p) - 1;
    for (std::size_t i = 0; in_family && i < sorted.size(); ++i) in_family = sorted[i] == i;
    if (!in_family)
        throw Error("NotInApR",
                    source.str() + " is not a permutation of 0.." + std::to_string(2 * p - 2));

    auto make = [&](std::uint32_t first, std::uint32_t second) {
        LiftCandidate cand;
        cand.entries.push_back(first);
        cand.entries.push_back(second);
        for (auto v : source.entries()) cand.entries.push_back(v + 1);
        std::int64_t sum = 0;
        for (auto v : cand.entries) sum += v;
        cand.rank = sum - std::int64_t(p) * p;  // length 2p+1, so m = p
        try {
            BSymbol checked{cand.entries};
            cand.valid = true;
        } catch (const Error& err) {
            cand.valid = false;
            cand.error_code = err.code();
        }
        return cand;
    };
    return LiftR0Report{make(0, 1), make(1, 0)};
}

}  // namespace cellsym
