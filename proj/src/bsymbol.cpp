#include "cellsym/bsymbol.hpp"

#include <algorithm>
#include <map>

namespace cellsym {

namespace {

// First 1-based index j where row[j-1] >= row[j], or 0 if strictly increasing.
unsigned first_violation(const std::vector<std::uint32_t>& row) {
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i]) return static_cast<unsigned>(i);
    return 0;
}

void check_entries(const std::vector<std::uint32_t>& entries) {
    if (entries.size() % 2 == 0)
        throw Error("EvenLength", "type-B symbol needs odd length, got " +
                                      std::to_string(entries.size()));
    std::vector<std::uint32_t> odd_row, even_row;
    for (std::size_t i = 0; i < entries.size(); ++i)
        (i % 2 == 0 ? odd_row : even_row).push_back(entries[i]);
    if (unsigned j = first_violation(odd_row))
        throw Error("RowNotIncreasing",
                    "odd row not strictly increasing at position " + std::to_string(j));
    if (unsigned j = first_violation(even_row))
        throw Error("RowNotIncreasing",
                    "even row not strictly increasing at position " + std::to_string(j));
    if (std::count(entries.begin(), entries.end(), 0u) > 1)
        throw Error("ZeroTwice", "the value 0 occurs more than once");

    const std::uint64_t m = entries.size() / 2;
    std::uint64_t sum = 0;
    for (auto a : entries) sum += a;
    if (sum < m * m)
        throw Error("NegativeRank", "entry sum " + std::to_string(sum) +
                                        " below m^2 = " + std::to_string(m * m));
}

// All strictly increasing sequences of `len` naturals >= lo with the given sum.
void collect_rows(unsigned len, std::uint64_t sum, std::uint32_t lo,
                  std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    const std::uint64_t tail = std::uint64_t(len) * (len - 1) / 2;
    if (std::uint64_t(lo) * len + tail > sum) return;
    const auto hi = static_cast<std::uint32_t>((sum - tail) / len);
    for (std::uint32_t a = lo; a <= hi; ++a) {
        cur.push_back(a);
        collect_rows(len - 1, sum - a, a + 1, cur, out);
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

}  // namespace

BSymbol::BSymbol(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    check_entries(entries_);
}

unsigned BSymbol::half() const noexcept {
    return static_cast<unsigned>(entries_.size() / 2);
}

std::uint64_t BSymbol::rank() const noexcept {
    std::uint64_t sum = 0;
    for (auto a : entries_) sum += a;
    const std::uint64_t m = half();
    return sum - m * m;
}

BSymbol validate_b(std::vector<std::uint32_t> entries) {
    return BSymbol(std::move(entries));
}

DescentData descent_data(const BSymbol& sym) {
    const auto& e = sym.entries();
    std::vector<std::uint32_t> sorted(e);
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::uint32_t> odd_singles, even_singles;
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), e[i]);
        if (hi - lo > 2) throw Error("InternalInvariant", "entry multiplicity above two");
        if (hi - lo == 1) (i % 2 == 0 ? odd_singles : even_singles).push_back(e[i]);
    }
    if (odd_singles.size() != even_singles.size() + 1)
        throw Error("InternalInvariant", "single entries do not form a symbol shape");

    DescentData d;
    d.singles = interleave(odd_singles, even_singles);
    d.p = static_cast<unsigned>(even_singles.size());
    for (std::size_t j = 1; j < d.singles.size(); ++j)
        if (d.singles[j - 1] > d.singles[j]) d.descents.push_back(static_cast<unsigned>(j));
    return d;
}

bool is_special(const BSymbol& sym) { return descent_data(sym).descents.empty(); }

std::vector<BSymbol> enumerate_symbols(unsigned n, unsigned guard) {
    if (n > guard)
        throw Error("ResourceLimit", "rank " + std::to_string(n) +
                                         " exceeds guardrail " + std::to_string(guard));
    std::vector<BSymbol> out;
    std::vector<std::uint32_t> scratch;
    // The minimal rank at length 2m+1 is m (rows 0..m and 1..m), so m <= n.
    for (unsigned m = 0; m <= n; ++m) {
        const std::uint64_t total = n + std::uint64_t(m) * m;
        const std::uint64_t min_even = std::uint64_t(m) * (m - (m ? 1 : 0)) / 2;
        const std::uint64_t min_odd = std::uint64_t(m) * (m + 1) / 2;
        if (min_even + min_odd > total) continue;
        for (std::uint64_t se = min_even; se + min_odd <= total; ++se) {
            std::vector<std::vector<std::uint32_t>> evens;
            collect_rows(m, se, 0, scratch, evens);
            if (evens.empty()) continue;
            std::vector<std::vector<std::uint32_t>> odds;
            collect_rows(m + 1, total - se, 0, scratch, odds);
            for (const auto& o : odds)
                for (const auto& ev : evens) {
                    if (m > 0 && o[0] == 0 && ev[0] == 0) continue;  // 0 at most once
                    out.emplace_back(interleave(o, ev));
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void finalize_family(Family& fam) {
    bool have_p = false;
    std::size_t specials = 0;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const DescentData d = descent_data(fam.members[i]);
        if (!have_p) {
            fam.p_c = d.p;
            have_p = true;
        } else if (d.p != fam.p_c) {
            throw Error("InternalInvariant",
                        "descent parameter not constant on family " + sequence_str(fam.key));
        }
        if (d.descents.empty()) {
            fam.special = i;
            ++specials;
        }
        if (d.descents.size() == fam.p_c) fam.antispecial.push_back(i);
    }
    if (specials != 1)
        throw Error("InternalInvariant", "family " + sequence_str(fam.key) + " has " +
                                             std::to_string(specials) + " special members");
    if (fam.antispecial.empty())
        throw Error("InternalInvariant",
                    "family " + sequence_str(fam.key) + " has no antispecial members");
}

}  // namespace

std::vector<Family> partition_families(unsigned n, unsigned guard) {
    auto symbols = enumerate_symbols(n, guard);
    std::map<std::vector<std::uint32_t>, Family> grouped;
    for (auto& s : symbols) {
        std::vector<std::uint32_t> key = s.entries();
        std::sort(key.begin(), key.end());
        grouped[std::move(key)].members.push_back(std::move(s));
    }
    std::vector<Family> out;
    out.reserve(grouped.size());
    for (auto& [key, fam] : grouped) {
        fam.key = key;
        finalize_family(fam);
        out.push_back(std::move(fam));
    }
    return out;
}

std::size_t antispecial_count(const Family& fam) { return fam.antispecial.size(); }

}  // namespace cellsym
