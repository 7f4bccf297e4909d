#include "cellsym/dsymbol.hpp"

#include <algorithm>
#include <map>

namespace cellsym {

namespace {

unsigned first_violation(const std::vector<std::uint32_t>& row) {
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i]) return static_cast<unsigned>(i);
    return 0;
}

std::vector<std::uint32_t> interleave(const std::vector<std::uint32_t>& odd_row,
                                      const std::vector<std::uint32_t>& even_row) {
    std::vector<std::uint32_t> entries(odd_row.size() + even_row.size());
    for (std::size_t i = 0; i < odd_row.size(); ++i) entries[2 * i] = odd_row[i];
    for (std::size_t i = 0; i < even_row.size(); ++i) entries[2 * i + 1] = even_row[i];
    return entries;
}

// Classifies a candidate entry sequence: Prime, DoublePrime, or invalid
// (largest once-occurring value at an odd position).
enum class DClass { Prime, DoublePrime, ConditionDViolated };

DClass classify(const std::vector<std::uint32_t>& entries) {
    std::vector<std::uint32_t> sorted(entries);
    std::sort(sorted.begin(), sorted.end());
    std::uint32_t largest_single = 0;
    std::size_t largest_pos = 0;
    bool any_single = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), entries[i]);
        if (hi - lo != 1) continue;
        if (!any_single || entries[i] > largest_single) {
            largest_single = entries[i];
            largest_pos = i + 1;  // 1-based
        }
        any_single = true;
    }
    if (!any_single) return DClass::DoublePrime;
    return largest_pos % 2 == 0 ? DClass::Prime : DClass::ConditionDViolated;
}

DKind check_entries(const std::vector<std::uint32_t>& entries) {
    if (entries.size() % 2 != 0 || entries.empty())
        throw Error("OddLength", "type-D symbol needs even length >= 2, got " +
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
    if (sum + m < m * m)
        throw Error("NegativeRank", "entry sum " + std::to_string(sum) +
                                        " below m^2 - m = " + std::to_string(m * m - m));

    switch (classify(entries)) {
        case DClass::Prime: return DKind::Prime;
        case DClass::DoublePrime: return DKind::DoublePrime;
        default:
            throw Error("ConditionDViolated",
                        "largest once-occurring value sits at an odd position");
    }
}

}  // namespace

DSymbol::DSymbol(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    kind_ = check_entries(entries_);
}

unsigned DSymbol::half() const noexcept {
    return static_cast<unsigned>(entries_.size() / 2);
}

std::uint64_t DSymbol::rank() const noexcept {
    std::uint64_t sum = 0;
    for (auto a : entries_) sum += a;
    const std::uint64_t m = half();
    return sum + m - m * m;
}

DSymbol validate_d(std::vector<std::uint32_t> entries) {
    return DSymbol(std::move(entries));
}

DescentData descent_data_d(const DSymbol& sym) {
    if (sym.kind() != DKind::Prime)
        throw Error("NotPrime", "descent data is defined for Prime symbols only");
    const auto& e = sym.entries();
    std::vector<std::uint32_t> sorted(e);
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::uint32_t> odd_singles, even_singles;
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), e[i]);
        if (hi - lo > 2) throw Error("InternalInvariant", "entry multiplicity above two");
        if (hi - lo == 1) (i % 2 == 0 ? odd_singles : even_singles).push_back(e[i]);
    }
    if (odd_singles.size() != even_singles.size() || odd_singles.empty())
        throw Error("InternalInvariant", "single entries do not form a type-D shape");

    DescentData d;
    d.singles = interleave(odd_singles, even_singles);
    d.p = static_cast<unsigned>(even_singles.size());
    for (std::size_t j = 1; j < d.singles.size(); ++j)
        if (d.singles[j - 1] > d.singles[j]) d.descents.push_back(static_cast<unsigned>(j));
    return d;
}

bool is_special_d(const DSymbol& sym) { return descent_data_d(sym).descents.empty(); }

namespace {

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

}  // namespace

std::vector<DSymbol> enumerate_symbols_d(unsigned n, DKind kind, unsigned guard) {
    if (n < 2)
        throw Error("DomainViolation", "type-D enumeration needs rank n >= 2");
    if (n > guard)
        throw Error("ResourceLimit", "rank " + std::to_string(n) +
                                         " exceeds guardrail " + std::to_string(guard));
    std::vector<DSymbol> out;
    std::vector<std::uint32_t> scratch;
    // The minimal rank at length 2m is m (rows 0..m-1 and 1..m), so m <= n.
    for (unsigned m = 1; m <= n; ++m) {
        const std::uint64_t total = n + std::uint64_t(m) * m - m;
        const std::uint64_t min_row = std::uint64_t(m) * (m - 1) / 2;
        if (2 * min_row > total) continue;
        for (std::uint64_t se = min_row; se + min_row <= total; ++se) {
            std::vector<std::vector<std::uint32_t>> evens;
            collect_rows(m, se, 0, scratch, evens);
            if (evens.empty()) continue;
            std::vector<std::vector<std::uint32_t>> odds;
            collect_rows(m, total - se, 0, scratch, odds);
            for (const auto& o : odds)
                for (const auto& ev : evens) {
                    if (o[0] == 0 && ev[0] == 0) continue;  // 0 at most once
                    auto entries = interleave(o, ev);
                    switch (classify(entries)) {
                        case DClass::Prime:
                            if (kind == DKind::Prime) out.emplace_back(std::move(entries));
                            break;
                        case DClass::DoublePrime:
                            if (kind == DKind::DoublePrime) out.emplace_back(std::move(entries));
                            break;
                        default:
                            break;  // fails the even-position condition: not a symbol
                    }
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void finalize_family(DFamily& fam) {
    bool have_p = false;
    std::size_t specials = 0;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const DescentData d = descent_data_d(fam.members[i]);
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
        if (d.descents.size() + 1 == fam.p_c) fam.antispecial.push_back(i);
    }
    if (specials != 1)
        throw Error("InternalInvariant", "family " + sequence_str(fam.key) + " has " +
                                             std::to_string(specials) + " special members");
    if (fam.antispecial.empty())
        throw Error("InternalInvariant",
                    "family " + sequence_str(fam.key) + " has no antispecial members");
}

}  // namespace

std::vector<DFamily> partition_families_d(unsigned n, unsigned guard) {
    auto symbols = enumerate_symbols_d(n, DKind::Prime, guard);
    std::map<std::vector<std::uint32_t>, DFamily> grouped;
    for (auto& s : symbols) {
        std::vector<std::uint32_t> key = s.entries();
        std::sort(key.begin(), key.end());
        grouped[std::move(key)].members.push_back(std::move(s));
    }
    std::vector<DFamily> out;
    out.reserve(grouped.size());
    for (auto& [key, fam] : grouped) {
        fam.key = key;
        finalize_family(fam);
        out.push_back(std::move(fam));
    }
    return out;
}

DSymbol to_d_symbol(const BSymbol& sym, unsigned p) {
    if (p == 0) throw Error("DomainViolation", "p must be positive");
    const auto& e = sym.entries();
    std::vector<std::uint32_t> sorted(e);
    std::sort(sorted.begin(), sorted.end());
    if (e.size() != 2 * std::size_t(p) - 1 ||
        [&] {
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != i) return true;
            return false;
        }())
        throw Error("DomainViolation",
                    "input is not a permutation of 0.." + std::to_string(2 * p - 2));
    std::vector<std::uint32_t> entries = e;
    entries.push_back(2 * p - 1);
    return DSymbol(std::move(entries));
}

BSymbol to_b_symbol(const DSymbol& sym, unsigned p) {
    if (p == 0) throw Error("DomainViolation", "p must be positive");
    const auto& e = sym.entries();
    std::vector<std::uint32_t> sorted(e);
    std::sort(sorted.begin(), sorted.end());
    if (e.size() != 2 * std::size_t(p) ||
        [&] {
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != i) return true;
            return false;
        }())
        throw Error("DomainViolation",
                    "input is not a permutation of 0.." + std::to_string(2 * p - 1));
    if (e.back() != 2 * p - 1)
        throw Error("InternalInvariant", "permutation symbol must end in its top value");
    std::vector<std::uint32_t> entries(e.begin(), e.end() - 1);
    return BSymbol(std::move(entries));
}

}  // namespace cellsym
