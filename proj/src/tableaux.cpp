#include "cellsym/tableaux.hpp"

#include <algorithm>

namespace cellsym {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        const unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i);
        if (next > ~static_cast<std::uint64_t>(0))
            throw Error("Overflow", "binomial(" + std::to_string(n) + "," +
                                        std::to_string(k) + ") exceeds 64 bits");
        r = static_cast<std::uint64_t>(next / i);  // exact division at each step
    }
    return r;
}

std::uint64_t catalan(unsigned t) {
    if (t > limits::max_catalan_arg)
        throw Error("Overflow", "catalan(" + std::to_string(t) + ") beyond guardrail t <= " +
                                    std::to_string(limits::max_catalan_arg));
    return binomial(2 * t, t) / (t + 1);
}

namespace {

void choose_top(const std::vector<std::uint32_t>& ground, std::size_t from, std::size_t left,
                std::vector<std::uint32_t>& top, std::vector<TwoRowTableau>& out) {
    if (left == 0) {
        TwoRowTableau tab;
        tab.top = top;
        std::set_difference(ground.begin(), ground.end(), top.begin(), top.end(),
                            std::back_inserter(tab.bottom));
        for (std::size_t k = 0; k < tab.top.size(); ++k)
            if (tab.top[k] >= tab.bottom[k]) return;  // column condition
        out.push_back(std::move(tab));
        return;
    }
    if (ground.size() - from < left) return;
    for (std::size_t i = from; i + left <= ground.size(); ++i) {
        top.push_back(ground[i]);
        choose_top(ground, i + 1, left - 1, top, out);
        top.pop_back();
    }
}

}  // namespace

std::vector<TwoRowTableau> enumerate_tableaux(std::vector<std::uint32_t> ground) {
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw Error("DomainViolation", "ground values must be distinct");
    if (ground.size() % 2 != 0)
        throw Error("OddGround", "ground has odd size " + std::to_string(ground.size()));
    std::vector<TwoRowTableau> out;
    std::vector<std::uint32_t> top;
    choose_top(ground, 0, ground.size() / 2, top, out);
    return out;
}

namespace {

bool fills_interval(const TwoRowTableau& tab, std::uint32_t lo, std::uint32_t hi) {
    // interval [lo, hi); empty when lo >= hi
    std::vector<std::uint32_t> all(tab.top);
    all.insert(all.end(), tab.bottom.begin(), tab.bottom.end());
    std::sort(all.begin(), all.end());
    if (all.size() != (hi > lo ? hi - lo : 0)) return false;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != lo + i) return false;
    return true;
}

}  // namespace

BSymbol build_antispecial(const TwoRowTableau& t1, unsigned t, const TwoRowTableau& t2,
                          unsigned p) {
    if (t > p) throw Error("GroundMismatch", "split t exceeds p");
    if (t1.top.size() != t || t1.bottom.size() != t || !fills_interval(t1, 0, 2 * t))
        throw Error("GroundMismatch", "first tableau must fill 0..2t-1");
    if (t2.top.size() != p - t || t2.bottom.size() != p - t ||
        !fills_interval(t2, 2 * t + 1, 2 * p + 1))
        throw Error("GroundMismatch", "second tableau must fill 2t+1..2p");

    std::vector<std::uint32_t> entries;
    entries.reserve(2 * p + 1);
    for (unsigned k = 0; k < t; ++k) {
        entries.push_back(t1.bottom[k]);
        entries.push_back(t1.top[k]);
    }
    entries.push_back(2 * t);
    for (unsigned k = 0; k < p - t; ++k) {
        entries.push_back(t2.bottom[k]);
        entries.push_back(t2.top[k]);
    }
    return BSymbol(std::move(entries));
}

std::vector<BSymbol> antispecial_via_tableaux(unsigned p, unsigned guard) {
    if (p > guard)
        throw Error("ResourceLimit", "p = " + std::to_string(p) + " exceeds guardrail " +
                                         std::to_string(guard));
    std::vector<BSymbol> out;
    for (unsigned t = 0; t <= p; ++t) {
        std::vector<std::uint32_t> g1, g2;
        for (std::uint32_t v = 0; v < 2 * t; ++v) g1.push_back(v);
        for (std::uint32_t v = 2 * t + 1; v <= 2 * p; ++v) g2.push_back(v);
        const auto tabs1 = enumerate_tableaux(std::move(g1));
        const auto tabs2 = enumerate_tableaux(std::move(g2));
        for (const auto& a : tabs1)
            for (const auto& b : tabs2) out.push_back(build_antispecial(a, t, b, p));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error("InternalInvariant", "tableau construction produced duplicates");
    return out;
}

bool segner_identity_holds(unsigned p) {
    std::uint64_t sum = 0;
    for (unsigned t = 0; t <= p; ++t) {
        const std::uint64_t term = catalan(t) * catalan(p - t);
        if (term != 0 && sum > ~static_cast<std::uint64_t>(0) - term)
            throw Error("Overflow", "convolution exceeds 64 bits");
        sum += term;
    }
    return sum == catalan(p + 1);
}

}  // namespace cellsym
