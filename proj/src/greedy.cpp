#include "apcover/greedy.hpp"

#include <algorithm>
#include <limits>

namespace apcover {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

void require_k(int k) {
    if (k < 3) throw std::invalid_argument("progression length k must be at least 3");
}

} // namespace

std::uint64_t stanley_next(const NaturalSequence& seq, int k) {
    require_k(k);
    if (seq.empty()) throw std::invalid_argument("stanley_next requires a nonempty sequence");
    std::uint64_t a = seq.back();
    while (true) {
        if (a == kU64Max) throw std::overflow_error("next greedy element exceeds the 64-bit domain");
        ++a;
        if (!extends_to_kap(seq, a, k).has_value()) return a;
    }
}

NaturalSequence stanley_sequence(const NaturalSequence& seed, int k, Limit limit) {
    require_k(k);
    if (seed.empty()) throw std::invalid_argument("seed must be nonempty");
    if (!is_k_ap_free(seed, k)) {
        throw std::invalid_argument("seed contains a k-term arithmetic progression");
    }
    if (limit.kind == Limit::Kind::TermCount && limit.bound < seed.size()) {
        throw std::invalid_argument("term-count limit smaller than the seed");
    }

    std::vector<std::uint64_t> members(seed.begin(), seed.end());
    detail::BitSieve sieve(seed.back() + 1);
    for (std::uint64_t x : members) sieve.set(x);

    auto done = [&]() {
        return limit.kind == Limit::Kind::TermCount && members.size() >= limit.bound;
    };

    std::uint64_t cand = members.back();
    while (!done()) {
        if (cand == kU64Max) throw std::overflow_error("next greedy element exceeds the 64-bit domain");
        ++cand;
        if (limit.kind == Limit::Kind::MaxValue && cand > limit.bound) break;
        if (cand >= sieve.capacity()) sieve.resize(std::max(cand + 1, 2 * sieve.capacity()));
        if (!detail::scan_witness(members, sieve, cand, k).has_value()) {
            members.push_back(cand);
            sieve.set(cand);
        }
    }
    return NaturalSequence::from_sorted(std::move(members));
}

bool remark1_member_rule(const NaturalSequence& seq, std::uint64_t n) {
    // n = 2b - a with a, b < n forces a = 2b - n and b >= ceil(n/2).
    const auto& v = seq.values();
    auto it = std::lower_bound(v.begin(), v.end(), (n + 1) / 2);
    for (; it != v.end(); ++it) {
        const std::uint64_t b = *it;
        if (b >= n) break;
        if (seq.contains(2 * b - n)) return false;
    }
    return true;
}

bool IntervalChain::contains(std::uint64_t n) const noexcept {
    for (const Interval& iv : intervals) {
        if (n < iv.lo) return false;
        if (n <= iv.hi) return true;
    }
    return false;
}

GeneralizedGreedyResult generalized_greedy(std::uint64_t a0, int k,
                                           std::uint64_t max_value) {
    if (k < 2) throw std::invalid_argument("generalized greedy requires k >= 2");
    GeneralizedGreedyResult result;
    result.structure_guaranteed = (a0 >= 3 && k >= 4);
    if (max_value < a0) return result;

    const std::uint64_t cap = max_value;
    std::vector<std::uint8_t> excluded(static_cast<std::size_t>(cap) + 1, 0);
    std::vector<std::uint64_t> members;

    // Marks every value k*b - a <= cap formed with the freshly added element m
    // and any element so far (m itself included). Values at or below m are
    // already decided, so both families are clipped to (m, cap].
    auto mark_with = [&](std::uint64_t m) {
        const u128 km = static_cast<u128>(k) * m;
        // b = m: values k*m - a over a <= m, needing a >= k*m - cap.
        const std::uint64_t a_lo = km > cap ? static_cast<std::uint64_t>(km - cap) : 0;
        for (auto it = members.rbegin(); it != members.rend() && *it >= a_lo; ++it) {
            excluded[static_cast<std::size_t>(km - *it)] = 1;
        }
        // a = m: values k*b - m over earlier b, in range iff
        // b > 2m/k (value exceeds m) and k*b <= cap + m. The start index is a
        // coarse cut; the loop re-checks exactly.
        const std::uint64_t b_lo = 2 * m / static_cast<std::uint64_t>(k);
        auto it = std::lower_bound(members.begin(), members.end(), b_lo);
        while (it != members.end() && *it < m) {
            const u128 v = static_cast<u128>(k) * *it;
            if (v > static_cast<u128>(cap) + m) break;
            if (v > m) excluded[static_cast<std::size_t>(v - m)] = 1;
            ++it;
        }
    };

    members.push_back(a0);
    mark_with(a0);
    for (std::uint64_t n = a0 + 1; n <= cap; ++n) {
        if (!excluded[static_cast<std::size_t>(n)]) {
            members.push_back(n);
            mark_with(n);
        }
    }
    result.sequence = NaturalSequence::from_sorted(std::move(members));
    return result;
}

namespace {

void require_chain_params(std::uint64_t a0, int k) {
    if (a0 < 3) throw std::invalid_argument("interval chain requires a0 >= 3");
    if (k < 4) throw std::invalid_argument("interval chain requires k >= 4");
}

} // namespace

IntervalChain theorem4_intervals(std::uint64_t a0, int k, std::size_t count) {
    require_chain_params(a0, k);
    if (count < 1) throw std::invalid_argument("interval count must be at least 1");
    IntervalChain chain;
    chain.a0 = a0;
    chain.k = k;
    u128 a = a0;
    u128 b = static_cast<u128>(k) * a0 / 2;
    for (std::size_t l = 0; l < count; ++l) {
        if (a > kU64Max || b > kU64Max) {
            throw std::overflow_error("interval endpoint exceeds the 64-bit domain");
        }
        chain.intervals.push_back({static_cast<std::uint64_t>(a),
                                   static_cast<std::uint64_t>(b)});
        a = static_cast<u128>(k) * b - a0 + 1;
        b = static_cast<u128>(k) * a / 2;
    }
    return chain;
}

bool theorem4_member(std::uint64_t n, std::uint64_t a0, int k) {
    require_chain_params(a0, k);
    u128 a = a0;
    u128 b = static_cast<u128>(k) * a0 / 2;
    while (true) {
        if (n < a) return false;
        if (n <= b) return true;
        a = static_cast<u128>(k) * b - a0 + 1;
        b = static_cast<u128>(k) * a / 2;
    }
}

} // namespace apcover
