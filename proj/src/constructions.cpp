#include "apcover/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace apcover {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kEnumerationCap = 1'000'000'000;

// One populated level of the thm1 set. Level 3 has n_k = 2^34, so its run
// extends past the 64-bit ceiling (hi saturates) and its multiples of
// 2^{2^34} start far beyond it (has_multiples = false).
struct Thm1Level {
    std::uint64_t nk;
    std::uint64_t run_lo, run_hi;  // [n_k + 1, n_k + 2^{n_k+1}]
    bool has_multiples;
    std::uint64_t step;            // 2^{n_k}
    std::uint64_t m_hi;            // largest multiplier, 2^{n_k+1} + 2
};

constexpr std::array<Thm1Level, 3> kThm1Levels = {{
    {1, 2, 5, true, 2, 6},
    {16, 17, 16 + (std::uint64_t{1} << 17), true, std::uint64_t{1} << 16,
     (std::uint64_t{1} << 17) + 2},
    {std::uint64_t{1} << 34, (std::uint64_t{1} << 34) + 1, kU64Max, false, 0, 0},
}};

void require_enumeration_cap(std::uint64_t hi) {
    if (hi > kEnumerationCap) {
        throw std::domain_error("enumeration bound exceeded (cap is 10^9)");
    }
}

} // namespace

std::uint64_t thm1_nk(int k) {
    if (k < 1) throw std::invalid_argument("level index k must be positive");
    if (k > 3) throw std::overflow_error("n_k exceeds the 64-bit domain for k >= 4");
    return kThm1Levels[static_cast<std::size_t>(k - 1)].nk;
}

bool thm1_member(std::uint64_t n) {
    for (const Thm1Level& lvl : kThm1Levels) {
        if (n < lvl.run_lo) return false;  // levels are ordered and disjoint
        if (n <= lvl.run_hi) return true;
        if (lvl.has_multiples && n % lvl.step == 0) {
            const std::uint64_t m = n / lvl.step;
            if (m >= 3 && m <= lvl.m_hi) return true;
        }
    }
    return false;
}

CoverPair thm1_witness(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("thm1_witness requires n >= 4");
    // Pick the level with n_k + 3 <= n < n_{k+1} + 3.
    const Thm1Level* lvl = &kThm1Levels[0];
    for (const Thm1Level& cand : kThm1Levels) {
        if (n >= cand.nk + 3) lvl = &cand;
    }
    if (n <= lvl->run_hi) {
        // n lies in the run: the adjacent pair works.
        return {n - 2, n - 1};
    }
    // Rounded half: c is the smallest multiple of 2^{n_k} with 2c >= n.
    const std::uint64_t half_step = lvl->step;      // 2^{n_k}
    const std::uint64_t full_step = 2 * half_step;  // 2^{n_k+1}
    const std::uint64_t c = half_step * (n / full_step + (n % full_step != 0));
    const std::uint64_t d = static_cast<std::uint64_t>(2 * static_cast<u128>(c) - n);
    if (d > lvl->nk) {
        return {d, c};  // d lands in the run, c among the multiples
    }
    return {d + full_step, c + half_step};
}

std::uint64_t thm1_count(std::uint64_t n) {
    std::uint64_t total = 0;
    for (const Thm1Level& lvl : kThm1Levels) {
        if (n < lvl.run_lo) break;
        total += std::min(n, lvl.run_hi) - lvl.nk;
        if (lvl.has_multiples) {
            const std::uint64_t m = std::min(lvl.m_hi, n / lvl.step);
            if (m >= 3) total += m - 2;
        }
    }
    return total;
}

NaturalSequence thm1_enumerate(std::uint64_t hi) {
    require_enumeration_cap(hi);
    std::vector<std::uint64_t> out;
    for (const Thm1Level& lvl : kThm1Levels) {
        if (hi < lvl.run_lo) break;
        for (std::uint64_t v = lvl.run_lo; v <= std::min(hi, lvl.run_hi); ++v) {
            out.push_back(v);
        }
        if (lvl.has_multiples) {
            const std::uint64_t m_top = std::min(lvl.m_hi, hi / lvl.step);
            for (std::uint64_t m = 3; m <= m_top; ++m) out.push_back(m * lvl.step);
        }
    }
    return NaturalSequence::from_sorted(std::move(out));
}

namespace {

// True iff v consists of exactly `digits` base-4 digits, each 1 or 2.
bool all_digits_one_or_two(std::uint64_t v, int digits) {
    for (int i = 0; i < digits; ++i) {
        const std::uint64_t d = v & 3;
        if (d != 1 && d != 2) return false;
        v >>= 2;
    }
    return v == 0;
}

// (4^k - 1) / 3, the smallest element of B_k (all digits 1).
std::uint64_t repunit4(int k) {
    return static_cast<std::uint64_t>(((u128{1} << (2 * k)) - 1) / 3);
}

} // namespace

bool thm2_member(std::uint64_t n) {
    if (n == 0) return false;
    for (int k = 1; k <= 32 && repunit4(k) <= n; ++k) {
        const u128 block = u128{1} << (2 * (k - 1));  // 4^{k-1}
        for (int i = 0; i <= 8; ++i) {
            const u128 shift = static_cast<u128>(i) * block;
            if (shift > n) break;
            if (all_digits_one_or_two(n - static_cast<std::uint64_t>(shift), k)) {
                return true;
            }
        }
    }
    return false;
}

CoverPair thm2_witness(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("thm2_witness requires n >= 3");
    // Largest t with 3 * 4^{t-1} <= n.
    int t = 1;
    while (t < 32 && 3 * (u128{1} << (2 * t)) <= n) ++t;
    const std::uint64_t block = std::uint64_t{1} << (2 * (t - 1));  // 4^{t-1}
    const std::uint64_t shift = (n / block - 3) * block;
    std::uint64_t slid = n - shift;  // in [3*4^{t-1}, 4^t)

    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (int i = 0; i < t; ++i) {
        static constexpr std::uint64_t kLow[4] = {2, 1, 2, 1};
        static constexpr std::uint64_t kHigh[4] = {1, 1, 2, 2};
        const std::uint64_t mu = slid & 3;
        a += kLow[mu] << (2 * i);
        b += kHigh[mu] << (2 * i);
        slid >>= 2;
    }
    return {a + shift, b + shift};
}

NaturalSequence thm2_enumerate(std::uint64_t hi) {
    require_enumeration_cap(hi);
    std::vector<std::uint64_t> out;
    for (int k = 1; k <= 32 && repunit4(k) <= hi; ++k) {
        const std::uint64_t block = std::uint64_t{1} << (2 * (k - 1));
        // Elements of B_k indexed by the digit-choice bitmask.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::uint64_t v = repunit4(k);
            for (int i = 0; i < k; ++i) {
                if (mask >> i & 1) v += block >> (2 * (k - 1 - i));
            }
            for (int i = 0; i <= 8; ++i) {
                const std::uint64_t shifted = v + static_cast<std::uint64_t>(i) * block;
                if (shifted > hi) break;
                out.push_back(shifted);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return NaturalSequence::from_sorted(std::move(out));
}

std::uint64_t thm2_count(std::uint64_t n) {
    return thm2_enumerate(n).size();
}

} // namespace apcover
