#include "apcover/ap_core.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace apcover {

NaturalSequence::NaturalSequence(std::vector<std::uint64_t> elements)
    : elements_(std::move(elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1]) {
            throw std::invalid_argument("sequence must be strictly increasing");
        }
    }
}

NaturalSequence NaturalSequence::from_sorted(std::vector<std::uint64_t> elements) {
    NaturalSequence s;
    s.elements_ = std::move(elements);
    return s;
}

bool NaturalSequence::contains(std::uint64_t x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::uint64_t NaturalSequence::count_up_to(std::uint64_t n) const noexcept {
    return static_cast<std::uint64_t>(
        std::upper_bound(elements_.begin(), elements_.end(), n) - elements_.begin());
}

void NaturalSequence::append(std::uint64_t x) {
    if (!elements_.empty() && x <= elements_.back()) {
        throw std::invalid_argument("appended value must exceed the current maximum");
    }
    elements_.push_back(x);
}

namespace {

void require_k(int k) {
    if (k < 3) throw std::invalid_argument("progression length k must be at least 3");
}

} // namespace

bool is_k_ap_free(const NaturalSequence& seq, int k) {
    require_k(k);
    const auto& v = seq.values();
    for (std::uint64_t last : v) {
        const std::uint64_t dmax = last / static_cast<std::uint64_t>(k - 1);
        for (std::uint64_t d = 1; d <= dmax; ++d) {
            bool all_in = true;
            for (int i = 1; i < k; ++i) {
                if (!seq.contains(last - static_cast<std::uint64_t>(i) * d)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) return false;
        }
    }
    return true;
}

std::optional<APWitness> extends_to_kap(const NaturalSequence& seq,
                                        std::uint64_t candidate, int k) {
    require_k(k);
    if (!seq.empty() && candidate <= seq.back()) {
        throw std::invalid_argument("candidate must exceed every element of the sequence");
    }
    const std::uint64_t dmax = candidate / static_cast<std::uint64_t>(k - 1);
    if (dmax == 0) return std::nullopt;
    const auto& v = seq.values();
    const std::uint64_t bmin = candidate - dmax;
    // First term below the candidate is b = candidate - d; walk members
    // downward so the smallest difference is found first.
    for (auto it = v.rbegin(); it != v.rend() && *it >= bmin; ++it) {
        const std::uint64_t d = candidate - *it;
        bool all_in = true;
        for (int i = 2; i < k; ++i) {
            if (!seq.contains(candidate - static_cast<std::uint64_t>(i) * d)) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            return APWitness{candidate - static_cast<std::uint64_t>(k - 1) * d, d, k};
        }
    }
    return std::nullopt;
}

std::optional<APWitness> find_cover_witness(const MemberFn& member,
                                            std::uint64_t n, int k) {
    require_k(k);
    const std::uint64_t dmax = n / static_cast<std::uint64_t>(k - 1);
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        bool all_in = true;
        for (int i = 1; i < k; ++i) {
            if (!member(n - static_cast<std::uint64_t>(i) * d)) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            return APWitness{n - static_cast<std::uint64_t>(k - 1) * d, d, k};
        }
    }
    return std::nullopt;
}

namespace detail {

std::optional<APWitness> scan_witness(std::span<const std::uint64_t> members,
                                      const BitSieve& in_set,
                                      std::uint64_t n, int k) {
    const std::uint64_t dmax = n / static_cast<std::uint64_t>(k - 1);
    if (dmax == 0) return std::nullopt;
    const std::uint64_t bmin = n - dmax;
    auto it = std::lower_bound(members.begin(), members.end(), n);
    while (it != members.begin()) {
        --it;
        const std::uint64_t b = *it;
        if (b < bmin) break;
        const std::uint64_t d = n - b;
        bool all_in = true;
        for (int i = 2; i < k; ++i) {
            if (!in_set.test(n - static_cast<std::uint64_t>(i) * d)) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            return APWitness{n - static_cast<std::uint64_t>(k - 1) * d, d, k};
        }
    }
    return std::nullopt;
}

} // namespace detail

namespace {

// Memory guard for the materialized sieve: 2^32 values = 512 MiB of bits.
constexpr std::uint64_t kMaxSweepUniverse = std::uint64_t{1} << 32;

struct SweepChunk {
    std::vector<std::uint64_t> failures;
    std::uint64_t witnesses = 0;
};

CoverReport run_sweep(const std::vector<std::uint64_t>& members,
                      const detail::BitSieve& sieve, int k,
                      std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
    CoverReport report;
    report.range_lo = lo;
    report.range_hi = hi;
    report.k = k;

    const std::uint64_t span = hi - lo + 1;
    if (jobs == 0) jobs = 1;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::min(jobs, 4 * hw), span));

    auto work = [&](std::uint64_t a, std::uint64_t b) {
        SweepChunk chunk;
        for (std::uint64_t n = a; n <= b; ++n) {
            if (detail::scan_witness(members, sieve, n, k).has_value()) {
                ++chunk.witnesses;
            } else {
                chunk.failures.push_back(n);
            }
        }
        return chunk;
    };

    if (jobs <= 1) {
        SweepChunk chunk = work(lo, hi);
        report.failures = std::move(chunk.failures);
        report.witnesses_checked = chunk.witnesses;
        return report;
    }

    const std::uint64_t per = span / jobs;
    std::uint64_t extra = span % jobs;
    std::vector<std::future<SweepChunk>> futures;
    std::uint64_t next = lo;
    for (unsigned j = 0; j < jobs; ++j) {
        std::uint64_t len = per + (extra > 0 ? 1 : 0);
        if (extra > 0) --extra;
        const std::uint64_t a = next;
        const std::uint64_t b = a + len - 1;
        next = b + 1;
        futures.push_back(std::async(std::launch::async, work, a, b));
    }
    for (auto& f : futures) {
        SweepChunk chunk = f.get();
        report.witnesses_checked += chunk.witnesses;
        report.failures.insert(report.failures.end(),
                               chunk.failures.begin(), chunk.failures.end());
    }
    return report;
}

void require_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("range_lo must not exceed range_hi");
    if (hi >= kMaxSweepUniverse) {
        throw std::domain_error("covering sweep range too large to materialize");
    }
}

} // namespace

CoverReport verify_covering(const MemberFn& member, int k,
                            std::uint64_t range_lo, std::uint64_t range_hi,
                            unsigned jobs) {
    require_k(k);
    require_range(range_lo, range_hi);
    detail::BitSieve sieve(range_hi + 1);
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n <= range_hi; ++n) {
        if (member(n)) {
            sieve.set(n);
            members.push_back(n);
        }
    }
    return run_sweep(members, sieve, k, range_lo, range_hi, jobs);
}

CoverReport verify_covering(const NaturalSequence& set, int k,
                            std::uint64_t range_lo, std::uint64_t range_hi,
                            unsigned jobs) {
    require_k(k);
    require_range(range_lo, range_hi);
    detail::BitSieve sieve(range_hi + 1);
    std::vector<std::uint64_t> members;
    for (std::uint64_t x : set) {
        if (x > range_hi) break;
        sieve.set(x);
        members.push_back(x);
    }
    return run_sweep(members, sieve, k, range_lo, range_hi, jobs);
}

} // namespace apcover
