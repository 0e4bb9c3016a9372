#pragma once

// Greedy Stanley sequences of order k, the generalized greedy rule
// n in A <=> n != k*b - a over pairs from A, and its closed-form description
// as a chain of intervals.

#include <cstdint>
#include <vector>

#include "apcover/ap_core.hpp"

namespace apcover {

/// Stop condition for sequence generation: either a total number of terms
/// (seed included) or an inclusive cap on element values.
struct Limit {
    enum class Kind { TermCount, MaxValue };
    Kind kind = Kind::MaxValue;
    std::uint64_t bound = 0;

    static Limit term_count(std::uint64_t n) { return {Kind::TermCount, n}; }
    static Limit max_value(std::uint64_t v) { return {Kind::MaxValue, v}; }
};

/// Smallest a > max(seq) whose addition keeps seq free of k-term APs.
/// seq must be nonempty; throws std::overflow_error if the search would
/// leave the 64-bit domain.
std::uint64_t stanley_next(const NaturalSequence& seq, int k);

/// The greedy extension of `seed`, stopping at `limit`. The seed must itself
/// be k-AP-free; throws std::invalid_argument otherwise.
NaturalSequence stanley_sequence(const NaturalSequence& seed, int k, Limit limit);

/// Order-3 membership rule: true iff no a, b in seq (all below n) satisfy
/// n = 2b - a. Appending n whenever this holds reproduces the order-3 greedy
/// sequence.
bool remark1_member_rule(const NaturalSequence& seq, std::uint64_t n);

struct Interval {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const Interval&) const = default;
};

/// Closed-form structure of the generalized greedy set: intervals [a_l, b_l]
/// with b_0 = floor(k*a0/2), a_l = k*b_{l-1} - a0 + 1, b_l = floor(k*a_l/2).
struct IntervalChain {
    std::uint64_t a0 = 3;
    int k = 4;
    std::vector<Interval> intervals;

    /// True iff n lies in one of the stored intervals.
    bool contains(std::uint64_t n) const noexcept;
};

struct GeneralizedGreedyResult {
    NaturalSequence sequence;
    /// The interval structure is only guaranteed for a0 >= 3 and k >= 4;
    /// outside that range the rule still runs but carries no guarantee.
    bool structure_guaranteed = false;
};

/// Runs the rule "n in A iff no a, b in A with a, b < n and n = k*b - a"
/// upward from {a0}, truncated at max_value. Pairs with a = b count.
GeneralizedGreedyResult generalized_greedy(std::uint64_t a0, int k,
                                           std::uint64_t max_value);

/// First `count` intervals of the chain; throws std::overflow_error when an
/// endpoint leaves the 64-bit domain, std::invalid_argument outside
/// a0 >= 3, k >= 4, count >= 1.
IntervalChain theorem4_intervals(std::uint64_t a0, int k, std::size_t count);

/// Membership in the full (infinite) interval chain, computed by iterating
/// the recurrence until it passes n; nothing is materialized.
bool theorem4_member(std::uint64_t n, std::uint64_t a0, int k);

} // namespace apcover
