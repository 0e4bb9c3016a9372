#pragma once

// The two explicit AP3-covering sets exposed by the CLI as `thm1` and `thm2`:
//
//   thm1 — leveled blocks. Level k contributes the run [n_k+1, n_k+2^{n_k+1}]
//   plus the multiples m*2^{n_k} for m = 3..2^{n_k+1}+2, where n_1 = 1 and
//   n_{k+1} = 2^{2*n_k+2}. Within 64 bits only levels 1..3 are populated and
//   level 3's run swallows everything above 2^34.
//
//   thm2 — base-4 digit sets. B_k holds the integers with exactly k base-4
//   digits, each digit 1 or 2; the set is the union of i*4^{k-1} + B_k over
//   k >= 1 and shifts i = 0..8.
//
// Witness functions return the exact pair (a, b) with 2b = a + n produced by
// each construction's case analysis; they double as machine checks of it.

#include <cstdint>

#include "apcover/ap_core.hpp"

namespace apcover {

/// A pair certifying the 3-term progression a, b, n with 2b = a + n.
struct CoverPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool operator==(const CoverPair&) const = default;
};

/// Level thresholds n_1 = 1, n_{k+1} = 2^{2*n_k+2}. Only k <= 3 fits in
/// 64 bits; larger k throws std::overflow_error.
std::uint64_t thm1_nk(int k);

/// Membership in the leveled-block set, from the block formulas alone.
bool thm1_member(std::uint64_t n);

/// Witness (a, b) for n >= 4 with a < b < n, both members, 2b = a + n.
/// Case analysis: an adjacent pair (n-2, n-1) while n sits in a level's run;
/// otherwise the rounded half c = 2^{n_k} * ceil(n / 2^{n_k+1}) and
/// d = 2c - n give (d, c), shifted into the blocks when d is too small.
CoverPair thm1_witness(std::uint64_t n);

/// Exact number of members <= n via block arithmetic (no enumeration).
std::uint64_t thm1_count(std::uint64_t n);

/// All members <= hi, ascending. Enumeration is capped at hi <= 10^9.
NaturalSequence thm1_enumerate(std::uint64_t hi);

/// Membership in the shifted digit-set union.
bool thm2_member(std::uint64_t n);

/// Witness (a, b) for n >= 3: locate t with 3*4^{t-1} <= n < 3*4^t, slide n
/// into [3*4^{t-1}, 4^t) by a multiple of 4^{t-1}, map each base-4 digit
/// mu of the slid value through mu: 0->(2,1), 1->(1,1), 2->(2,2), 3->(1,2)
/// to build the pair digitwise, then slide back.
CoverPair thm2_witness(std::uint64_t n);

/// Exact number of members <= n, by enumerating the finitely many shifted
/// copies that reach [1, n] and deduplicating. Capped at n <= 10^9.
std::uint64_t thm2_count(std::uint64_t n);

/// All members <= hi, ascending. Enumeration is capped at hi <= 10^9.
NaturalSequence thm2_enumerate(std::uint64_t hi);

} // namespace apcover
