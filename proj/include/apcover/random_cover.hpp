#pragma once

// Seeded simulation of the randomized covering construction: each n enters
// the set independently with probability min{1, c (ln n / n)^{1/(k-1)}}.
// Membership of n is a pure function of (rng_seed, n), so samples are stable
// under changes to n_max and reproducible across runs.

#include <cstdint>
#include <span>
#include <vector>

#include "apcover/ap_core.hpp"
#include "apcover/density.hpp"

namespace apcover {

struct RandomCoverParams {
    int k = 3;
    double c = 1.0;            // > 0
    std::uint64_t rng_seed = 0;
    std::uint64_t n_max = 2;   // inclusive sampling bound
};

/// (4k(k-1))^{1/(k-1)}: the smallest c for which the per-n failure
/// probability bound collapses to n^{-2}.
double default_c(int k);

/// min{1, c (ln n / n)^{1/(k-1)}} for n >= 2; n = 0 and n = 1 are included
/// deterministically (probability 1).
double inclusion_probability(std::uint64_t n, int k, double c);

/// The uniform draw in [0, 1) deciding membership of n: a pure function of
/// (rng_seed, n), independent of c, so raising c never removes elements.
double membership_draw(std::uint64_t rng_seed, std::uint64_t n);

/// Samples {n <= n_max : draw(seed, n) < p(n)}. Deterministic.
NaturalSequence sample_set(const RandomCoverParams& params);

/// The difference class {n - i*u : i = 1..k-1} for one admissible u.
struct DifferenceClass {
    std::uint64_t u = 0;
    std::vector<std::uint64_t> values;
};

/// All integer u with n/(2k) <= u <= n/(2(k-1)), each with its class;
/// distinct u give pairwise disjoint classes. Requires n >= 2k.
std::vector<DifferenceClass> disjoint_difference_classes(std::uint64_t n, int k);

/// Integers in [range_lo, range_hi] that are not the last term of any k-AP
/// whose other terms lie in `set` (delegates to verify_covering).
std::vector<std::uint64_t> covering_failures(const NaturalSequence& set, int k,
                                             std::uint64_t range_lo,
                                             std::uint64_t range_hi,
                                             unsigned jobs = 1);

/// A(n) and A(n) / ((ln n)^{1/(k-1)} n^{(k-2)/(k-1)}) at each checkpoint.
DensityTable growth_report(const NaturalSequence& set, int k,
                           std::span<const std::uint64_t> checkpoints);

} // namespace apcover
