#include "apcover/random_cover.hpp"

#include <cmath>

namespace apcover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_k(int k) {
    if (k < 3) throw std::invalid_argument("progression length k must be at least 3");
}

} // namespace

double default_c(int k) {
    require_k(k);
    const double kk = static_cast<double>(k);
    return std::pow(4.0 * kk * (kk - 1.0), 1.0 / (kk - 1.0));
}

double inclusion_probability(std::uint64_t n, int k, double c) {
    require_k(k);
    if (n < 2) return 1.0;
    const double nd = static_cast<double>(n);
    const double p = c * std::pow(std::log(nd) / nd, 1.0 / (static_cast<double>(k) - 1.0));
    return p < 1.0 ? p : 1.0;
}

double membership_draw(std::uint64_t rng_seed, std::uint64_t n) {
    const std::uint64_t h = splitmix64(splitmix64(rng_seed) ^ n);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

NaturalSequence sample_set(const RandomCoverParams& params) {
    require_k(params.k);
    if (params.c <= 0.0) throw std::invalid_argument("c must be positive");
    if (params.n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= params.n_max; ++n) {
        if (membership_draw(params.rng_seed, n) <
            inclusion_probability(n, params.k, params.c)) {
            out.push_back(n);
        }
    }
    return NaturalSequence::from_sorted(std::move(out));
}

std::vector<DifferenceClass> disjoint_difference_classes(std::uint64_t n, int k) {
    require_k(k);
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (n < 2 * kk) throw std::invalid_argument("difference classes require n >= 2k");
    const std::uint64_t u_lo = n / (2 * kk) + (n % (2 * kk) != 0);  // ceil(n / 2k)
    const std::uint64_t u_hi = n / (2 * (kk - 1));                  // floor(n / 2(k-1))
    std::vector<DifferenceClass> classes;
    for (std::uint64_t u = u_lo; u <= u_hi; ++u) {
        DifferenceClass cls;
        cls.u = u;
        for (std::uint64_t i = 1; i < kk; ++i) cls.values.push_back(n - i * u);
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::uint64_t> covering_failures(const NaturalSequence& set, int k,
                                             std::uint64_t range_lo,
                                             std::uint64_t range_hi,
                                             unsigned jobs) {
    return verify_covering(set, k, range_lo, range_hi, jobs).failures;
}

DensityTable growth_report(const NaturalSequence& set, int k,
                           std::span<const std::uint64_t> checkpoints) {
    require_k(k);
    const double km1 = static_cast<double>(k) - 1.0;
    return ratio_series(CountingSet::from_sequence(set), checkpoints,
                        (km1 - 1.0) / km1, 1.0 / km1);
}

} // namespace apcover
