#pragma once

// Counting-function analytics: A(n), normalized ratios A(n)/(n^alpha (ln n)^beta),
// the pair-counting lower bound forced on AP3-covering sets, and tail
// min/max indicators over checkpoint subsequences.
//
// All counting is exact integer arithmetic; only ratios use doubles.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apcover/ap_core.hpp"

namespace apcover {

/// Checkpointed counts with their normalization n^alpha * (ln n)^beta.
struct DensityTable {
    struct Row {
        std::uint64_t n = 0;
        std::uint64_t count = 0;
        double ratio = 0.0;
    };
    double alpha = 0.5;
    double beta = 0.0;
    std::vector<Row> rows;
};

/// Flag attached to reports that stand in for limit statements; checkpoint
/// tables never extrapolate.
inline constexpr std::string_view kAsymptoticNote =
    "asymptotic claim: checkpoint evidence only";

using CountFn = std::function<std::uint64_t(std::uint64_t)>;

/// A set that can be counted: an explicit sequence (binary search), a
/// predicate with a registered exact counter, or a bare predicate counted by
/// enumeration (capped at 10^9; std::domain_error beyond).
class CountingSet {
public:
    static CountingSet from_sequence(NaturalSequence seq);
    static CountingSet from_predicate(MemberFn member);
    static CountingSet from_predicate(MemberFn member, CountFn exact_count);

    bool contains(std::uint64_t x) const;
    std::uint64_t count_up_to(std::uint64_t n) const;
    const MemberFn& member() const { return member_; }

private:
    CountingSet() = default;
    std::shared_ptr<const NaturalSequence> seq_;  // set only for explicit sequences
    MemberFn member_;
    CountFn count_;
};

/// |A intersect [0, n]| for an explicit sequence.
std::uint64_t count_up_to(const NaturalSequence& seq, std::uint64_t n);
std::uint64_t count_up_to(const CountingSet& set, std::uint64_t n);

/// Table of A(n) and A(n)/(n^alpha (ln n)^beta) at each checkpoint.
/// Checkpoints must be sorted ascending.
DensityTable ratio_series(const CountingSet& set,
                          std::span<const std::uint64_t> checkpoints,
                          double alpha, double beta);

struct GerverRamseyRow {
    std::uint64_t n = 0;
    std::uint64_t count = 0;
    double bound = 0.0;  // sqrt(2n - 2n0 + 0.25) + 0.5
    bool pass = false;
};

/// Checks the pair-counting bound A(n) >= sqrt(2n - 2n0 + 0.25) + 0.5 at each
/// checkpoint, where n0 is the set's covering threshold. Evaluated in exact
/// integer form A(n)(A(n)-1) >= 2(n - n0).
std::vector<GerverRamseyRow> gerver_ramsey_check(
    const CountingSet& set, std::uint64_t covering_n0,
    std::span<const std::uint64_t> checkpoints);

/// Running min and max of the ratio column from each row onward: crude
/// liminf/limsup indicators over the supplied checkpoints, never extrapolated.
std::vector<std::pair<double, double>> subsequence_extremes(const DensityTable& table);

/// CSV emission, header `n,count,ratio,alpha,beta`, LF line endings.
std::string to_csv(const DensityTable& table);

} // namespace apcover
