#include "apcover/density.hpp"

#include <cmath>
#include <cstdio>

namespace apcover {

namespace {

constexpr std::uint64_t kEnumerationCap = 1'000'000'000;

double normalizer(std::uint64_t n, double alpha, double beta) {
    const double nd = static_cast<double>(n);
    double value = std::pow(nd, alpha);
    if (beta != 0.0) value *= std::pow(std::log(nd), beta);
    return value;
}

} // namespace

CountingSet CountingSet::from_sequence(NaturalSequence seq) {
    CountingSet s;
    s.seq_ = std::make_shared<const NaturalSequence>(std::move(seq));
    s.member_ = [held = s.seq_](std::uint64_t x) { return held->contains(x); };
    return s;
}

CountingSet CountingSet::from_predicate(MemberFn member) {
    CountingSet s;
    s.member_ = std::move(member);
    return s;
}

CountingSet CountingSet::from_predicate(MemberFn member, CountFn exact_count) {
    CountingSet s;
    s.member_ = std::move(member);
    s.count_ = std::move(exact_count);
    return s;
}

bool CountingSet::contains(std::uint64_t x) const {
    return member_(x);
}

std::uint64_t CountingSet::count_up_to(std::uint64_t n) const {
    if (seq_) return seq_->count_up_to(n);
    if (count_) return count_(n);
    if (n > kEnumerationCap) {
        throw std::domain_error("counting by enumeration is capped at 10^9");
    }
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (member_(i)) ++total;
    }
    return total;
}

std::uint64_t count_up_to(const NaturalSequence& seq, std::uint64_t n) {
    return seq.count_up_to(n);
}

std::uint64_t count_up_to(const CountingSet& set, std::uint64_t n) {
    return set.count_up_to(n);
}

DensityTable ratio_series(const CountingSet& set,
                          std::span<const std::uint64_t> checkpoints,
                          double alpha, double beta) {
    for (std::size_t i = 1; i < checkpoints.size(); ++i) {
        if (checkpoints[i] <= checkpoints[i - 1]) {
            throw std::invalid_argument("checkpoints must be strictly ascending");
        }
    }
    DensityTable table;
    table.alpha = alpha;
    table.beta = beta;
    for (std::uint64_t n : checkpoints) {
        const std::uint64_t count = set.count_up_to(n);
        double ratio = 0.0;
        if (count > 0) {
            ratio = static_cast<double>(count) / normalizer(n, alpha, beta);
        }
        table.rows.push_back({n, count, ratio});
    }
    return table;
}

std::vector<GerverRamseyRow> gerver_ramsey_check(
    const CountingSet& set, std::uint64_t covering_n0,
    std::span<const std::uint64_t> checkpoints) {
    std::vector<GerverRamseyRow> rows;
    rows.reserve(checkpoints.size());
    for (std::uint64_t n : checkpoints) {
        GerverRamseyRow row;
        row.n = n;
        row.count = set.count_up_to(n);
        const double shifted = 2.0 * static_cast<double>(n) -
                               2.0 * static_cast<double>(covering_n0) + 0.25;
        row.bound = shifted > 0 ? std::sqrt(shifted) + 0.5 : 0.0;
        // A(A-1) >= 2(n - n0), the exact form of count >= sqrt(...) + 0.5.
        if (n <= covering_n0) {
            row.pass = true;
        } else {
            const unsigned __int128 pairs =
                static_cast<unsigned __int128>(row.count) * (row.count ? row.count - 1 : 0);
            row.pass = pairs >= 2 * static_cast<unsigned __int128>(n - covering_n0);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::pair<double, double>> subsequence_extremes(const DensityTable& table) {
    if (table.rows.empty()) {
        throw std::invalid_argument("subsequence_extremes requires a nonempty table");
    }
    std::vector<std::pair<double, double>> out(table.rows.size());
    double tail_min = table.rows.back().ratio;
    double tail_max = tail_min;
    for (std::size_t i = table.rows.size(); i-- > 0;) {
        tail_min = std::min(tail_min, table.rows[i].ratio);
        tail_max = std::max(tail_max, table.rows[i].ratio);
        out[i] = {tail_min, tail_max};
    }
    return out;
}

std::string to_csv(const DensityTable& table) {
    std::string out = "n,count,ratio,alpha,beta\n";
    char buf[128];
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g,%.17g,%.17g\n",
                      static_cast<unsigned long long>(row.n),
                      static_cast<unsigned long long>(row.count),
                      row.ratio, table.alpha, table.beta);
        out += buf;
    }
    return out;
}

} // namespace apcover
