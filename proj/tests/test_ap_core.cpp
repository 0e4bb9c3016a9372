#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "apcover/ap_core.hpp"
#include "oracles.hpp"

using namespace apcover;

namespace {

NaturalSequence seq(std::initializer_list<std::uint64_t> values) {
    return NaturalSequence(std::vector<std::uint64_t>(values));
}

MemberFn member_of(const NaturalSequence& s) {
    return [&s](std::uint64_t x) { return s.contains(x); };
}

// Every witness handed out must certify a real progression ending at n with
// all earlier terms in the set.
void check_witness(const APWitness& w, const MemberFn& member, std::uint64_t n, int k) {
    CHECK(w.length == k);
    CHECK(w.diff >= 1);
    CHECK(w.last_term() == n);
    for (int i = 1; i < k; ++i) {
        CHECK(member(n - static_cast<std::uint64_t>(i) * w.diff));
    }
}

std::vector<std::uint64_t> random_increasing_set(std::mt19937_64& rng,
                                                 std::size_t max_size,
                                                 std::uint64_t max_value) {
    std::uniform_int_distribution<std::uint64_t> value(0, max_value);
    std::uniform_int_distribution<std::size_t> size(0, max_size);
    std::set<std::uint64_t> s;
    const std::size_t want = size(rng);
    while (s.size() < want) s.insert(value(rng));
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("NaturalSequence validates monotonicity") {
    CHECK_NOTHROW(seq({0, 1, 5}));
    CHECK_THROWS_AS(seq({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(seq({3, 2}), std::invalid_argument);
    NaturalSequence s = seq({0, 4});
    CHECK_THROWS_AS(s.append(4), std::invalid_argument);
    s.append(9);
    CHECK(s.contains(9));
    CHECK(s.count_up_to(4) == 2);
}

TEST_CASE("is_k_ap_free basics") {
    CHECK(is_k_ap_free(seq({}), 3));
    CHECK_FALSE(is_k_ap_free(seq({0, 1, 2}), 3));
    CHECK(is_k_ap_free(seq({0, 1, 3, 4}), 3));
    CHECK_THROWS_AS(is_k_ap_free(seq({0}), 2), std::invalid_argument);

    // Length matters: 0,1,2 is fine when only 4-term APs are banned.
    CHECK(is_k_ap_free(seq({0, 1, 2}), 4));
    CHECK_FALSE(is_k_ap_free(seq({0, 2, 4, 6}), 4));
}

TEST_CASE("is_k_ap_free agrees with the subset oracle on random sets") {
    std::mt19937_64 rng(20250810);
    for (int round = 0; round < 300; ++round) {
        const auto values = random_increasing_set(rng, 12, 40);
        for (int k : {3, 4, 5}) {
            CHECK(is_k_ap_free(NaturalSequence(values), k) == !oracle::has_k_ap(values, k));
        }
    }
}

TEST_CASE("extends_to_kap examples") {
    CHECK(extends_to_kap(seq({0, 1}), 2, 3) == APWitness{0, 1, 3});
    CHECK(extends_to_kap(seq({0, 1, 3, 4}), 5, 3) == APWitness{3, 1, 3});
    CHECK_FALSE(extends_to_kap(seq({0, 1, 3, 4}), 9, 3).has_value());
    CHECK_THROWS_AS(extends_to_kap(seq({0, 5}), 5, 3), std::invalid_argument);
    CHECK_FALSE(extends_to_kap(seq({}), 7, 3).has_value());
}

TEST_CASE("a set is k-AP-free exactly when no element extends its prefix") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 200; ++round) {
        const auto values = random_increasing_set(rng, 10, 40);
        for (int k : {3, 4, 5}) {
            bool any_extension = false;
            for (std::size_t i = 0; i < values.size(); ++i) {
                NaturalSequence prefix(
                    std::vector<std::uint64_t>(values.begin(), values.begin() + i));
                if (extends_to_kap(prefix, values[i], k).has_value()) {
                    any_extension = true;
                    break;
                }
            }
            CHECK(is_k_ap_free(NaturalSequence(values), k) == !any_extension);
        }
    }
}

TEST_CASE("find_cover_witness examples") {
    const NaturalSequence s = seq({2, 3, 4, 5, 6, 8, 10, 12});
    const auto w = find_cover_witness(member_of(s), 14, 3);
    REQUIRE(w.has_value());
    CHECK(*w == APWitness{10, 2, 3});

    const NaturalSequence t = seq({0, 1});
    CHECK(find_cover_witness(member_of(t), 2, 3) == APWitness{0, 1, 3});

    const MemberFn nothing = [](std::uint64_t) { return false; };
    CHECK_FALSE(find_cover_witness(nothing, 100, 3).has_value());

    // No room below n for a positive-difference progression.
    const MemberFn everything = [](std::uint64_t) { return true; };
    CHECK_FALSE(find_cover_witness(everything, 1, 3).has_value());
}

TEST_CASE("find_cover_witness matches the subset-enumeration oracle") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 250; ++round) {
        const auto values = random_increasing_set(rng, 10, 60);
        const NaturalSequence s{std::vector<std::uint64_t>(values)};
        std::uniform_int_distribution<std::uint64_t> pick_n(0, 80);
        const std::uint64_t n = pick_n(rng);
        for (int k : {3, 4}) {
            const auto expected = oracle::min_witness_diff_by_subsets(values, n, k);
            const auto got = find_cover_witness(member_of(s), n, k);
            CHECK(got.has_value() == expected.has_value());
            if (got && expected) {
                CHECK(got->diff == *expected);
                check_witness(*got, member_of(s), n, k);
            }
        }
    }
}

TEST_CASE("verify_covering on a tiny explicit set") {
    const NaturalSequence s = seq({0, 1, 2});
    const CoverReport report = verify_covering(s, 3, 10, 12);
    CHECK(report.failures == std::vector<std::uint64_t>{10, 11, 12});
    CHECK(report.witnesses_checked == 0);
    CHECK_FALSE(report.all_covered());

    // Below 10 the set still covers its immediate extensions.
    const CoverReport small = verify_covering(s, 3, 2, 4);
    CHECK(small.failures == std::vector<std::uint64_t>{});
    CHECK(small.witnesses_checked == 3);
}

TEST_CASE("verify_covering marks n < k-1 as automatic failures") {
    const MemberFn everything = [](std::uint64_t) { return true; };
    const CoverReport report = verify_covering(everything, 3, 0, 3);
    CHECK(report.failures == std::vector<std::uint64_t>{0, 1});
    CHECK(report.witnesses_checked == 2);
}

TEST_CASE("verify_covering is deterministic and independent of partitioning") {
    const MemberFn odds_and_squares = [](std::uint64_t n) {
        if (n % 2 == 1) return true;
        const std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
        for (std::uint64_t i = r > 1 ? r - 1 : 0; i <= r + 1; ++i) {
            if (i * i == n) return true;
        }
        return false;
    };
    const CoverReport a = verify_covering(odds_and_squares, 3, 5, 4000);
    const CoverReport b = verify_covering(odds_and_squares, 3, 5, 4000);
    const CoverReport c = verify_covering(odds_and_squares, 3, 5, 4000, 3);
    const CoverReport d = verify_covering(odds_and_squares, 3, 5, 4000, 7);
    CHECK(a.failures == b.failures);
    CHECK(a.failures == c.failures);
    CHECK(a.failures == d.failures);
    CHECK(a.witnesses_checked == c.witnesses_checked);
    CHECK(a.witnesses_checked == d.witnesses_checked);
}

TEST_CASE("verify_covering rejects a reversed range") {
    const MemberFn nothing = [](std::uint64_t) { return false; };
    CHECK_THROWS_AS(verify_covering(nothing, 3, 5, 4), std::invalid_argument);
}

TEST_CASE("witnesses from the sweep validate against the predicate") {
    // Compare the scan-based sweep against per-n predicate search.
    const MemberFn members = [](std::uint64_t n) { return n % 3 != 2; };
    for (std::uint64_t n = 2; n <= 300; ++n) {
        const auto direct = find_cover_witness(members, n, 3);
        const CoverReport report = verify_covering(members, 3, n, n);
        CHECK(report.all_covered() == direct.has_value());
        if (direct) check_witness(*direct, members, n, 3);
    }
}
