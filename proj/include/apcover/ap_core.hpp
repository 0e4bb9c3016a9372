#pragma once

// Arithmetic-progression predicates, witness search, and the covering-property
// verifier shared by every other component.
//
// Conventions used throughout:
//   * a "k-term AP" means x, x+d, ..., x+(k-1)d with d >= 1,
//   * a cover witness for n certifies a k-term AP that ends at n whose other
//     k-1 terms all belong to the set under test,
//   * when several witnesses exist, the one with the smallest difference wins.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace apcover {

/// Strictly increasing sequence of nonnegative 64-bit integers; the carrier
/// type for every generated set in this library.
class NaturalSequence {
public:
    NaturalSequence() = default;

    /// Validates strict monotonicity; throws std::invalid_argument otherwise.
    explicit NaturalSequence(std::vector<std::uint64_t> elements);

    /// Trusted constructor for values produced in ascending order internally.
    static NaturalSequence from_sorted(std::vector<std::uint64_t> elements);

    const std::vector<std::uint64_t>& values() const noexcept { return elements_; }

    bool contains(std::uint64_t x) const noexcept;

    /// Number of elements <= n.
    std::uint64_t count_up_to(std::uint64_t n) const noexcept;

    /// Appends x; throws std::invalid_argument unless x > back().
    void append(std::uint64_t x);

    bool empty() const noexcept { return elements_.empty(); }
    std::size_t size() const noexcept { return elements_.size(); }
    std::uint64_t front() const { return elements_.front(); }
    std::uint64_t back() const { return elements_.back(); }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool operator==(const NaturalSequence&) const = default;

private:
    std::vector<std::uint64_t> elements_;
};

/// A (start, diff, length) triple certifying the progression
/// start, start+diff, ..., start+(length-1)*diff.
struct APWitness {
    std::uint64_t start = 0;
    std::uint64_t diff = 1;   // >= 1
    int length = 3;           // >= 3

    std::uint64_t last_term() const noexcept {
        return start + static_cast<std::uint64_t>(length - 1) * diff;
    }

    bool operator==(const APWitness&) const = default;
};

/// Result of sweeping [range_lo, range_hi] for cover witnesses.
/// `failures` lists every n in range without a witness; `witnesses_checked`
/// counts the n for which one was found. Empty failures <=> full coverage.
struct CoverReport {
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    int k = 3;
    std::vector<std::uint64_t> failures;
    std::uint64_t witnesses_checked = 0;

    bool all_covered() const noexcept { return failures.empty(); }
};

/// Membership predicate abstraction: formula-based sets and explicit
/// sequences share one verifier.
using MemberFn = std::function<bool(std::uint64_t)>;

/// True iff no k-term AP with positive difference has all terms in seq.
/// Brute force over (last element, difference) pairs. Throws for k < 3.
bool is_k_ap_free(const NaturalSequence& seq, int k);

/// Witness with last term `candidate` and the other k-1 terms in seq, if one
/// exists; the smallest difference wins. Requires candidate > max(seq) (or an
/// empty seq); throws std::invalid_argument otherwise.
std::optional<APWitness> extends_to_kap(const NaturalSequence& seq,
                                        std::uint64_t candidate, int k);

/// Searches d = 1..floor(n/(k-1)), smallest first, for a witness ending at n
/// whose earlier terms satisfy `member`. Absence is encoded as nullopt.
std::optional<APWitness> find_cover_witness(const MemberFn& member,
                                            std::uint64_t n, int k);

/// Sweeps [range_lo, range_hi]; failures lists every n with no witness.
/// Deterministic: the result is independent of `jobs` (ranges may be
/// partitioned across that many workers, the merge equals the sequential
/// sweep). Materializes set membership up to range_hi first.
CoverReport verify_covering(const MemberFn& member, int k,
                            std::uint64_t range_lo, std::uint64_t range_hi,
                            unsigned jobs = 1);

/// Same sweep against an explicit sequence (skips predicate materialization).
CoverReport verify_covering(const NaturalSequence& set, int k,
                            std::uint64_t range_lo, std::uint64_t range_hi,
                            unsigned jobs = 1);

namespace detail {

/// Flat bit array over [0, capacity).
class BitSieve {
public:
    BitSieve() = default;
    explicit BitSieve(std::uint64_t capacity) { resize(capacity); }

    void resize(std::uint64_t capacity) {
        capacity_ = capacity;
        words_.resize(static_cast<std::size_t>((capacity + 63) / 64), 0);
    }

    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::uint64_t i) const noexcept {
        return i < capacity_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
    }

    std::uint64_t capacity() const noexcept { return capacity_; }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t capacity_ = 0;
};

/// Smallest-difference witness ending at n, given the set both as a sorted
/// member list and as a sieve. Walks candidate first terms b = n - d downward
/// through `members` (equivalently d upward) and checks the remaining k-2
/// terms in the sieve.
std::optional<APWitness> scan_witness(std::span<const std::uint64_t> members,
                                      const BitSieve& in_set,
                                      std::uint64_t n, int k);

} // namespace detail

} // namespace apcover
