#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kunzlab/error.hpp"

namespace kunzlab {

/// Apéry set of S with respect to its multiplicity m, together with the Kunz
/// coordinates: values[i] = kunz[i-1] * m + i for 0 < i < m.
struct AperyData {
    std::vector<std::int64_t> values;
    std::vector<std::int64_t> kunz;

    friend bool operator==(const AperyData&, const AperyData&) = default;
};

/// A numerical semigroup, stored as its elements below the conductor plus the
/// conductor itself. Everything at or above the conductor is implicitly in S.
class NumericalSemigroup {
public:
    /// The semigroup N itself (conductor 0).
    NumericalSemigroup();

    /// Least submonoid of N containing gens. Throws NotCofinite when the gcd
    /// is not 1, DomainError on a zero generator or an empty set, and
    /// ResourceBound when the closure bound max*min exceeds kMaxClosureBound.
    static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);

    /// Builds from an explicit small-element list; validates every invariant
    /// of the representation and throws DomainError when one fails.
    static NumericalSemigroup from_small_elements(std::vector<std::int64_t> small_elements);

    bool contains(std::int64_t x) const noexcept;

    std::int64_t multiplicity() const noexcept;
    std::int64_t conductor() const noexcept { return small_elements_.back(); }
    std::int64_t frobenius() const noexcept { return conductor() - 1; }
    std::int64_t depth() const noexcept;
    std::int64_t genus() const noexcept;

    std::vector<std::int64_t> gaps() const;
    AperyData apery() const;

    const std::vector<std::int64_t>& small_elements() const noexcept { return small_elements_; }

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;
    friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.small_elements_ <=> b.small_elements_;
    }

    /// Largest closure interval from_generators will materialise.
    static constexpr std::int64_t kMaxClosureBound = 100'000'000;

private:
    explicit NumericalSemigroup(std::vector<std::int64_t> small_elements)
        : small_elements_(std::move(small_elements)) {}

    std::vector<std::int64_t> small_elements_;
};

/// Every numerical semigroup with multiplicity <= max_multiplicity and depth
/// <= max_depth, found by brute force over gap sets, in ascending
/// lexicographic order of small_elements. Throws ResourceBound when the
/// number of candidate gap sets exceeds max_candidates.
std::vector<NumericalSemigroup> enumerate_semigroups(int max_multiplicity, int max_depth,
                                                     std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace kunzlab
