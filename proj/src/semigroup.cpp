#include "kunzlab/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace kunzlab {

NumericalSemigroup::NumericalSemigroup() : small_elements_{0} {}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
    if (gens.empty()) throw Error(ErrorCode::DomainError, "generator set is empty");
    std::int64_t g = 0;
    for (const std::int64_t x : gens) {
        if (x <= 0) throw Error(ErrorCode::DomainError, "generators must be positive, got " + std::to_string(x));
        g = std::gcd(g, x);
    }
    if (g != 1) {
        throw Error(ErrorCode::NotCofinite, "generators have gcd " + std::to_string(g) + ", the monoid is not cofinite");
    }
    const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
    if (*lo == 1) return NumericalSemigroup{};

    // Every gap lies below min*max (Schur's bound on the Frobenius number).
    if (*hi > kMaxClosureBound / *lo) {
        throw Error(ErrorCode::ResourceBound, "closure bound " + std::to_string(*lo) + "*" + std::to_string(*hi) +
                                                  " exceeds " + std::to_string(kMaxClosureBound));
    }
    const std::int64_t bound = *lo * *hi;
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    std::int64_t last_gap = 0;
    for (std::int64_t x = 1; x <= bound; ++x) {
        for (const std::int64_t gen : gens) {
            if (gen <= x && reach[static_cast<std::size_t>(x - gen)]) {
                reach[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
        if (!reach[static_cast<std::size_t>(x)]) last_gap = x;
    }
    const std::int64_t conductor = last_gap + 1;
    std::vector<std::int64_t> small;
    for (std::int64_t x = 0; x < conductor; ++x) {
        if (reach[static_cast<std::size_t>(x)]) small.push_back(x);
    }
    small.push_back(conductor);
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<std::int64_t> small) {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::DomainError, "invalid small-element list: " + why); };
    if (small.empty() || small.front() != 0) fail("must start with 0");
    for (std::size_t k = 1; k < small.size(); ++k) {
        if (small[k] <= small[k - 1]) fail("must be strictly ascending");
    }
    const std::int64_t c = small.back();
    if (c > 0 && small[small.size() - 2] == c - 1) fail("conductor is not minimal");
    for (std::size_t a = 1; a < small.size(); ++a) {
        for (std::size_t b = a; b < small.size() && small[a] + small[b] <= c; ++b) {
            if (!std::binary_search(small.begin(), small.end(), small[a] + small[b])) {
                fail("not closed: " + std::to_string(small[a]) + "+" + std::to_string(small[b]));
            }
        }
    }
    return NumericalSemigroup(std::move(small));
}

bool NumericalSemigroup::contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor()) return true;
    return std::binary_search(small_elements_.begin(), small_elements_.end(), x);
}

std::int64_t NumericalSemigroup::multiplicity() const noexcept {
    return conductor() == 0 ? 1 : small_elements_[1];
}

std::int64_t NumericalSemigroup::depth() const noexcept {
    const std::int64_t m = multiplicity();
    return (conductor() + m - 1) / m;
}

std::int64_t NumericalSemigroup::genus() const noexcept {
    return conductor() - static_cast<std::int64_t>(small_elements_.size() - 1);
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x < conductor(); ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

AperyData NumericalSemigroup::apery() const {
    const std::int64_t m = multiplicity();
    AperyData out;
    out.values.resize(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t x = i;
        while (!contains(x)) x += m;
        out.values[static_cast<std::size_t>(i)] = x;
        if (i > 0) out.kunz.push_back((x - i) / m);
    }
    return out;
}

std::vector<NumericalSemigroup> enumerate_semigroups(int max_multiplicity, int max_depth,
                                                     std::uint64_t max_candidates) {
    if (max_multiplicity < 1 || max_depth < 0) {
        throw Error(ErrorCode::DomainError, "need max_multiplicity >= 1 and max_depth >= 0");
    }
    // For multiplicity m and depth <= q the conductor is at most m*q, so the
    // gap set is {1..m-1} plus any subset of the free positions m+1..m*q-1.
    std::uint64_t total = 1;  // N
    if (max_depth >= 1) {
        for (int m = 2; m <= max_multiplicity; ++m) {
            const std::int64_t free_bits = std::max<std::int64_t>(0, std::int64_t{m} * max_depth - m - 1);
            if (free_bits >= 63) total = std::numeric_limits<std::uint64_t>::max();
            else total += std::uint64_t{1} << free_bits;
            if (total > max_candidates) break;
        }
    }
    if (total > max_candidates) {
        throw Error(ErrorCode::ResourceBound, "gap-set search exceeds " + std::to_string(max_candidates) + " candidates");
    }

    std::vector<NumericalSemigroup> out;
    out.emplace_back();
    if (max_depth >= 1) {
        for (int m = 2; m <= max_multiplicity; ++m) {
            const std::size_t top = static_cast<std::size_t>(m) * static_cast<std::size_t>(max_depth);
            const std::size_t free_bits = top > static_cast<std::size_t>(m) + 1 ? top - m - 1 : 0;
            std::vector<char> in(top, 1);  // membership on [0, top)
            std::vector<std::size_t> members;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
                for (std::size_t x = 1; x < top; ++x) in[x] = 1;
                for (std::size_t x = 1; x < static_cast<std::size_t>(m); ++x) in[x] = 0;
                for (std::size_t b = 0; b < free_bits; ++b) {
                    if (mask >> b & 1) in[m + 1 + b] = 0;
                }
                members.clear();
                for (std::size_t x = 1; x < top; ++x) {
                    if (in[x]) members.push_back(x);
                }
                bool closed = true;
                for (std::size_t a = 0; closed && a < members.size(); ++a) {
                    for (std::size_t b = a; b < members.size(); ++b) {
                        const std::size_t sum = members[a] + members[b];
                        if (sum >= top) break;
                        if (!in[sum]) {
                            closed = false;
                            break;
                        }
                    }
                }
                if (!closed) continue;
                std::size_t last_gap = 0;
                for (std::size_t x = 1; x < top; ++x) {
                    if (!in[x]) last_gap = x;
                }
                std::vector<std::int64_t> small{0};
                for (std::size_t x = 1; x <= last_gap; ++x) {
                    if (in[x]) small.push_back(static_cast<std::int64_t>(x));
                }
                small.push_back(static_cast<std::int64_t>(last_gap + 1));
                out.push_back(NumericalSemigroup::from_small_elements(std::move(small)));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kunzlab
