#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kunzlab/kunz.hpp"
#include "kunzlab/semigroup.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <numeric>

using kunzlab::AperyData;
using kunzlab::Error;
using kunzlab::ErrorCode;
using kunzlab::NumericalSemigroup;

namespace {

NumericalSemigroup gen(std::vector<std::int64_t> g) { return NumericalSemigroup::from_generators(g); }

}  // namespace

TEST_CASE("from_generators agrees with brute-force closure") {
    for (const auto& g : std::vector<std::vector<std::int64_t>>{{3, 5, 7}, {2, 5}, {2, 3}, {4, 6, 9}, {5, 7}, {6, 10, 15}, {7, 8, 9, 10}}) {
        const NumericalSemigroup s = gen(g);
        const std::int64_t limit = 2 * g.front() * g.back() + 10;
        const auto members = oracle::members(g, limit);
        for (std::int64_t x = 0; x <= limit; ++x) {
            CHECK_MESSAGE(s.contains(x) == (members.count(x) == 1), "x=" << x);
        }
        CHECK(s.contains(s.conductor()));
        if (s.conductor() > 0) CHECK_FALSE(s.contains(s.frobenius()));
    }
}

TEST_CASE("from_generators examples") {
    const NumericalSemigroup n = gen({1});
    CHECK(n.conductor() == 0);
    CHECK(n.small_elements() == std::vector<std::int64_t>{0});
    CHECK(n == NumericalSemigroup{});

    const NumericalSemigroup s = gen({3, 5, 7});
    CHECK(s.conductor() == 5);
    CHECK(s.small_elements() == std::vector<std::int64_t>{0, 3, 5});

    CHECK(error_code_of([] { gen({2, 4}); }) == ErrorCode::NotCofinite);
    CHECK(error_code_of([] { gen({}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { gen({0, 1}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { gen({100'003, 100'019}); }) == ErrorCode::ResourceBound);
}

TEST_CASE("contains") {
    const NumericalSemigroup s = gen({3, 5, 7});
    CHECK_FALSE(s.contains(4));
    CHECK(s.contains(6));
    CHECK(s.contains(0));
    CHECK(NumericalSemigroup{}.contains(0));
    CHECK_FALSE(s.contains(-1));
    CHECK_FALSE(NumericalSemigroup{}.contains(-3));
    for (std::int64_t x = s.conductor(); x < s.conductor() + 50; ++x) CHECK(s.contains(x));
}

TEST_CASE("notable elements") {
    const NumericalSemigroup n;
    CHECK(n.multiplicity() == 1);
    CHECK(n.conductor() == 0);
    CHECK(n.frobenius() == -1);
    CHECK(n.depth() == 0);
    CHECK(n.genus() == 0);

    const NumericalSemigroup s = gen({3, 5, 7});
    CHECK(s.multiplicity() == 3);
    CHECK(s.frobenius() == 4);
    CHECK(s.depth() == 2);
    CHECK(s.genus() == 3);
    CHECK(s.gaps() == std::vector<std::int64_t>{1, 2, 4});

    const NumericalSemigroup t = gen({2, 5});
    CHECK(t.multiplicity() == 2);
    CHECK(t.conductor() == 4);
    CHECK(t.frobenius() == 3);

    const NumericalSemigroup u = gen({2, 3});
    CHECK(u.depth() == 1);
    CHECK(u.genus() == 1);
}

TEST_CASE("apery data") {
    CHECK(NumericalSemigroup{}.apery() == AperyData{{0}, {}});
    CHECK(gen({3, 5, 7}).apery() == AperyData{{0, 7, 5}, {2, 1}});
    CHECK(gen({2, 5}).apery() == AperyData{{0, 5}, {2}});

    // residue minima straight from the oracle membership table
    const std::vector<std::int64_t> g{5, 7, 11};
    const auto members = oracle::members(g, 200);
    const AperyData ap = gen(g).apery();
    for (std::int64_t i = 0; i < 5; ++i) {
        std::int64_t least = i;
        while (members.count(least) == 0) least += 5;
        CHECK(ap.values[static_cast<std::size_t>(i)] == least);
    }
}

TEST_CASE("from_small_elements validates the representation") {
    CHECK(NumericalSemigroup::from_small_elements({0, 3, 5}) == gen({3, 5, 7}));
    CHECK(error_code_of([] { NumericalSemigroup::from_small_elements({}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { NumericalSemigroup::from_small_elements({1, 3}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { NumericalSemigroup::from_small_elements({0, 3, 5, 6}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { NumericalSemigroup::from_small_elements({0, 3, 5, 7}); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { NumericalSemigroup::from_small_elements({0, 5, 3, 7}); }) == ErrorCode::DomainError);
    CHECK(NumericalSemigroup::from_small_elements({0, 3, 4, 6}) == gen({3, 4}));
}

TEST_CASE("enumerate_semigroups examples") {
    const auto only_n = kunzlab::enumerate_semigroups(1, 0);
    REQUIRE(only_n.size() == 1);
    CHECK(only_n.front() == NumericalSemigroup{});

    const auto all = kunzlab::enumerate_semigroups(3, 3);
    const auto depth3 = std::count_if(all.begin(), all.end(), [](const NumericalSemigroup& s) {
        return s.multiplicity() == 3 && s.depth() == 3;
    });
    CHECK(depth3 == 4);
    CHECK(std::is_sorted(all.begin(), all.end()));

    for (int q = 1; q <= 8; ++q) {
        const auto list = kunzlab::enumerate_semigroups(2, q);
        for (int d = 1; d <= q; ++d) {
            const auto count = std::count_if(list.begin(), list.end(), [&](const NumericalSemigroup& s) {
                return s.multiplicity() == 2 && s.depth() == d;
            });
            CHECK(count == 1);
        }
    }

    CHECK(error_code_of([] { kunzlab::enumerate_semigroups(8, 5, 1000); }) == ErrorCode::ResourceBound);
    CHECK(error_code_of([] { kunzlab::enumerate_semigroups(0, 1); }) == ErrorCode::DomainError);
}

TEST_CASE("enumerated semigroups are exactly the closed gap sets") {
    // every enumerated element is a monoid, and a direct census of generator
    // sets finds no semigroup the enumerator missed
    const auto all = kunzlab::enumerate_semigroups(4, 3);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& s : all) seen.insert(s.small_elements());
    CHECK(seen.size() == all.size());
    for (std::int64_t a = 2; a <= 4; ++a) {
        for (std::int64_t b = a + 1; b <= 12; ++b) {
            for (std::int64_t c = b; c <= 12; ++c) {
                std::vector<std::int64_t> g{a, b, c};
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                const NumericalSemigroup s = gen(g);
                if (s.multiplicity() <= 4 && s.depth() <= 3) CHECK(seen.count(s.small_elements()) == 1);
            }
        }
    }
}

TEST_CASE("invariants over the census") {
    for (const NumericalSemigroup& s : kunzlab::enumerate_semigroups(6, 3)) {
        const AperyData ap = s.apery();
        const std::int64_t m = s.multiplicity();
        const std::int64_t max_kunz = ap.kunz.empty() ? 0 : *std::max_element(ap.kunz.begin(), ap.kunz.end());
        CHECK(s.depth() == max_kunz);
        CHECK(*std::max_element(ap.values.begin(), ap.values.end()) == s.conductor() + m - 1);
        REQUIRE(ap.values.size() == static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t a = ap.values[static_cast<std::size_t>(i)];
            CHECK(a % m == i);
            CHECK(s.contains(a));
            CHECK_FALSE(s.contains(a - m));
        }
        // regeneration from small elements plus a full residue system above c
        std::vector<std::int64_t> g;
        for (const std::int64_t x : s.small_elements()) {
            if (x > 0) g.push_back(x);
        }
        for (std::int64_t x = std::max<std::int64_t>(s.conductor(), 1); x < s.conductor() + m; ++x) g.push_back(x);
        if (g.empty()) g.push_back(1);
        CHECK(gen(g) == s);
    }
}
