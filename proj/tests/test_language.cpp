#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kunzlab/kunz.hpp"
#include "kunzlab/language.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace kunzlab;

TEST_CASE("dfa examples") {
    CHECK(dfa_accepts(dfa_k2(), Word{1, 2, 1}));
    CHECK_FALSE(dfa_accepts(dfa_k2(), Word{1, 1, 1}));
    CHECK(dfa_accepts(dfa_k2(), Word{2}));
    CHECK_FALSE(dfa_accepts(dfa_k2(), Word{}));
    CHECK_FALSE(dfa_accepts(dfa_k1(), Word{}));
    CHECK(dfa_accepts(dfa_k1(), Word{1, 1}));
    CHECK(dfa_k2().state_count() == 2);
    CHECK(dfa_k1().state_count() == 2);
    CHECK(error_code_of([] { dfa_accepts(dfa_k2(), Word{1, 3}); }) == ErrorCode::LetterOutOfAlphabet);
    CHECK(error_code_of([] { dfa_accepts(dfa_k1(), Word{2}); }) == ErrorCode::LetterOutOfAlphabet);
}

TEST_CASE("dfas match the membership oracle up to length 12") {
    for (std::size_t len = 0; len <= 12; ++len) {
        oracle::for_each_word(2, len, [](const std::vector<Letter>& u) {
            CHECK(dfa_accepts(dfa_k2(), Word(u)) == oracle::in_language(2, u));
        });
        const std::vector<Letter> ones(len, 1);
        CHECK(dfa_accepts(dfa_k1(), Word(ones)) == (len >= 1));
        CHECK(oracle::in_language(1, ones) == (len >= 1));
    }
}

TEST_CASE("enumerate_kunz examples") {
    CHECK(enumerate_kunz(2, 3).size() == 7);
    CHECK(enumerate_kunz(3, 2) == std::vector<Word>{{2, 3}, {3, 1}, {3, 2}, {3, 3}});
    for (std::size_t l = 1; l <= 8; ++l) CHECK(enumerate_kunz(1, l) == std::vector<Word>{repeat(1, l)});
    CHECK(enumerate_kunz(0, 0) == std::vector<Word>{Word{}});
    CHECK(enumerate_kunz(0, 3).empty());
    CHECK(enumerate_kunz(3, 0).empty());
    CHECK(count_kunz(0, 0) == 1);
    CHECK(count_kunz(4, 0) == 0);
    CHECK(count_kunz(2, 3) == 7);
    CHECK(count_kunz(3, 2) == 4);
    CHECK(error_code_of([] { enumerate_kunz(9, 12, 1000); }) == ErrorCode::ResourceBound);
}

TEST_CASE("enumerate_kunz matches the oracle and the pruned enumerator") {
    for (Letter q = 1; q <= 4; ++q) {
        for (std::size_t len = 1; len <= 6; ++len) {
            std::vector<Word> expected;
            oracle::for_each_word(q, len, [&](const std::vector<Letter>& u) {
                if (oracle::in_language(q, u)) expected.emplace_back(u);
            });
            const auto got = enumerate_kunz(q, len);
            CHECK(got == expected);
            CHECK(enumerate_kunz_pruned(q, len) == got);
            CHECK(count_kunz(q, len) == expected.size());
        }
    }
    for (std::size_t len = 1; len <= 12; ++len) CHECK(count_kunz(2, len) == (std::uint64_t{1} << len) - 1);
}

TEST_CASE("census csv") {
    CHECK(census_csv({{2, 3, 7}, {3, 2, 4}}) == "q,length,count\n2,3,7\n3,2,4\n");
    CHECK(census_csv({}) == "q,length,count\n");
}

TEST_CASE("nerode evidence") {
    const NerodeReport r = nerode_evidence(3, 3);
    REQUIRE(r.separations.size() == 3);
    CHECK(r.all_separated());
    CHECK(r.separations[0].i == 1);
    CHECK(r.separations[0].j == 2);
    CHECK(r.separations[0].suffix == Word{2, 3});
    CHECK(r.separations[2].i == 2);
    CHECK(r.separations[2].j == 3);

    const NerodeReport r4 = nerode_evidence(4, 2);
    REQUIRE(r4.separations.size() == 1);
    CHECK(r4.separations[0].suffix == Word{2, 3, 4});
    CHECK(r4.all_separated());

    for (Letter q = 3; q <= 5; ++q) {
        for (std::size_t n = 2; n <= 8; ++n) {
            const NerodeReport big = nerode_evidence(q, n);
            CHECK(big.separations.size() == n * (n - 1) / 2);
            CHECK(big.all_separated());
            for (const auto& s : big.separations) {
                CHECK(oracle::in_language(q, repeat(1, s.i).concat(s.suffix).letters()));
                CHECK_FALSE(oracle::in_language(q, repeat(1, s.j).concat(s.suffix).letters()));
            }
        }
    }
    CHECK(error_code_of([] { nerode_evidence(2, 4); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { nerode_evidence(3, 1); }) == ErrorCode::DomainError);
}

TEST_CASE("pump") {
    const Word w{1, 2, 3};
    CHECK(pump(w, {0, 1, 1, 2}, 2) == Word{1, 1, 2, 2, 3});
    CHECK(pump(w, {0, 1, 1, 1}, 3) == Word{1, 1, 1, 2, 3});
    CHECK(pump(w, {0, 1, 1, 2}, 0) == Word{3});
    CHECK(error_code_of([&] { pump(w, {2, 1, 2, 3}, 1); }) == ErrorCode::InvalidDecomposition);
    CHECK(error_code_of([&] { pump(w, {0, 1, 2, 4}, 1); }) == ErrorCode::InvalidDecomposition);

    const Word v{1, 1, 2, 2, 3};
    for (std::size_t a = 0; a <= 5; ++a)
        for (std::size_t b = a; b <= 5; ++b)
            for (std::size_t c = b; c <= 5; ++c)
                for (std::size_t d = c; d <= 5; ++d)
                    for (std::size_t k = 0; k <= 3; ++k) {
                        const Word p = pump(v, {a, b, c, d}, k);
                        if (k == 1) CHECK(p == v);
                        const std::size_t vy = (b - a) + (d - c);
                        CHECK(p.size() == 5 - vy + k * vy);
                    }
}


TEST_CASE("bader-moura replay") {
    const BaderMouraReport r = bader_moura_refute(5, 1, 4);
    CHECK(r.word == Word{1, 1, 2, 2, 3, 3, 4, 4, 5});
    CHECK(r.n == 2);
    CHECK(r.marking.distinguished == std::vector<std::size_t>{1, 2});
    CHECK(r.marking.excluded == std::vector<std::size_t>{3, 5, 7, 9});
    CHECK(r.hypothesis_holds);
    CHECK(r.all_refuted());
    CHECK(r.survivors().empty());
    CHECK(r.decompositions_examined == 715);  // C(13, 4)

    for (Letter q : {5u, 6u}) {
        const BaderMouraReport rep = bader_moura_refute(q, 1, 4);
        const oracle::ReplayResult ref = oracle::pumping_replay(q, 1, 4);
        CHECK(rep.records.size() == ref.valid);
        CHECK(ref.survivors.empty());
        CHECK(rep.all_refuted());
        for (const PumpRecord& rec : rep.records) {
            if (rec.outcome == PumpOutcome::NoRefutation) continue;
            const Word pumped = pump(rep.word, rec.cuts, rec.k);
            CHECK_FALSE(oracle::in_language(q, pumped.letters()));
            if (rec.outcome == PumpOutcome::WrongDepth) CHECK(oracle::is_kunz(pumped.letters()));
        }
    }

    // small k_max leaves survivors, and they agree with the replay
    const BaderMouraReport weak = bader_moura_refute(5, 1, 0);
    const oracle::ReplayResult weak_ref = oracle::pumping_replay(5, 1, 0);
    std::set<std::array<std::size_t, 4>> got;
    for (const Decomposition& d : weak.survivors()) got.insert({d.c1, d.c2, d.c3, d.c4});
    CHECK(got == weak_ref.survivors);

    CHECK(error_code_of([] { bader_moura_refute(4, 1, 4); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { bader_moura_refute(5, 0, 4); }) == ErrorCode::DomainError);
    CHECK(error_code_of([] { bader_moura_refute(5, 2, 4, 1000); }) == ErrorCode::ResourceBound);
}
