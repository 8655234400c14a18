#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <string>

#include "kunzlab/kunzlab.h"

namespace {

struct WordDeleter {
    void operator()(kl_word* w) const { kl_word_free(w); }
};
struct SemigroupDeleter {
    void operator()(kl_semigroup* s) const { kl_semigroup_free(s); }
};
struct MachineDeleter {
    void operator()(kl_machine* m) const { kl_machine_free(m); }
};
struct RunDeleter {
    void operator()(kl_run* r) const { kl_run_free(r); }
};
using WordPtr = std::unique_ptr<kl_word, WordDeleter>;
using SemigroupPtr = std::unique_ptr<kl_semigroup, SemigroupDeleter>;
using MachinePtr = std::unique_ptr<kl_machine, MachineDeleter>;
using RunPtr = std::unique_ptr<kl_run, RunDeleter>;

WordPtr parse(const char* text) {
    kl_word* w = nullptr;
    REQUIRE(kl_word_parse(text, &w) == KL_OK);
    return WordPtr(w);
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
    std::string out = s ? s : "";
    kl_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(kl_version()) == "0.1.0");
    CHECK(std::string(kl_status_name(KL_OK)) == "OK");
    CHECK(std::string(kl_status_name(KL_ERR_NOT_COFINITE)) == "NotCofinite");
}

TEST_CASE("words") {
    WordPtr w = parse("1,12,3");
    CHECK(kl_word_length(w.get()) == 3);
    std::uint32_t letter = 0;
    CHECK(kl_word_letter(w.get(), 2, &letter) == KL_OK);
    CHECK(letter == 12);
    CHECK(kl_word_letter(w.get(), 4, &letter) == KL_ERR_INVALID_ARGUMENT);
    char* text = nullptr;
    CHECK(kl_word_format(w.get(), &text) == KL_OK);
    CHECK(take(text) == "1,12,3");

    kl_word* bad = nullptr;
    CHECK(kl_word_parse("1,x", &bad) == KL_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::string(kl_last_error()).size() > 0);
    CHECK(kl_word_parse(nullptr, &bad) == KL_ERR_INVALID_ARGUMENT);

    const std::uint32_t letters[] = {1, 1, 3};
    kl_word* raw = nullptr;
    REQUIRE(kl_word_from_letters(letters, 3, &raw) == KL_OK);
    WordPtr v(raw);
    CHECK(kl_word_is_kunz(v.get()) == 0);
    CHECK(kl_word_depth(v.get()) == 3);
    char* json = nullptr;
    CHECK(kl_word_validate_json(v.get(), &json) == KL_OK);
    CHECK(take(json) ==
          R"({"word":"1,1,3","is_kunz":false,"depth":3,"violations":[{"kind":"first","i":1,"j":2,"target":3}]})");

    const std::uint32_t zero[] = {0};
    CHECK(kl_word_from_letters(zero, 1, &raw) == KL_ERR_DOMAIN);

    kl_word* wit = nullptr;
    REQUIRE(kl_witness_kunz(3, 2, &wit) == KL_OK);
    CHECK(kl_word_format(wit, &text) == KL_OK);
    CHECK(take(text) == "1,1,2,2,3");
    kl_word_free(wit);
    REQUIRE(kl_witness_nonkunz(3, 2, 1, &wit) == KL_OK);
    CHECK(kl_word_is_kunz(wit) == 0);
    kl_word_free(wit);
    CHECK(kl_witness_kunz(2, 2, &wit) == KL_ERR_DOMAIN);
}

TEST_CASE("semigroups") {
    const std::int64_t gens[] = {3, 5, 7};
    kl_semigroup* raw = nullptr;
    REQUIRE(kl_semigroup_from_generators(gens, 3, &raw) == KL_OK);
    SemigroupPtr s(raw);
    CHECK(kl_semigroup_multiplicity(s.get()) == 3);
    CHECK(kl_semigroup_conductor(s.get()) == 5);
    CHECK(kl_semigroup_frobenius(s.get()) == 4);
    CHECK(kl_semigroup_depth(s.get()) == 2);
    CHECK(kl_semigroup_genus(s.get()) == 3);
    CHECK(kl_semigroup_contains(s.get(), 6) == 1);
    CHECK(kl_semigroup_contains(s.get(), 4) == 0);

    kl_word* w = nullptr;
    REQUIRE(kl_semigroup_to_word(s.get(), &w) == KL_OK);
    char* text = nullptr;
    kl_word_format(w, &text);
    CHECK(take(text) == "2,1");
    kl_semigroup* back = nullptr;
    REQUIRE(kl_semigroup_from_word(w, &back) == KL_OK);
    CHECK(kl_semigroup_conductor(back) == 5);
    kl_semigroup_free(back);
    kl_word_free(w);

    const std::int64_t even[] = {2, 4};
    CHECK(kl_semigroup_from_generators(even, 2, &raw) == KL_ERR_NOT_COFINITE);
    WordPtr bad = parse("1,1,3");
    CHECK(kl_semigroup_from_word(bad.get(), &raw) == KL_ERR_NOT_KUNZ);

    char* json = nullptr;
    REQUIRE(kl_enumerate_semigroups_json(1, 0, 1000, &json) == KL_OK);
    CHECK(take(json) ==
          R"([{"small_elements":[0],"conductor":0,"multiplicity":1,"frobenius":-1,"depth":0,"apery":[0],"kunz":[],"genus":0}])");
    CHECK(kl_enumerate_semigroups_json(8, 5, 10, &json) == KL_ERR_RESOURCE_BOUND);
}

TEST_CASE("languages") {
    std::uint64_t count = 0;
    CHECK(kl_count_kunz(2, 3, 1000, &count) == KL_OK);
    CHECK(count == 7);
    CHECK(kl_count_kunz(9, 12, 1000, &count) == KL_ERR_RESOURCE_BOUND);
    char* out = nullptr;
    CHECK(kl_enumerate_kunz_json(3, 2, 1000, &out) == KL_OK);
    CHECK(take(out) == R"(["2,3","3,1","3,2","3,3"])");
    CHECK(kl_census_csv(3, 2, 1000, &out) == KL_OK);
    CHECK(take(out) == "q,length,count\n3,2,4\n");

    int accepted = -1;
    WordPtr w = parse("1,2,1");
    CHECK(kl_dfa_accepts(2, w.get(), &accepted) == KL_OK);
    CHECK(accepted == 1);
    CHECK(kl_dfa_accepts(1, w.get(), &accepted) == KL_ERR_LETTER_OUT_OF_ALPHABET);
    CHECK(kl_dfa_accepts(3, w.get(), &accepted) == KL_ERR_DOMAIN);

    int flag = 0;
    CHECK(kl_nerode_json(3, 3, &out, &flag) == KL_OK);
    CHECK(flag == 1);
    kl_string_free(out);
    CHECK(kl_pumping_json(5, 1, 4, 1'000'000, &out, &flag) == KL_OK);
    CHECK(flag == 1);
    kl_string_free(out);
    CHECK(kl_pumping_json(4, 1, 4, 1'000'000, &out, &flag) == KL_ERR_DOMAIN);
}

TEST_CASE("machines and runs") {
    kl_machine* raw = nullptr;
    REQUIRE(kl_machine_k3(&raw) == KL_OK);
    MachinePtr k3(raw);
    CHECK(kl_machine_track_count(k3.get()) == 5);
    CHECK(kl_machine_max_letter(k3.get()) == 3);

    WordPtr yes = parse("1,2,3");
    kl_run* r = nullptr;
    REQUIRE(kl_machine_run(k3.get(), yes.get(), 1'000'000, 1, &r) == KL_OK);
    RunPtr run(r);
    CHECK(kl_run_accepted(run.get()) == 1);
    CHECK(kl_run_bound(run.get()) == 60);
    CHECK(kl_run_cells_used(run.get()) < 60);
    CHECK(kl_run_trace_truncated(run.get()) == 0);
    char* out = nullptr;
    REQUIRE(kl_run_json(run.get(), &out) == KL_OK);
    const std::string json = take(out);
    CHECK(json.rfind(R"({"verdict":"accept","steps":)", 0) == 0);
    REQUIRE(kl_run_trace_tsv(run.get(), &out) == KL_OK);
    const std::string tsv = take(out);
    CHECK(tsv.rfind("0\t1\tstep1\t[123]", 0) == 0);
    CHECK(static_cast<std::uint64_t>(std::count(tsv.begin(), tsv.end(), '\n')) == kl_run_steps(run.get()) + 1);

    WordPtr no = parse("1,1,2,3");
    REQUIRE(kl_machine_run(k3.get(), no.get(), 1'000'000, 0, &r) == KL_OK);
    CHECK(kl_run_accepted(r) == 0);
    CHECK(kl_run_trace_tsv(r, &out) == KL_OK);
    CHECK(take(out).empty());
    kl_run_free(r);

    WordPtr four = parse("1,4");
    CHECK(kl_machine_run(k3.get(), four.get(), 1'000'000, 0, &r) == KL_ERR_LETTER_OUT_OF_ALPHABET);
    WordPtr slow = parse("1,1,2,2,3");
    CHECK(kl_machine_run(k3.get(), slow.get(), 5, 0, &r) == KL_ERR_STEP_BUDGET_EXCEEDED);

    REQUIRE(kl_machine_kn(4, &raw) == KL_OK);
    MachinePtr k4(raw);
    WordPtr w = parse("2,3,4,4");
    REQUIRE(kl_machine_run(k4.get(), w.get(), 1'000'000, 0, &r) == KL_OK);
    CHECK(kl_run_accepted(r) == 1);
    kl_run_free(r);
    CHECK(kl_machine_kn(2, &raw) == KL_ERR_DOMAIN);
}

TEST_CASE("null handles are rejected") {
    kl_word* w = nullptr;
    CHECK(kl_word_parse("1", nullptr) == KL_ERR_INVALID_ARGUMENT);
    CHECK(kl_machine_run(nullptr, nullptr, 1, 0, nullptr) == KL_ERR_INVALID_ARGUMENT);
    kl_word_free(w);
    kl_string_free(nullptr);
}
