#include "kunzlab/kunzlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "kunzlab/error.hpp"
#include "kunzlab/json_io.hpp"
#include "kunzlab/kunz.hpp"
#include "kunzlab/language.hpp"
#include "kunzlab/lba.hpp"
#include "kunzlab/machines.hpp"
#include "kunzlab/semigroup.hpp"

struct kl_word {
    kunzlab::Word value;
};
struct kl_semigroup {
    kunzlab::NumericalSemigroup value;
};
struct kl_machine {
    kunzlab::lba::LbaMachine value;
};
struct kl_run {
    kunzlab::lba::RunResult value;
};

namespace {

thread_local std::string last_error;

kl_status map_code(kunzlab::ErrorCode code) {
    using kunzlab::ErrorCode;
    switch (code) {
        case ErrorCode::NotCofinite: return KL_ERR_NOT_COFINITE;
        case ErrorCode::NotKunz: return KL_ERR_NOT_KUNZ;
        case ErrorCode::DomainError: return KL_ERR_DOMAIN;
        case ErrorCode::ResourceBound: return KL_ERR_RESOURCE_BOUND;
        case ErrorCode::LetterOutOfAlphabet: return KL_ERR_LETTER_OUT_OF_ALPHABET;
        case ErrorCode::InvalidDecomposition: return KL_ERR_INVALID_DECOMPOSITION;
        case ErrorCode::StepBudgetExceeded: return KL_ERR_STEP_BUDGET_EXCEEDED;
        case ErrorCode::ParseError: return KL_ERR_PARSE;
    }
    return KL_ERR_INTERNAL;
}

template <typename Body>
kl_status guarded(Body&& body) {
    try {
        last_error.clear();
        body();
        return KL_OK;
    } catch (const kunzlab::Error& e) {
        last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return KL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return KL_ERR_INTERNAL;
    }
}

kl_status null_argument() {
    last_error = "null argument";
    return KL_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* kl_version(void) { return "0.1.0"; }

const char* kl_status_name(kl_status status) {
    switch (status) {
        case KL_OK: return "OK";
        case KL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case KL_ERR_PARSE: return "ParseError";
        case KL_ERR_NOT_COFINITE: return "NotCofinite";
        case KL_ERR_NOT_KUNZ: return "NotKunz";
        case KL_ERR_DOMAIN: return "DomainError";
        case KL_ERR_RESOURCE_BOUND: return "ResourceBound";
        case KL_ERR_LETTER_OUT_OF_ALPHABET: return "LetterOutOfAlphabet";
        case KL_ERR_INVALID_DECOMPOSITION: return "InvalidDecomposition";
        case KL_ERR_STEP_BUDGET_EXCEEDED: return "StepBudgetExceeded";
        case KL_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* kl_last_error(void) { return last_error.c_str(); }

void kl_string_free(char* s) { std::free(s); }

kl_status kl_word_parse(const char* text, kl_word** out) {
    if (text == nullptr || out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_word{kunzlab::Word::parse(text)}; });
}

kl_status kl_word_from_letters(const uint32_t* letters, size_t length, kl_word** out) {
    if ((letters == nullptr && length > 0) || out == nullptr) return null_argument();
    return guarded([&] {
        *out = new kl_word{kunzlab::Word(std::vector<kunzlab::Letter>(letters, letters + length))};
    });
}

void kl_word_free(kl_word* w) { delete w; }

size_t kl_word_length(const kl_word* w) { return w ? w->value.size() : 0; }

kl_status kl_word_letter(const kl_word* w, size_t index, uint32_t* out) {
    if (w == nullptr || out == nullptr) return null_argument();
    if (index < 1 || index > w->value.size()) {
        last_error = "index " + std::to_string(index) + " outside [1, " + std::to_string(w->value.size()) + "]";
        return KL_ERR_INVALID_ARGUMENT;
    }
    *out = w->value.letter(index);
    return KL_OK;
}

kl_status kl_word_format(const kl_word* w, char** out) {
    if (w == nullptr || out == nullptr) return null_argument();
    return guarded([&] { *out = copy_string(w->value.to_string()); });
}

int kl_word_is_kunz(const kl_word* w) { return w && kunzlab::is_kunz(w->value) ? 1 : 0; }

uint32_t kl_word_depth(const kl_word* w) { return w ? kunzlab::word_depth(w->value) : 0; }

kl_status kl_word_validate_json(const kl_word* w, char** out_json) {
    if (w == nullptr || out_json == nullptr) return null_argument();
    return guarded([&] { *out_json = copy_string(kunzlab::validation_json(w->value).dump()); });
}

kl_status kl_witness_kunz(uint32_t q, size_t n, kl_word** out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_word{kunzlab::witness_kunz(q, n)}; });
}

kl_status kl_witness_nonkunz(uint32_t q, size_t n, size_t m, kl_word** out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_word{kunzlab::witness_nonkunz(q, n, m)}; });
}

kl_status kl_semigroup_from_generators(const int64_t* gens, size_t count, kl_semigroup** out) {
    if ((gens == nullptr && count > 0) || out == nullptr) return null_argument();
    return guarded([&] {
        const std::vector<std::int64_t> g(gens, gens + count);
        *out = new kl_semigroup{kunzlab::NumericalSemigroup::from_generators(g)};
    });
}

kl_status kl_semigroup_from_word(const kl_word* w, kl_semigroup** out) {
    if (w == nullptr || out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_semigroup{kunzlab::to_semigroup(w->value)}; });
}

kl_status kl_semigroup_to_word(const kl_semigroup* s, kl_word** out) {
    if (s == nullptr || out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_word{kunzlab::from_semigroup(s->value)}; });
}

void kl_semigroup_free(kl_semigroup* s) { delete s; }

int kl_semigroup_contains(const kl_semigroup* s, int64_t x) { return s && s->value.contains(x) ? 1 : 0; }
int64_t kl_semigroup_multiplicity(const kl_semigroup* s) { return s ? s->value.multiplicity() : 0; }
int64_t kl_semigroup_conductor(const kl_semigroup* s) { return s ? s->value.conductor() : 0; }
int64_t kl_semigroup_frobenius(const kl_semigroup* s) { return s ? s->value.frobenius() : 0; }
int64_t kl_semigroup_depth(const kl_semigroup* s) { return s ? s->value.depth() : 0; }
int64_t kl_semigroup_genus(const kl_semigroup* s) { return s ? s->value.genus() : 0; }

kl_status kl_semigroup_json(const kl_semigroup* s, char** out_json) {
    if (s == nullptr || out_json == nullptr) return null_argument();
    return guarded([&] { *out_json = copy_string(kunzlab::to_json(s->value).dump()); });
}

kl_status kl_enumerate_semigroups_json(int max_multiplicity, int max_depth, uint64_t max_candidates, char** out_json) {
    if (out_json == nullptr) return null_argument();
    return guarded([&] {
        kunzlab::Json j = kunzlab::Json::array();
        for (const auto& s : kunzlab::enumerate_semigroups(max_multiplicity, max_depth, max_candidates)) {
            j.push_back(kunzlab::to_json(s));
        }
        *out_json = copy_string(j.dump());
    });
}

kl_status kl_count_kunz(uint32_t q, size_t length, uint64_t max_candidates, uint64_t* out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = kunzlab::count_kunz(q, length, max_candidates); });
}

kl_status kl_enumerate_kunz_json(uint32_t q, size_t length, uint64_t max_candidates, char** out_json) {
    if (out_json == nullptr) return null_argument();
    return guarded([&] {
        *out_json = copy_string(kunzlab::to_json(kunzlab::enumerate_kunz(q, length, max_candidates)).dump());
    });
}

kl_status kl_census_csv(uint32_t q, size_t length, uint64_t max_candidates, char** out_csv) {
    if (out_csv == nullptr) return null_argument();
    return guarded([&] {
        const kunzlab::CensusRow row{q, length, kunzlab::count_kunz(q, length, max_candidates)};
        *out_csv = copy_string(kunzlab::census_csv({row}));
    });
}

kl_status kl_dfa_accepts(uint32_t q, const kl_word* w, int* accepted) {
    if (w == nullptr || accepted == nullptr) return null_argument();
    return guarded([&] {
        if (q == 1) *accepted = kunzlab::dfa_accepts(kunzlab::dfa_k1(), w->value) ? 1 : 0;
        else if (q == 2) *accepted = kunzlab::dfa_accepts(kunzlab::dfa_k2(), w->value) ? 1 : 0;
        else throw kunzlab::Error(kunzlab::ErrorCode::DomainError, "finite accepters exist only for depth 1 and 2");
    });
}

kl_status kl_nerode_json(uint32_t q, size_t max_prefix, char** out_json, int* all_separated) {
    if (out_json == nullptr) return null_argument();
    return guarded([&] {
        const kunzlab::NerodeReport report = kunzlab::nerode_evidence(q, max_prefix);
        *out_json = copy_string(kunzlab::to_json(report).dump());
        if (all_separated) *all_separated = report.all_separated() ? 1 : 0;
    });
}

kl_status kl_pumping_json(uint32_t q, uint64_t p, size_t k_max, uint64_t max_candidates, char** out_json,
                          int* all_refuted) {
    if (out_json == nullptr) return null_argument();
    return guarded([&] {
        const kunzlab::BaderMouraReport report = kunzlab::bader_moura_refute(q, p, k_max, max_candidates);
        *out_json = copy_string(kunzlab::to_json(report).dump());
        if (all_refuted) *all_refuted = report.all_refuted() ? 1 : 0;
    });
}

kl_status kl_machine_k3(kl_machine** out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_machine{kunzlab::lba::build_k3_machine()}; });
}

kl_status kl_machine_kn(uint32_t n, kl_machine** out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_machine{kunzlab::lba::build_kn_machine(n)}; });
}

void kl_machine_free(kl_machine* m) { delete m; }
int kl_machine_track_count(const kl_machine* m) { return m ? m->value.track_count() : 0; }
uint32_t kl_machine_max_letter(const kl_machine* m) { return m ? m->value.max_letter() : 0; }

kl_status kl_machine_run(const kl_machine* m, const kl_word* w, uint64_t max_steps, int want_trace, kl_run** out) {
    if (m == nullptr || w == nullptr || out == nullptr) return null_argument();
    return guarded([&] { *out = new kl_run{kunzlab::lba::run(m->value, w->value, max_steps, want_trace != 0)}; });
}

void kl_run_free(kl_run* r) { delete r; }
int kl_run_accepted(const kl_run* r) { return r && r->value.verdict == kunzlab::lba::Verdict::Accept ? 1 : 0; }
uint64_t kl_run_steps(const kl_run* r) { return r ? r->value.steps : 0; }
uint64_t kl_run_cells_used(const kl_run* r) { return r ? r->value.cells_used : 0; }
uint64_t kl_run_bound(const kl_run* r) { return r ? r->value.bound : 0; }

kl_status kl_run_json(const kl_run* r, char** out_json) {
    if (r == nullptr || out_json == nullptr) return null_argument();
    return guarded([&] { *out_json = copy_string(kunzlab::to_json(r->value).dump()); });
}

kl_status kl_run_trace_tsv(const kl_run* r, char** out_tsv) {
    if (r == nullptr || out_tsv == nullptr) return null_argument();
    return guarded([&] {
        std::string text;
        for (const auto& entry : r->value.trace) text += kunzlab::lba::format_trace_line(entry) + '\n';
        *out_tsv = copy_string(text);
    });
}

int kl_run_trace_truncated(const kl_run* r) { return r && r->value.trace_truncated ? 1 : 0; }

}  // extern "C"
