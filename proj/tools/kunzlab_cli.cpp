// Command-line front end. Talks to the library only through kunzlab.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kunzlab/kunzlab.h"

namespace {

// Exit codes
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;
constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

struct Failure {
    kl_status status;
};

void check(kl_status s) {
    if (s != KL_OK) throw Failure{s};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    kl_string_free(s);
    return out;
}

struct WordDeleter {
    void operator()(kl_word* w) const { kl_word_free(w); }
};
using WordPtr = std::unique_ptr<kl_word, WordDeleter>;

WordPtr parse_word(const std::string& text) {
    kl_word* w = nullptr;
    check(kl_word_parse(text.c_str(), &w));
    return WordPtr(w);
}

std::uint64_t env_max_candidates() {
    const char* env = std::getenv("KUNZLAB_MAX_CANDIDATES");
    if (env == nullptr || *env == '\0') return kDefaultMaxCandidates;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid KUNZLAB_MAX_CANDIDATES=" << env << "\n";
    return kDefaultMaxCandidates;
}

// Errors that answer the question negatively rather than misuse the tool.
bool is_negative(kl_status s) { return s == KL_ERR_NOT_KUNZ || s == KL_ERR_NOT_COFINITE; }

int report_failure(kl_status s) {
    std::cerr << "error: " << kl_status_name(s) << ": " << kl_last_error() << "\n";
    if (is_negative(s)) {
        nlohmann::ordered_json j;
        j["error"] = kl_status_name(s);
        j["message"] = kl_last_error();
        std::cout << j.dump() << "\n";
        return kNegative;
    }
    return kUsage;
}

std::vector<std::int64_t> parse_generators(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || !std::isdigit(static_cast<unsigned char>(item[0]))) {
            throw CLI::ValidationError("--gens", "expected comma-separated nonnegative integers, got '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "N" or "A..B"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size() || !std::isdigit(static_cast<unsigned char>(s[0]))) {
            throw CLI::ValidationError("--length", "expected N or A..B, got '" + text + "'");
        }
        return static_cast<std::size_t>(v);
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t n = number(text);
        return {n, n};
    }
    const std::size_t a = number(text.substr(0, dots));
    const std::size_t b = number(text.substr(dots + 2));
    if (a > b) throw CLI::ValidationError("--length", "empty range '" + text + "'");
    return {a, b};
}

int cmd_validate(const std::string& text) {
    WordPtr w = parse_word(text);
    char* json = nullptr;
    check(kl_word_validate_json(w.get(), &json));
    std::cout << take(json) << "\n";
    return kl_word_is_kunz(w.get()) ? kOk : kNegative;
}

int cmd_semigroup(const std::optional<std::string>& gens, const std::optional<std::string>& word) {
    kl_semigroup* s = nullptr;
    if (gens) {
        const std::vector<std::int64_t> g = parse_generators(*gens);
        check(kl_semigroup_from_generators(g.data(), g.size(), &s));
    } else {
        WordPtr w = parse_word(*word);
        check(kl_semigroup_from_word(w.get(), &s));
    }
    char* json = nullptr;
    const kl_status st = kl_semigroup_json(s, &json);
    kl_semigroup_free(s);
    check(st);
    std::cout << take(json) << "\n";
    return kOk;
}

int cmd_enumerate(std::uint32_t q, const std::string& length, bool count_only, std::uint64_t max_candidates) {
    const auto [lo, hi] = parse_range(length);
    if (count_only) {
        std::string csv;
        for (std::size_t l = lo; l <= hi; ++l) {
            char* out = nullptr;
            check(kl_census_csv(q, l, max_candidates, &out));
            std::string rows = take(out);
            if (!csv.empty()) rows = rows.substr(rows.find('\n') + 1);
            csv += rows;
        }
        std::cout << csv;
        return kOk;
    }
    if (lo != hi) throw CLI::ValidationError("--length", "a range needs --count-only");
    char* json = nullptr;
    check(kl_enumerate_kunz_json(q, lo, max_candidates, &json));
    std::cout << take(json) << "\n";
    return kOk;
}

int cmd_lba(std::uint32_t n, const std::string& text, bool trace, bool generic, std::uint64_t max_steps) {
    WordPtr w = parse_word(text);
    kl_machine* m = nullptr;
    check(n == 3 && !generic ? kl_machine_k3(&m) : kl_machine_kn(n, &m));
    kl_run* r = nullptr;
    const kl_status st = kl_machine_run(m, w.get(), max_steps, trace ? 1 : 0, &r);
    kl_machine_free(m);
    check(st);
    char* json = nullptr;
    char* tsv = nullptr;
    const kl_status js = kl_run_json(r, &json);
    const kl_status ts = trace ? kl_run_trace_tsv(r, &tsv) : KL_OK;
    const bool accepted = kl_run_accepted(r) != 0;
    const bool truncated = kl_run_trace_truncated(r) != 0;
    kl_run_free(r);
    check(js);
    check(ts);
    if (trace) {
        std::cerr << take(tsv);
        if (truncated) std::cerr << "# trace truncated\n";
    }
    std::cout << take(json) << "\n";
    return accepted ? kOk : kNegative;
}

int cmd_witness(const std::vector<std::size_t>& kunz, const std::vector<std::size_t>& nonkunz) {
    kl_word* raw = nullptr;
    if (!kunz.empty()) {
        check(kl_witness_kunz(static_cast<std::uint32_t>(kunz[0]), kunz[1], &raw));
    } else {
        check(kl_witness_nonkunz(static_cast<std::uint32_t>(nonkunz[0]), nonkunz[1], nonkunz[2], &raw));
    }
    WordPtr w(raw);
    char* json = nullptr;
    check(kl_word_validate_json(w.get(), &json));
    std::cout << take(json) << "\n";
    return kOk;
}

int cmd_nerode(std::uint32_t q, std::size_t max_prefix) {
    char* json = nullptr;
    int all = 0;
    check(kl_nerode_json(q, max_prefix, &json, &all));
    std::cout << take(json) << "\n";
    return all ? kOk : kNegative;
}

int cmd_pumping(std::uint32_t q, std::uint64_t p, std::size_t k_max, std::uint64_t max_candidates) {
    char* json = nullptr;
    int all = 0;
    check(kl_pumping_json(q, p, k_max, max_candidates, &json, &all));
    std::cout << take(json) << "\n";
    return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical semigroups, Kunz words and their languages"};
    app.set_version_flag("--version", std::string(kl_version()));
    app.require_subcommand(1);

    std::uint64_t max_candidates = env_max_candidates();
    std::uint64_t max_steps = kDefaultMaxSteps;

    std::string validate_word;
    auto* validate = app.add_subcommand("validate", "Test whether a word is Kunz");
    validate->add_option("word", validate_word, "Comma-separated letters, \"\" for the empty word")->required();

    std::optional<std::string> gens;
    std::optional<std::string> sg_word;
    auto* semigroup = app.add_subcommand("semigroup", "Describe a numerical semigroup");
    auto* gens_opt = semigroup->add_option("--gens", gens, "Generators, e.g. 3,5,7");
    auto* word_opt = semigroup->add_option("--word", sg_word, "Kunz word, e.g. 2,1");
    gens_opt->excludes(word_opt);
    semigroup->require_option(1);

    std::uint32_t enum_depth = 0;
    std::string enum_length;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List the Kunz words of a depth and length");
    enumerate->add_option("--depth", enum_depth, "Depth q")->required();
    enumerate->add_option("--length", enum_length, "Length N, or A..B together with --count-only")->required();
    enumerate->add_flag("--count-only", count_only, "Print a q,length,count CSV instead of words");
    enumerate->add_option("--max-candidates", max_candidates, "Candidate ceiling (env KUNZLAB_MAX_CANDIDATES)")
        ->capture_default_str();

    std::uint32_t lba_depth = 0;
    std::string lba_word;
    bool trace = false;
    bool generic = false;
    auto* lba = app.add_subcommand("lba", "Run the bounded-tape recogniser of K_n");
    lba->add_option("--depth", lba_depth, "n, between 3 and 16")->required();
    lba->add_option("--word", lba_word, "Input word")->required();
    lba->add_flag("--trace", trace, "Write a tab-separated step trace to stderr");
    lba->add_flag("--generic", generic, "Use the generic machine for n = 3 too");
    lba->add_option("--max-steps", max_steps, "Step budget")->capture_default_str();

    std::vector<std::size_t> kunz_args;
    std::vector<std::size_t> nonkunz_args;
    auto* witness = app.add_subcommand("witness", "Print a witness word");
    auto* kunz_opt = witness->add_option("--kunz", kunz_args, "q n")->expected(2);
    auto* nonkunz_opt = witness->add_option("--nonkunz", nonkunz_args, "q n m")->expected(3);
    kunz_opt->excludes(nonkunz_opt);
    witness->require_option(1);

    std::uint32_t nerode_depth = 0;
    std::size_t nerode_max = 0;
    auto* nerode = app.add_subcommand("nerode", "Pairwise separations of 1-prefixes");
    nerode->add_option("--depth", nerode_depth, "q >= 3")->required();
    nerode->add_option("--max", nerode_max, "Largest prefix length N >= 2")->required();

    std::uint32_t pump_depth = 0;
    std::uint64_t pump_p = 0;
    std::size_t pump_kmax = 0;
    auto* pumping = app.add_subcommand("pumping", "Replay the pumping argument with distinguished positions");
    pumping->add_option("--depth", pump_depth, "q >= 5")->required();
    pumping->add_option("--p", pump_p, "Pumping constant p >= 1")->required();
    pumping->add_option("--kmax", pump_kmax, "Largest exponent tried")->required();
    pumping->add_option("--max-candidates", max_candidates, "Decomposition ceiling (env KUNZLAB_MAX_CANDIDATES)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*validate) return cmd_validate(validate_word);
        if (*semigroup) return cmd_semigroup(gens, sg_word);
        if (*enumerate) return cmd_enumerate(enum_depth, enum_length, count_only, max_candidates);
        if (*lba) return cmd_lba(lba_depth, lba_word, trace, generic, max_steps);
        if (*witness) return cmd_witness(kunz_args, nonkunz_args);
        if (*nerode) return cmd_nerode(nerode_depth, nerode_max);
        if (*pumping) return cmd_pumping(pump_depth, pump_p, pump_kmax, max_candidates);
    } catch (const Failure& f) {
        return report_failure(f.status);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
