#include "kunzlab/language.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kunzlab/kunz.hpp"

namespace kunzlab {

Dfa::Dfa(std::size_t state_count, std::vector<Letter> alphabet, int start, std::vector<bool> accepting,
         std::vector<std::vector<int>> transition)
    : alphabet_(std::move(alphabet)), start_(start), accepting_(std::move(accepting)), transition_(std::move(transition)) {
    const auto states = static_cast<int>(state_count);
    if (accepting_.size() != state_count || transition_.size() != state_count || start_ < 0 || start_ >= states) {
        throw Error(ErrorCode::DomainError, "dfa: state table does not match state count");
    }
    for (const auto& row : transition_) {
        if (row.size() != alphabet_.size()) throw Error(ErrorCode::DomainError, "dfa: transition map is not total");
        for (const int to : row) {
            if (to < 0 || to >= states) throw Error(ErrorCode::DomainError, "dfa: transition to unknown state");
        }
    }
}

int Dfa::step(int state, Letter letter) const {
    const auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end()) {
        throw Error(ErrorCode::LetterOutOfAlphabet, "letter " + std::to_string(letter) + " is not in the dfa alphabet");
    }
    return transition_.at(static_cast<std::size_t>(state))[static_cast<std::size_t>(it - alphabet_.begin())];
}

Dfa dfa_k1() {
    // q0 --1--> q1, q1 --1--> q1
    return Dfa(2, {1}, 0, {false, true}, {{1}, {1}});
}

Dfa dfa_k2() {
    // q0 --1--> q0, q0 --2--> q1, q1 --1,2--> q1
    return Dfa(2, {1, 2}, 0, {false, true}, {{0, 1}, {1, 1}});
}

bool dfa_accepts(const Dfa& d, const Word& w) {
    int state = d.start();
    for (const Letter a : w.letters()) state = d.step(state, a);
    return d.is_accepting(state);
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
    }
    return out;
}

}  // namespace

std::vector<Word> enumerate_kunz(Letter q, std::size_t length, std::uint64_t max_candidates) {
    if (q == 0) return length == 0 ? std::vector<Word>{Word{}} : std::vector<Word>{};
    if (length == 0) return {};
    const std::uint64_t candidates = saturating_pow(q, length);
    if (candidates > max_candidates) {
        throw Error(ErrorCode::ResourceBound, std::to_string(q) + "^" + std::to_string(length) + " candidates exceed " +
                                                  std::to_string(max_candidates));
    }
    std::vector<Word> out;
    std::vector<Letter> letters(length, 1);
    while (true) {
        Word w(letters);
        if (in_kunz_language(q, w)) out.push_back(std::move(w));
        std::size_t pos = length;
        while (pos > 0 && letters[pos - 1] == q) letters[--pos] = 1;
        if (pos == 0) break;
        ++letters[pos - 1];
    }
    return out;
}

std::vector<Word> enumerate_kunz_pruned(Letter q, std::size_t length) {
    if (q == 0) return length == 0 ? std::vector<Word>{Word{}} : std::vector<Word>{};
    if (length == 0) return {};
    std::vector<Word> out;
    std::vector<Letter> prefix;
    prefix.reserve(length);
    // Placing position p closes every first condition with target p.
    auto fits = [&](Letter a) {
        const std::size_t p = prefix.size() + 1;
        for (std::size_t i = 1; 2 * i <= p; ++i) {
            if (prefix[i - 1] + prefix[p - i - 1] < a) return false;
        }
        return true;
    };
    auto extend = [&](auto&& self) -> void {
        if (prefix.size() == length) {
            Word w(prefix);
            if (in_kunz_language(q, w)) out.push_back(std::move(w));
            return;
        }
        for (Letter a = 1; a <= q; ++a) {
            if (!fits(a)) continue;
            prefix.push_back(a);
            self(self);
            prefix.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::uint64_t count_kunz(Letter q, std::size_t length, std::uint64_t max_candidates) {
    return enumerate_kunz(q, length, max_candidates).size();
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "q,length,count\n";
    for (const CensusRow& r : rows) out << r.q << ',' << r.length << ',' << r.count << '\n';
    return out.str();
}

bool NerodeReport::all_separated() const {
    return std::all_of(separations.begin(), separations.end(),
                       [](const NerodeSeparation& s) { return s.member_i && !s.member_j; });
}

NerodeReport nerode_evidence(Letter q, std::size_t max_prefix) {
    if (q < 3) throw Error(ErrorCode::DomainError, "nerode_evidence needs q >= 3");
    if (max_prefix < 2) throw Error(ErrorCode::DomainError, "nerode_evidence needs at least two prefixes");
    NerodeReport report{q, max_prefix, {}};
    for (std::size_t i = 1; i <= max_prefix; ++i) {
        const Word full = witness_kunz(q, i);
        const Word suffix(std::vector<Letter>(full.letters().begin() + static_cast<std::ptrdiff_t>(i), full.letters().end()));
        for (std::size_t j = i + 1; j <= max_prefix; ++j) {
            report.separations.push_back({i, j, suffix, in_kunz_language(q, repeat(1, i).concat(suffix)),
                                          in_kunz_language(q, repeat(1, j).concat(suffix))});
        }
    }
    return report;
}

bool Decomposition::valid_for(const Word& w) const noexcept {
    return c1 <= c2 && c2 <= c3 && c3 <= c4 && c4 <= w.size();
}

Word pump(const Word& w, const Decomposition& d, std::size_t k) {
    if (!d.valid_for(w)) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "cuts " + std::to_string(d.c1) + "," + std::to_string(d.c2) + "," + std::to_string(d.c3) + "," +
                        std::to_string(d.c4) + " do not split a word of length " + std::to_string(w.size()));
    }
    const auto& a = w.letters();
    auto piece = [&](std::size_t from, std::size_t to) {
        return std::vector<Letter>(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
    };
    std::vector<Letter> out = piece(0, d.c1);
    const auto v = piece(d.c1, d.c2);
    const auto x = piece(d.c2, d.c3);
    const auto y = piece(d.c3, d.c4);
    for (std::size_t r = 0; r < k; ++r) out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), x.begin(), x.end());
    for (std::size_t r = 0; r < k; ++r) out.insert(out.end(), y.begin(), y.end());
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(d.c4), a.end());
    return Word(std::move(out));
}

bool BaderMouraReport::all_refuted() const {
    return std::none_of(records.begin(), records.end(),
                        [](const PumpRecord& r) { return r.outcome == PumpOutcome::NoRefutation; });
}

std::vector<Decomposition> BaderMouraReport::survivors() const {
    std::vector<Decomposition> out;
    for (const PumpRecord& r : records) {
        if (r.outcome == PumpOutcome::NoRefutation) out.push_back(r.cuts);
    }
    return out;
}

BaderMouraReport bader_moura_refute(Letter q, std::uint64_t p, std::size_t k_max, std::uint64_t max_candidates) {
    if (q < 5) {
        throw Error(ErrorCode::DomainError, "the distinguished/excluded pumping argument only covers q >= 5");
    }
    if (p < 1) throw Error(ErrorCode::DomainError, "pumping constant p must be >= 1");
    const std::uint64_t pq = saturating_pow(p, q);
    if (pq >= max_candidates) {
        throw Error(ErrorCode::ResourceBound, "block length p^q + 1 is beyond the candidate ceiling");
    }
    const std::size_t n = static_cast<std::size_t>(pq) + 1;
    const std::size_t len = (q - 1) * n + 1;
    // C(len + 4, 4) cut-point choices
    const double choices = static_cast<double>(len + 4) * static_cast<double>(len + 3) * static_cast<double>(len + 2) *
                           static_cast<double>(len + 1) / 24.0;
    if (choices > static_cast<double>(max_candidates)) {
        throw Error(ErrorCode::ResourceBound, "decomposition search of a length-" + std::to_string(len) +
                                                  " word exceeds " + std::to_string(max_candidates) + " candidates");
    }

    BaderMouraReport report;
    report.q = q;
    report.p = p;
    report.n = n;
    report.k_max = k_max;
    report.word = witness_kunz(q, n);
    for (std::size_t pos = 1; pos <= n; ++pos) report.marking.distinguished.push_back(pos);
    for (Letter a = 1; a < q; ++a) report.marking.excluded.push_back(a * n + 1);
    const std::size_t d_w = report.marking.distinguished.size();
    const std::size_t e_w = report.marking.excluded.size();
    report.hypothesis_holds = d_w > saturating_pow(p, e_w + 1);

    // prefix counts over cut positions 0..len
    std::vector<std::size_t> dist(len + 1, 0), excl(len + 1, 0);
    for (std::size_t pos = 1; pos <= len; ++pos) {
        dist[pos] = dist[pos - 1] + (pos <= n ? 1 : 0);
        excl[pos] = excl[pos - 1] +
                    (std::find(report.marking.excluded.begin(), report.marking.excluded.end(), pos) !=
                             report.marking.excluded.end()
                         ? 1
                         : 0);
    }
    auto d_of = [&](std::size_t a, std::size_t b) { return dist[b] - dist[a]; };
    auto e_of = [&](std::size_t a, std::size_t b) { return excl[b] - excl[a]; };

    std::uint64_t examined = 0;
    for (std::size_t c1 = 0; c1 <= len; ++c1) {
        for (std::size_t c2 = c1; c2 <= len; ++c2) {
            for (std::size_t c3 = c2; c3 <= len; ++c3) {
                for (std::size_t c4 = c3; c4 <= len; ++c4) {
                    ++examined;
                    if (d_of(c1, c2) + d_of(c3, c4) < 1) continue;
                    if (e_of(c1, c2) + e_of(c3, c4) != 0) continue;
                    if (d_of(c1, c4) > saturating_pow(p, e_of(c1, c4) + 1)) continue;
                    PumpRecord record{{c1, c2, c3, c4}, PumpOutcome::NoRefutation, 0};
                    for (std::size_t k = 0; k <= k_max; ++k) {
                        const Word pumped = pump(report.word, record.cuts, k);
                        if (!is_kunz(pumped)) {
                            record.outcome = PumpOutcome::NotKunz;
                        } else if (word_depth(pumped) != q) {
                            record.outcome = PumpOutcome::WrongDepth;
                        } else {
                            continue;
                        }
                        record.k = k;
                        break;
                    }
                    report.records.push_back(record);
                }
            }
        }
    }
    report.decompositions_examined = examined;
    return report;
}

}  // namespace kunzlab
