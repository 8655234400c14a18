#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kunzlab/error.hpp"
#include "kunzlab/word.hpp"

namespace kunzlab {

/// Deterministic finite accepter over a small set of positive letters.
/// States are 0..state_count-1 and transitions are total.
class Dfa {
public:
    Dfa(std::size_t state_count, std::vector<Letter> alphabet, int start,
        std::vector<bool> accepting, std::vector<std::vector<int>> transition);

    std::size_t state_count() const noexcept { return accepting_.size(); }
    const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
    int start() const noexcept { return start_; }
    bool is_accepting(int state) const { return accepting_.at(state); }

    /// Next state; throws LetterOutOfAlphabet.
    int step(int state, Letter letter) const;

private:
    std::vector<Letter> alphabet_;
    int start_;
    std::vector<bool> accepting_;
    // transition_[state][alphabet index]
    std::vector<std::vector<int>> transition_;
};

/// Two states over {1}, accepting {1}^+.
Dfa dfa_k1();

/// The two-state machine over {1,2}: 1 loops on the start state, 2 moves to
/// the accepting state, which loops on both letters.
Dfa dfa_k2();

/// Throws LetterOutOfAlphabet when w uses a letter outside d.alphabet().
bool dfa_accepts(const Dfa& d, const Word& w);

/// All q-Kunz words of the given length over {1..q}, lexicographic. Plain
/// generate-and-test; throws ResourceBound when q^length > max_candidates.
std::vector<Word> enumerate_kunz(Letter q, std::size_t length,
                                 std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Same set as enumerate_kunz, produced by depth-first extension with prefix
/// pruning on first-condition constraints whose target is already placed.
/// Only used to cross-check; the second condition is tested on full words.
std::vector<Word> enumerate_kunz_pruned(Letter q, std::size_t length);

std::uint64_t count_kunz(Letter q, std::size_t length,
                         std::uint64_t max_candidates = kDefaultMaxCandidates);

struct CensusRow {
    Letter q;
    std::size_t length;
    std::uint64_t count;
};

/// CSV with header "q,length,count", one row per entry.
std::string census_csv(const std::vector<CensusRow>& rows);

/// One Myhill-Nerode separation: prefix 1^i and 1^j with suffix s, where
/// 1^i s is in K_q and 1^j s is not.
struct NerodeSeparation {
    std::size_t i;
    std::size_t j;
    Word suffix;
    bool member_i;
    bool member_j;
};

struct NerodeReport {
    Letter q;
    std::size_t max_prefix;
    std::vector<NerodeSeparation> separations;

    /// True when every recorded pair came out as (member, non-member).
    bool all_separated() const;
};

/// Pairs 1 <= i < j <= max_prefix separated by the suffix 2^i 3^i ... (q-1)^i q.
/// Membership is re-evaluated through is_kunz for every entry.
NerodeReport nerode_evidence(Letter q, std::size_t max_prefix);

/// Cut points 0 <= c1 <= c2 <= c3 <= c4 <= |w| splitting w = u v x y z.
struct Decomposition {
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    std::size_t c3 = 0;
    std::size_t c4 = 0;

    bool valid_for(const Word& w) const noexcept;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// u v^k x y^k z. Throws InvalidDecomposition.
Word pump(const Word& w, const Decomposition& d, std::size_t k);

/// Distinguished and excluded positions (1-based, disjoint) of a word.
struct PositionMarking {
    std::vector<std::size_t> distinguished;
    std::vector<std::size_t> excluded;
};

enum class PumpOutcome {
    NotKunz,       // some pumped word fails a Kunz condition
    WrongDepth,    // pumped word is Kunz but its maximum letter is not q
    NoRefutation,  // survived every k in [0, k_max]
};

struct PumpRecord {
    Decomposition cuts;
    PumpOutcome outcome;
    std::size_t k;  // the refuting exponent; meaningless for NoRefutation
};

struct BaderMouraReport {
    Letter q;
    std::uint64_t p;
    std::size_t n;  // block length p^q + 1
    std::size_t k_max;
    Word word;
    PositionMarking marking;
    bool hypothesis_holds;  // d(w) > p^(e(w)+1)
    std::uint64_t decompositions_examined;
    std::vector<PumpRecord> records;  // one per decomposition meeting conditions 1-2

    bool all_refuted() const;
    std::vector<Decomposition> survivors() const;
};

/// Exhaustive replay of the distinguished/excluded pumping argument on
/// witness_kunz(q, p^q + 1). Refuses q < 5 with DomainError. Throws
/// ResourceBound when the decomposition count exceeds max_candidates.
BaderMouraReport bader_moura_refute(Letter q, std::uint64_t p, std::size_t k_max,
                                    std::uint64_t max_candidates = kDefaultMaxCandidates);

}  // namespace kunzlab
