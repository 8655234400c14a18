#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kunzlab/word.hpp"

namespace kunzlab::lba {

using Symbol = unsigned char;
using StateId = int;

inline constexpr Symbol kBlank = '_';
inline constexpr Symbol kLeftEnd = '[';
inline constexpr Symbol kRightEnd = ']';

/// Largest input letter a machine may declare. Letters 10..16 render as A..G
/// in traces so every cell stays one character wide.
inline constexpr Letter kMaxMachineLetter = 16;

enum class Move : std::int8_t { Left = -1, Stay = 0, Right = 1 };

/// The symbols under the head, one per track. Tracks are numbered from 1;
/// track 1 carries the input and the end markers.
class CellView {
public:
    explicit CellView(const std::vector<Symbol>& symbols) : symbols_(symbols) {}

    Symbol operator[](int track) const { return symbols_.at(static_cast<std::size_t>(track - 1)); }
    bool at_left_end() const { return symbols_.front() == kLeftEnd; }
    bool at_right_end() const { return symbols_.front() == kRightEnd; }
    bool at_end() const { return at_left_end() || at_right_end(); }

private:
    const std::vector<Symbol>& symbols_;
};

struct Action {
    StateId next;
    Move move = Move::Stay;
    std::vector<std::pair<int, Symbol>> writes;  // (track, symbol)
};

/// A rule fires when it returns an action; rules of one state are tried in
/// the order they were added.
using Rule = std::function<std::optional<Action>(const CellView&)>;

/// A multi-track tape with immovable end markers at positions 0 and len+1.
class Tape {
public:
    Tape(int track_count, const Word& input);

    int track_count() const noexcept { return static_cast<int>(tracks_.size()); }
    /// Input length; positions run from 0 (left marker) to length()+1.
    std::size_t length() const noexcept { return tracks_.front().size() - 2; }

    Symbol get(int track, std::size_t position) const;
    /// Positions 1..length() only; markers cannot be overwritten.
    void set(int track, std::size_t position, Symbol symbol);
    /// Writes a left-aligned run of `unit` symbols of the given length.
    void set_unary(int track, std::size_t value, Symbol unit = '1');

    /// Track rendered left to right including both markers, blanks as "_".
    std::string render(int track) const;

    friend bool operator==(const Tape&, const Tape&) = default;

private:
    std::vector<std::vector<Symbol>> tracks_;
};

class LbaMachine;

/// Assembles a finite control from states and rules, then compiles it into a
/// flat (state, cell contents) table.
class MachineBuilder {
public:
    /// extra_alphabets[0] lists track-1 marks beyond the letters 1..max_letter
    /// and the end markers; the other entries list the non-blank symbols of
    /// tracks 2.. .
    MachineBuilder(std::string name, Letter max_letter, std::vector<std::vector<Symbol>> extra_alphabets,
                   unsigned bound_factor, bool strict_bound);

    StateId add_state(const std::string& name, const std::string& step);
    StateId accept_state() const noexcept { return 0; }
    StateId reject_state() const noexcept { return 1; }
    void set_start(StateId state) { start_ = state; }

    void on(StateId from, Rule rule);

    /// Rule: when pred holds, write and move to next.
    void when(StateId from, std::function<bool(const CellView&)> pred, StateId next, Move move,
              std::vector<std::pair<int, Symbol>> writes = {});

    int track_count() const noexcept { return static_cast<int>(alphabets_.size()); }
    Letter max_letter() const noexcept { return max_letter_; }

    LbaMachine compile() const;

private:
    friend class LbaMachine;

    std::string name_;
    Letter max_letter_;
    std::vector<std::vector<Symbol>> alphabets_;
    unsigned bound_factor_;
    bool strict_bound_;
    StateId start_ = -1;
    std::vector<std::string> state_names_;
    std::vector<std::string> step_names_;
    std::vector<std::vector<Rule>> rules_;
};

class LbaMachine {
public:
    const std::string& name() const noexcept { return name_; }
    int track_count() const noexcept { return static_cast<int>(alphabets_.size()); }
    Letter max_letter() const noexcept { return max_letter_; }
    std::size_t state_count() const noexcept { return state_names_.size(); }
    const std::string& state_name(StateId s) const { return state_names_.at(static_cast<std::size_t>(s)); }
    const std::string& step_name(StateId s) const { return step_names_.at(static_cast<std::size_t>(s)); }
    StateId start_state() const noexcept { return start_; }

    /// Cells allowed per input letter, counted over all tracks.
    unsigned bound_factor() const noexcept { return bound_factor_; }
    /// True when the tape bound is strict (cells_used < bound).
    bool strict_bound() const noexcept { return strict_bound_; }
    std::uint64_t bound_for_length(std::size_t length) const noexcept;

    /// Number of defined (state, cell) entries in the compiled table.
    std::size_t transition_count() const noexcept;

private:
    friend class MachineBuilder;
    friend struct Simulator;

    struct Entry {
        std::int32_t next = -1;  // -1: no rule, the machine halts rejecting
        std::int32_t write = 0;  // tuple index written back to the cell
        Move move = Move::Stay;
    };

    std::size_t tuple_index(const std::vector<Symbol>& symbols) const;
    std::vector<Symbol> tuple_symbols(std::size_t index) const;

    std::string name_;
    Letter max_letter_ = 0;
    std::vector<std::vector<Symbol>> alphabets_;  // full alphabet per track
    std::vector<std::array<std::int16_t, 256>> symbol_index_;
    std::vector<std::size_t> radix_;
    std::size_t tuple_count_ = 0;
    unsigned bound_factor_ = 0;
    bool strict_bound_ = false;
    StateId start_ = -1;
    std::vector<std::string> state_names_;
    std::vector<std::string> step_names_;
    std::vector<Entry> table_;  // state * tuple_count_ + tuple
};

enum class Verdict { Accept, Reject };

struct TraceEntry {
    std::uint64_t step;
    std::size_t head;
    std::string step_name;
    std::vector<std::string> tracks;  // Tape::render of each track
};

struct RunResult {
    Verdict verdict = Verdict::Reject;
    std::uint64_t steps = 0;
    std::uint64_t cells_used = 0;
    std::uint64_t bound = 0;
    std::string halt_reason;
    std::vector<TraceEntry> trace;
    bool trace_truncated = false;
    std::size_t final_head = 0;
    Tape final_tape{1, Word{}};
};

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;
inline constexpr std::size_t kMaxTraceEntries = 10'000;

/// Runs on the given word with the head on cell 1. Throws LetterOutOfAlphabet
/// and StepBudgetExceeded.
RunResult run(const LbaMachine& machine, const Word& w, std::uint64_t max_steps = kDefaultMaxSteps,
              bool want_trace = false);

/// Runs from an arbitrary initial tape and head position (0..length+1).
RunResult run_tape(const LbaMachine& machine, Tape tape, std::size_t head,
                   std::uint64_t max_steps = kDefaultMaxSteps, bool want_trace = false);

/// step TAB head TAB step_name TAB track1 TAB track2 ...
std::string format_trace_line(const TraceEntry& entry);

}  // namespace kunzlab::lba
