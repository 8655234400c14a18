#include "kunzlab/lba.hpp"

#include <algorithm>
#include <stdexcept>

#include "kunzlab/error.hpp"

namespace kunzlab::lba {

namespace {

char render_symbol(Symbol s) {
    if (s >= 1 && s <= 9) return static_cast<char>('0' + s);
    if (s >= 10 && s <= kMaxMachineLetter) return static_cast<char>('A' + (s - 10));
    return static_cast<char>(s);
}

void add_unique(std::vector<Symbol>& alphabet, Symbol s) {
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) alphabet.push_back(s);
}

}  // namespace

Tape::Tape(int track_count, const Word& input) {
    if (track_count < 1) throw Error(ErrorCode::DomainError, "a tape needs at least one track");
    const std::size_t width = input.size() + 2;
    tracks_.assign(static_cast<std::size_t>(track_count), std::vector<Symbol>(width, kBlank));
    auto& first = tracks_.front();
    first.front() = kLeftEnd;
    first.back() = kRightEnd;
    for (std::size_t k = 1; k <= input.size(); ++k) {
        if (input.letter(k) > kMaxMachineLetter) {
            throw Error(ErrorCode::LetterOutOfAlphabet, "letter " + std::to_string(input.letter(k)) + " cannot be placed on a tape");
        }
        first[k] = static_cast<Symbol>(input.letter(k));
    }
}

Symbol Tape::get(int track, std::size_t position) const {
    return tracks_.at(static_cast<std::size_t>(track - 1)).at(position);
}

void Tape::set(int track, std::size_t position, Symbol symbol) {
    if (position < 1 || position > length()) throw std::out_of_range("tape position outside the input cells");
    tracks_.at(static_cast<std::size_t>(track - 1))[position] = symbol;
}

void Tape::set_unary(int track, std::size_t value, Symbol unit) {
    for (std::size_t pos = 1; pos <= length(); ++pos) set(track, pos, pos <= value ? unit : kBlank);
}

std::string Tape::render(int track) const {
    const auto& cells = tracks_.at(static_cast<std::size_t>(track - 1));
    std::string out;
    out.reserve(cells.size());
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
        if (pos == 0) out += static_cast<char>(kLeftEnd);
        else if (pos + 1 == cells.size()) out += static_cast<char>(kRightEnd);
        else out += render_symbol(cells[pos]);
    }
    return out;
}

MachineBuilder::MachineBuilder(std::string name, Letter max_letter, std::vector<std::vector<Symbol>> extra_alphabets,
                               unsigned bound_factor, bool strict_bound)
    : name_(std::move(name)), max_letter_(max_letter), bound_factor_(bound_factor), strict_bound_(strict_bound) {
    if (max_letter < 1 || max_letter > kMaxMachineLetter) {
        throw Error(ErrorCode::DomainError, "machine alphabet must be {1..n} with 1 <= n <= " + std::to_string(kMaxMachineLetter));
    }
    if (extra_alphabets.empty()) extra_alphabets.emplace_back();
    for (std::size_t t = 0; t < extra_alphabets.size(); ++t) {
        std::vector<Symbol> alphabet;
        if (t == 0) {
            alphabet = {kLeftEnd, kRightEnd};
            for (Letter a = 1; a <= max_letter; ++a) alphabet.push_back(static_cast<Symbol>(a));
        } else {
            alphabet = {kBlank};
        }
        for (const Symbol s : extra_alphabets[t]) add_unique(alphabet, s);
        alphabets_.push_back(std::move(alphabet));
    }
    add_state("accept", "halt");
    add_state("reject", "halt");
}

StateId MachineBuilder::add_state(const std::string& name, const std::string& step) {
    state_names_.push_back(name);
    step_names_.push_back(step);
    rules_.emplace_back();
    return static_cast<StateId>(state_names_.size() - 1);
}

void MachineBuilder::on(StateId from, Rule rule) {
    if (from < 2) throw std::logic_error("halting states take no rules");
    rules_.at(static_cast<std::size_t>(from)).push_back(std::move(rule));
}

void MachineBuilder::when(StateId from, std::function<bool(const CellView&)> pred, StateId next, Move move,
                          std::vector<std::pair<int, Symbol>> writes) {
    on(from, [pred = std::move(pred), next, move, writes = std::move(writes)](const CellView& c) -> std::optional<Action> {
        if (!pred(c)) return std::nullopt;
        return Action{next, move, writes};
    });
}

LbaMachine MachineBuilder::compile() const {
    if (start_ < 2 || static_cast<std::size_t>(start_) >= state_names_.size()) {
        throw std::logic_error(name_ + ": start state not set");
    }
    LbaMachine m;
    m.name_ = name_;
    m.max_letter_ = max_letter_;
    m.alphabets_ = alphabets_;
    m.bound_factor_ = bound_factor_;
    m.strict_bound_ = strict_bound_;
    m.start_ = start_;
    m.state_names_ = state_names_;
    m.step_names_ = step_names_;
    m.tuple_count_ = 1;
    for (const auto& alphabet : alphabets_) {
        std::array<std::int16_t, 256> index;
        index.fill(-1);
        for (std::size_t k = 0; k < alphabet.size(); ++k) index[alphabet[k]] = static_cast<std::int16_t>(k);
        m.symbol_index_.push_back(index);
        m.radix_.push_back(alphabet.size());
        m.tuple_count_ *= alphabet.size();
    }
    m.table_.assign(state_names_.size() * m.tuple_count_, LbaMachine::Entry{});
    for (std::size_t s = 2; s < state_names_.size(); ++s) {
        for (std::size_t t = 0; t < m.tuple_count_; ++t) {
            const std::vector<Symbol> symbols = m.tuple_symbols(t);
            const CellView view(symbols);
            for (const Rule& rule : rules_[s]) {
                const std::optional<Action> action = rule(view);
                if (!action) continue;
                std::vector<Symbol> written = symbols;
                for (const auto& [track, symbol] : action->writes) {
                    if (track < 1 || track > track_count() ||
                        m.symbol_index_[static_cast<std::size_t>(track - 1)][symbol] < 0) {
                        throw std::logic_error(name_ + ": state " + state_names_[s] + " writes '" +
                                               std::string(1, static_cast<char>(symbol)) + "' outside the alphabet of track " +
                                               std::to_string(track));
                    }
                    written[static_cast<std::size_t>(track - 1)] = symbol;
                }
                if (action->next < 0 || static_cast<std::size_t>(action->next) >= state_names_.size()) {
                    throw std::logic_error(name_ + ": state " + state_names_[s] + " jumps to an unknown state");
                }
                LbaMachine::Entry& e = m.table_[s * m.tuple_count_ + t];
                if (view.at_end() && written != symbols) {
                    // overwriting an end marker is a rejecting event
                    e = {reject_state(), static_cast<std::int32_t>(t), Move::Stay};
                } else {
                    e = {action->next, static_cast<std::int32_t>(m.tuple_index(written)), action->move};
                }
                break;
            }
        }
    }
    return m;
}

std::size_t LbaMachine::tuple_index(const std::vector<Symbol>& symbols) const {
    std::size_t index = 0;
    for (std::size_t t = 0; t < symbols.size(); ++t) {
        const std::int16_t k = symbol_index_[t][symbols[t]];
        if (k < 0) throw std::logic_error("symbol outside track alphabet");
        index = index * radix_[t] + static_cast<std::size_t>(k);
    }
    return index;
}

std::vector<Symbol> LbaMachine::tuple_symbols(std::size_t index) const {
    std::vector<Symbol> out(alphabets_.size());
    for (std::size_t t = alphabets_.size(); t-- > 0;) {
        out[t] = alphabets_[t][index % radix_[t]];
        index /= radix_[t];
    }
    return out;
}

std::uint64_t LbaMachine::bound_for_length(std::size_t length) const noexcept {
    return std::uint64_t{bound_factor_} * std::max<std::uint64_t>(length, 10);
}

std::size_t LbaMachine::transition_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](const Entry& e) { return e.next >= 0; }));
}

struct Simulator {
    static RunResult run(const LbaMachine& m, Tape tape, std::size_t head, std::uint64_t max_steps, bool want_trace) {
        if (tape.track_count() != m.track_count()) {
            throw Error(ErrorCode::DomainError, "tape has " + std::to_string(tape.track_count()) + " tracks, machine expects " +
                                                    std::to_string(m.track_count()));
        }
        const std::size_t len = tape.length();
        if (head > len + 1) throw Error(ErrorCode::DomainError, "initial head position outside the tape");
        std::vector<std::int32_t> cells(len + 2);
        std::vector<Symbol> symbols(static_cast<std::size_t>(m.track_count()));
        for (std::size_t pos = 0; pos < len + 2; ++pos) {
            for (int t = 1; t <= m.track_count(); ++t) {
                const Symbol s = tape.get(t, pos);
                if (m.symbol_index_[static_cast<std::size_t>(t - 1)][s] < 0) {
                    if (t == 1 && s >= 1 && s <= kMaxMachineLetter) {
                        throw Error(ErrorCode::LetterOutOfAlphabet, "letter " + std::to_string(s) + " is outside {1.." +
                                                                        std::to_string(m.max_letter()) + "}");
                    }
                    throw Error(ErrorCode::DomainError, "tape symbol outside the alphabet of track " + std::to_string(t));
                }
                symbols[static_cast<std::size_t>(t - 1)] = s;
            }
            cells[pos] = static_cast<std::int32_t>(m.tuple_index(symbols));
        }

        RunResult result;
        std::vector<char> visited(len + 2, 0);
        visited[head] = 1;
        StateId state = m.start_;

        auto snapshot = [&](std::uint64_t step) {
            if (!want_trace) return;
            if (result.trace.size() >= kMaxTraceEntries) {
                result.trace_truncated = true;
                return;
            }
            TraceEntry entry{step, head, m.step_names_[static_cast<std::size_t>(state)], {}};
            const Tape current = rebuild(m, cells, len);
            for (int t = 1; t <= m.track_count(); ++t) entry.tracks.push_back(current.render(t));
            result.trace.push_back(std::move(entry));
        };

        while (state != 0 && state != 1) {
            if (result.steps >= max_steps) {
                throw Error(ErrorCode::StepBudgetExceeded,
                            m.name_ + " did not halt within " + std::to_string(max_steps) + " steps");
            }
            snapshot(result.steps);
            const LbaMachine::Entry& e = m.table_[static_cast<std::size_t>(state) * m.tuple_count_ + cells[head]];
            if (e.next < 0) {
                result.halt_reason = "no transition from " + m.state_names_[static_cast<std::size_t>(state)];
                state = 1;
                break;
            }
            cells[head] = e.write;
            state = e.next;
            ++result.steps;
            const auto target = static_cast<std::int64_t>(head) + static_cast<std::int64_t>(e.move);
            if (target < 0 || target > static_cast<std::int64_t>(len + 1)) {
                result.halt_reason = "moved past an end marker";
                state = 1;
                break;
            }
            head = static_cast<std::size_t>(target);
            visited[head] = 1;
        }
        if (result.halt_reason.empty()) {
            result.halt_reason = state == 0 ? "accept state" : m.state_names_[static_cast<std::size_t>(state)];
        }
        snapshot(result.steps);
        result.verdict = state == 0 ? Verdict::Accept : Verdict::Reject;
        result.cells_used = static_cast<std::uint64_t>(m.track_count()) *
                            static_cast<std::uint64_t>(std::count(visited.begin(), visited.end(), 1));
        result.bound = m.bound_for_length(len);
        result.final_head = head;
        result.final_tape = rebuild(m, cells, len);
        return result;
    }

    static Tape rebuild(const LbaMachine& m, const std::vector<std::int32_t>& cells, std::size_t len) {
        Tape tape(m.track_count(), Word(std::vector<Letter>(len, 1)));
        for (std::size_t pos = 1; pos <= len; ++pos) {
            const std::vector<Symbol> symbols = m.tuple_symbols(static_cast<std::size_t>(cells[pos]));
            for (int t = 1; t <= m.track_count(); ++t) tape.set(t, pos, symbols[static_cast<std::size_t>(t - 1)]);
        }
        return tape;
    }
};

RunResult run(const LbaMachine& machine, const Word& w, std::uint64_t max_steps, bool want_trace) {
    for (const Letter a : w.letters()) {
        if (a > machine.max_letter()) {
            throw Error(ErrorCode::LetterOutOfAlphabet, "letter " + std::to_string(a) + " is outside {1.." +
                                                            std::to_string(machine.max_letter()) + "}");
        }
    }
    return run_tape(machine, Tape(machine.track_count(), w), 1, max_steps, want_trace);
}

RunResult run_tape(const LbaMachine& machine, Tape tape, std::size_t head, std::uint64_t max_steps, bool want_trace) {
    return Simulator::run(machine, std::move(tape), head, max_steps, want_trace);
}

std::string format_trace_line(const TraceEntry& entry) {
    std::string out = std::to_string(entry.step) + '\t' + std::to_string(entry.head) + '\t' + entry.step_name;
    for (const std::string& track : entry.tracks) out += '\t' + track;
    return out;
}

}  // namespace kunzlab::lba
