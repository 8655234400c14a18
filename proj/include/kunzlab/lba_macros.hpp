#pragma once

#include <string>
#include <vector>

#include "kunzlab/lba.hpp"

// Reusable subroutines for MachineBuilder. Each returns the entry state of a
// freshly generated block of states and jumps to the supplied continuation(s)
// when it finishes. Unary values are left-aligned runs starting at cell 1;
// the symbols '1', 'L', 'o' and '+' all count as units.

namespace kunzlab::lba {

/// Identifies cell 1 without stepping onto the left marker: the cell whose
/// `track` holds `symbol`.
struct LeftFlag {
    int track;
    Symbol symbol;
};

bool is_unit(Symbol s) noexcept;

/// Moves left until the flagged cell 1; if the left marker is reached first,
/// steps back onto cell 1.
StateId rewind(MachineBuilder& b, const std::string& step, LeftFlag flag, StateId then);

/// Moves in `direction` (checking the current cell first) until `track`
/// shows one of `targets` -> found, or an end marker -> hit_end.
StateId scan_symbol(MachineBuilder& b, const std::string& step, int track, std::vector<Symbol> targets,
                    Move direction, StateId found, StateId hit_end);

/// Writes |a| + |b| in unary on track c. A sum that does not fit on the tape
/// saturates: every cell of c holds a unit and the last one is '+'. Track a
/// needs the scratch symbol 'o'; track c needs '1' and '+'. Ends on cell 1.
StateId unary_add(MachineBuilder& b, const std::string& step, LeftFlag flag, int a, int bt, int c,
                  StateId done);

struct CompareExits {
    StateId less;
    StateId equal;
    StateId greater;
};

/// Compares the unary values on tracks x and y by a single sweep from cell 1.
/// A saturated '+' cell on x counts as exceeding anything on y.
StateId unary_compare(MachineBuilder& b, const std::string& step, LeftFlag flag, int x, int y,
                      CompareExits exits);

/// Leaves the head on the cell whose index equals the unary value on track.
StateId goto_index(MachineBuilder& b, const std::string& step, LeftFlag flag, int track, StateId done);

/// Blanks every cell of track, leaving the head on the right marker.
StateId clear_track(MachineBuilder& b, const std::string& step, LeftFlag flag, int track, StateId done);

}  // namespace kunzlab::lba
