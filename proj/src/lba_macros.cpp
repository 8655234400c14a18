#include "kunzlab/lba_macros.hpp"

#include <algorithm>

namespace kunzlab::lba {

namespace {

bool any_cell(const CellView&) { return true; }

}  // namespace

bool is_unit(Symbol s) noexcept { return s == '1' || s == 'L' || s == 'o' || s == '+'; }

StateId rewind(MachineBuilder& b, const std::string& step, LeftFlag flag, StateId then) {
    const StateId s = b.add_state("rewind", step + ".rewind");
    b.when(s, [flag](const CellView& c) { return !c.at_end() && c[flag.track] == flag.symbol; }, then, Move::Stay);
    b.when(s, [](const CellView& c) { return c.at_left_end(); }, then, Move::Right);
    b.when(s, any_cell, s, Move::Left);
    return s;
}

StateId scan_symbol(MachineBuilder& b, const std::string& step, int track, std::vector<Symbol> targets,
                    Move direction, StateId found, StateId hit_end) {
    const StateId s = b.add_state("scan_symbol", step + ".scan_symbol");
    b.when(s, [track, targets = std::move(targets)](const CellView& c) {
        return !c.at_end() && std::find(targets.begin(), targets.end(), c[track]) != targets.end();
    }, found, Move::Stay);
    // leaving the marker we start on is not hitting it
    b.when(s, [direction](const CellView& c) {
        return (c.at_left_end() && direction == Move::Right) || (c.at_right_end() && direction == Move::Left);
    }, s, direction);
    b.when(s, [](const CellView& c) { return c.at_end(); }, hit_end, Move::Stay);
    b.when(s, any_cell, s, direction);
    return s;
}

StateId unary_add(MachineBuilder& b, const std::string& step, LeftFlag flag, int a, int bt, int c, StateId done) {
    const std::string label = step + ".unary_add";
    const StateId copy = b.add_state("add_copy", label);
    const StateId take = b.add_state("add_take", label);
    const StateId append = b.add_state("add_append", label);
    const StateId overflow = b.add_state("add_overflow", label);
    const StateId restore = b.add_state("add_restore", label);
    const StateId entry = rewind(b, label, flag, copy);
    const StateId restore_entry = rewind(b, label, flag, restore);

    // c := b, clearing whatever c held before
    b.when(copy, [](const CellView& v) { return v.at_right_end(); }, rewind(b, label, flag, take), Move::Stay);
    b.on(copy, [bt, c, copy](const CellView& v) -> std::optional<Action> {
        return Action{copy, Move::Right, {{c, is_unit(v[bt]) ? Symbol{'1'} : kBlank}}};
    });

    // one unit of a at a time: mark it 'o', append a unit to c
    const StateId back = rewind(b, label, flag, take);
    b.when(take, [a](const CellView& v) { return !v.at_end() && v[a] == '1'; }, append, Move::Stay, {{a, 'o'}});
    b.when(take, [a](const CellView& v) { return !v.at_end() && v[a] == 'o'; }, take, Move::Right);
    b.when(take, any_cell, restore_entry, Move::Stay);

    b.when(append, [](const CellView& v) { return v.at_right_end(); }, overflow, Move::Left);
    b.when(append, [c](const CellView& v) { return v[c] == kBlank; }, back, Move::Stay, {{c, '1'}});
    b.when(append, any_cell, append, Move::Right);

    b.when(overflow, any_cell, restore_entry, Move::Stay, {{c, '+'}});

    b.when(restore, [a](const CellView& v) { return !v.at_end() && v[a] == 'o'; }, restore, Move::Right, {{a, '1'}});
    b.when(restore, [a](const CellView& v) { return !v.at_end() && v[a] == '1'; }, restore, Move::Right);
    b.when(restore, any_cell, rewind(b, label, flag, done), Move::Stay);
    return entry;
}

StateId unary_compare(MachineBuilder& b, const std::string& step, LeftFlag flag, int x, int y, CompareExits exits) {
    const std::string label = step + ".unary_compare";
    const StateId sweep = b.add_state("compare_sweep", label);
    b.when(sweep, [](const CellView& v) { return v.at_right_end(); }, exits.equal, Move::Stay);
    b.when(sweep, [x](const CellView& v) { return v[x] == '+'; }, exits.greater, Move::Stay);
    b.when(sweep, [x, y](const CellView& v) { return is_unit(v[x]) && is_unit(v[y]); }, sweep, Move::Right);
    b.when(sweep, [x](const CellView& v) { return is_unit(v[x]); }, exits.greater, Move::Stay);
    b.when(sweep, [y](const CellView& v) { return is_unit(v[y]); }, exits.less, Move::Stay);
    b.when(sweep, any_cell, exits.equal, Move::Stay);
    return rewind(b, label, flag, sweep);
}

StateId goto_index(MachineBuilder& b, const std::string& step, LeftFlag flag, int track, StateId done) {
    const std::string label = step + ".goto_index";
    const StateId walk = b.add_state("goto_walk", label);
    b.when(walk, [track](const CellView& v) { return !v.at_end() && is_unit(v[track]); }, walk, Move::Right);
    b.when(walk, any_cell, done, Move::Left);
    return rewind(b, label, flag, walk);
}

StateId clear_track(MachineBuilder& b, const std::string& step, LeftFlag flag, int track, StateId done) {
    const std::string label = step + ".clear_track";
    const StateId sweep = b.add_state("clear_sweep", label);
    b.when(sweep, [](const CellView& v) { return v.at_right_end(); }, done, Move::Stay);
    b.when(sweep, any_cell, sweep, Move::Right, {{track, kBlank}});
    return rewind(b, label, flag, sweep);
}

}  // namespace kunzlab::lba
