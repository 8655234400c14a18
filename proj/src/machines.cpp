#include "kunzlab/machines.hpp"

#include <algorithm>
#include <string>

#include "kunzlab/error.hpp"
#include "kunzlab/lba_macros.hpp"

namespace kunzlab::lba {

namespace {

constexpr LeftFlag kCellOne{5, 'L'};

bool any_cell(const CellView&) { return true; }
bool right_end(const CellView& c) { return c.at_right_end(); }

auto input_is(Symbol s) {
    return [s](const CellView& c) { return !c.at_end() && c[1] == s; };
}

}  // namespace

LbaMachine build_k3_machine() {
    // tracks: 1 input + x/y, 2 index i, 3 index j, 4 sum, 5 length
    MachineBuilder b("K3", 3, {{'x', 'y'}, {'1', 'o'}, {'1'}, {'1', '+'}, {'1', 'L'}}, 6, true);
    const StateId accept = b.accept_state();
    const StateId reject = b.reject_state();
    constexpr Symbol one = 1;
    constexpr Symbol three = 3;

    // Step 1: look for a 3 while writing the length on track 5.
    const StateId first = b.add_state("s1_first", "step1");
    const StateId scan = b.add_state("s1_scan", "step1");
    const StateId seen = b.add_state("s1_seen_3", "step1");
    const StateId step2 = b.add_state("s2_find_1", "step2");
    b.set_start(first);
    b.when(first, right_end, reject, Move::Stay);
    b.when(first, input_is(three), seen, Move::Right, {{5, 'L'}});
    b.when(first, any_cell, scan, Move::Right, {{5, 'L'}});
    b.when(scan, right_end, reject, Move::Stay);
    b.when(scan, input_is(three), seen, Move::Right, {{5, '1'}});
    b.when(scan, any_cell, scan, Move::Right, {{5, '1'}});
    b.when(seen, right_end, rewind(b, "step1", kCellOne, step2), Move::Stay);
    b.when(seen, any_cell, seen, Move::Right, {{5, '1'}});

    // Step 2: extend i up to the next unchecked 1 and cross it with x.
    const StateId step3 = b.add_state("s3_begin", "step3");
    b.when(step2, right_end, accept, Move::Stay);
    b.when(step2, input_is(one), step3, Move::Stay, {{1, 'x'}, {2, '1'}, {3, '1'}});
    b.when(step2, any_cell, step2, Move::Right, {{2, '1'}, {3, '1'}});

    // Step 3: probe position i+i unless it lies beyond the word.
    const StateId step4 = b.add_state("s4_find_1", "step4");
    const StateId back3 = scan_symbol(b, "step3", 1, {'x'}, Move::Left, step4, reject);
    const StateId clear3 = clear_track(b, "step3", kCellOne, 4, back3);
    const StateId check3 = b.add_state("s3_check", "step3");
    b.when(check3, input_is(three), reject, Move::Stay);
    b.when(check3, any_cell, clear3, Move::Stay);
    const StateId goto3 = goto_index(b, "step3", kCellOne, 4, check3);
    const StateId cmp3 = unary_compare(b, "step3", kCellOne, 4, 5, {goto3, goto3, clear3});
    b.when(step3, any_cell, unary_add(b, "step3", kCellOne, 2, 3, 4, cmp3), Move::Stay);

    // Step 4: extend j to the next 1 after x and mark it y.
    const StateId step5 = b.add_state("s5_begin", "step5");
    b.when(step4, right_end, accept, Move::Stay);
    b.when(step4, input_is(one), step5, Move::Stay, {{1, 'y'}, {3, '1'}});
    b.when(step4, any_cell, step4, Move::Right, {{3, '1'}});

    // Steps 5-6: sum i+j and probe that position.
    const StateId step7 = b.add_state("s7_find_1", "step7");
    const StateId back6 = scan_symbol(b, "step6", 1, {'y'}, Move::Left, step7, reject);
    const StateId clear6 = clear_track(b, "step6", kCellOne, 4, back6);
    const StateId check6 = b.add_state("s6_check", "step6");
    b.when(check6, input_is(three), reject, Move::Stay);
    b.when(check6, any_cell, clear6, Move::Stay);
    const StateId goto6 = goto_index(b, "step6", kCellOne, 4, check6);
    const StateId cmp6 = unary_compare(b, "step6", kCellOne, 4, 5, {goto6, goto6, clear6});
    b.when(step5, any_cell, unary_add(b, "step5", kCellOne, 2, 3, 4, cmp6), Move::Stay);

    // Step 7: next y, or restore the y marks and trim track 3 back to i.
    const StateId cleanup = b.add_state("s7_cleanup", "step7");
    b.when(step7, right_end, cleanup, Move::Left);
    b.when(step7, input_is(one), step5, Move::Stay, {{1, 'y'}, {3, '1'}});
    b.when(step7, any_cell, step7, Move::Right, {{3, '1'}});
    b.when(cleanup, input_is('x'), step2, Move::Stay);
    b.when(cleanup, input_is('y'), cleanup, Move::Left, {{1, one}, {3, kBlank}});
    b.when(cleanup, any_cell, cleanup, Move::Left, {{3, kBlank}});

    return b.compile();
}

LbaMachine build_kn_machine(Letter n) {
    if (n < 3 || n > kMaxMachineLetter) {
        throw Error(ErrorCode::DomainError, "build_kn_machine needs 3 <= n <= " + std::to_string(kMaxMachineLetter) +
                                                ", got " + std::to_string(n));
    }
    // tracks: 1 input, 2 index i, 3 index j, 4 target cursor, 5 length
    MachineBuilder b("K" + std::to_string(n), n, {{}, {'1', 'I', 'o', 'O'}, {'1', 'J'}, {'c', 'C', 'w'}, {'1', 'L'}},
                     2 * n, false);
    const StateId accept = b.accept_state();
    const StateId reject = b.reject_state();
    const auto top = static_cast<Symbol>(n);

    // Require the letter n while writing the length on track 5.
    const StateId first = b.add_state("first", "check_max");
    const StateId scan = b.add_state("scan", "check_max");
    const StateId seen = b.add_state("seen_max", "check_max");
    const StateId advance_i = b.add_state("advance_i", "advance_i");
    b.set_start(first);
    b.when(first, right_end, reject, Move::Stay);
    b.when(first, input_is(top), seen, Move::Right, {{5, 'L'}});
    b.when(first, any_cell, scan, Move::Right, {{5, 'L'}});
    b.when(scan, right_end, reject, Move::Stay);
    b.when(scan, input_is(top), seen, Move::Right, {{5, '1'}});
    b.when(scan, any_cell, scan, Move::Right, {{5, '1'}});
    b.when(seen, right_end, rewind(b, "check_max", kCellOne, advance_i), Move::Stay);
    b.when(seen, any_cell, seen, Move::Right, {{5, '1'}});

    // i := i + 1; once i passes the last cell every pair has been checked.
    const StateId place_i = b.add_state("place_i", "advance_i");
    const StateId copy_j = b.add_state("copy_j", "reset_j");
    const StateId reset_j = rewind(b, "reset_j", kCellOne, copy_j);
    b.when(advance_i, right_end, reject, Move::Stay);
    b.when(advance_i, [](const CellView& c) { return c[2] == 'I'; }, place_i, Move::Right, {{2, '1'}});
    b.when(advance_i, [](const CellView& c) { return c[2] == '1'; }, advance_i, Move::Right);
    b.when(advance_i, any_cell, reset_j, Move::Stay, {{2, 'I'}});
    b.when(place_i, right_end, accept, Move::Stay);
    b.when(place_i, any_cell, reset_j, Move::Stay, {{2, 'I'}});

    // j := i
    const StateId read_i = b.add_state("read_i", "read_pair");
    const StateId find_i = scan_symbol(b, "read_pair", 2, {'I'}, Move::Right, read_i, reject);
    const StateId pair_entry = rewind(b, "read_pair", kCellOne, find_i);
    b.when(copy_j, right_end, pair_entry, Move::Stay);
    b.on(copy_j, [copy_j](const CellView& c) -> std::optional<Action> {
        const Symbol i = c[2];
        return Action{copy_j, Move::Right, {{3, i == 'I' ? Symbol{'J'} : i == '1' ? Symbol{'1'} : kBlank}}};
    });

    // j := j + 1 or, past the last cell, move on to the next i.
    const StateId find_j_mark = b.add_state("find_J", "advance_j");
    const StateId place_j = b.add_state("place_J", "advance_j");
    const StateId advance_j = rewind(b, "advance_j", kCellOne, find_j_mark);
    b.when(find_j_mark, right_end, reject, Move::Stay);
    b.when(find_j_mark, [](const CellView& c) { return c[3] == 'J'; }, place_j, Move::Right, {{3, '1'}});
    b.when(find_j_mark, any_cell, find_j_mark, Move::Right);
    b.when(place_j, right_end, rewind(b, "advance_i", kCellOne, advance_i), Move::Stay);
    b.when(place_j, any_cell, pair_entry, Move::Stay, {{3, 'J'}});

    // Per capped pair sum s = min(u_i + u_j, n): walk a cursor from j by i
    // cells, wrapping to 0 on the right marker, then test the target letter.
    std::vector<StateId> walk_entry(n + 1, reject);
    for (Letter s = 2; s <= n; ++s) {
        const std::string tag = "_" + std::to_string(s);
        const StateId take = b.add_state("take" + tag, "walk_target");
        const StateId find_cursor = b.add_state("find_cursor" + tag, "walk_target");
        const StateId put_c = b.add_state("put_c" + tag, "walk_target");
        const StateId put_wrapped = b.add_state("put_C" + tag, "walk_target");
        const StateId mark_wrap = b.add_state("mark_wrap" + tag, "walk_target");
        const StateId restore = b.add_state("restore" + tag, "restore_i");
        const StateId judge = b.add_state("judge" + tag, "check_condition");
        const StateId entry = rewind(b, "walk_target", kCellOne, take);
        walk_entry[s] = entry;

        b.when(take, right_end, rewind(b, "restore_i", kCellOne, restore), Move::Stay);
        b.when(take, [](const CellView& c) { return c[2] == '1'; }, rewind(b, "walk_target", kCellOne, find_cursor),
               Move::Stay, {{2, 'o'}});
        b.when(take, [](const CellView& c) { return c[2] == 'I'; }, rewind(b, "walk_target", kCellOne, find_cursor),
               Move::Stay, {{2, 'O'}});
        b.when(take, [](const CellView& c) { return c[2] == 'o' || c[2] == 'O'; }, take, Move::Right);
        b.when(take, any_cell, rewind(b, "restore_i", kCellOne, restore), Move::Stay);

        b.when(find_cursor, right_end, reject, Move::Stay);
        b.when(find_cursor, [](const CellView& c) { return c[4] == 'w'; }, entry, Move::Stay, {{4, 'C'}});
        b.when(find_cursor, [](const CellView& c) { return c[4] == 'c'; }, put_c, Move::Right, {{4, kBlank}});
        b.when(find_cursor, [](const CellView& c) { return c[4] == 'C'; }, put_wrapped, Move::Right, {{4, kBlank}});
        b.when(find_cursor, any_cell, find_cursor, Move::Right);

        b.when(put_c, right_end, rewind(b, "walk_target", kCellOne, mark_wrap), Move::Stay);
        b.when(put_c, any_cell, entry, Move::Stay, {{4, 'c'}});
        b.when(put_wrapped, right_end, reject, Move::Stay);
        b.when(put_wrapped, any_cell, entry, Move::Stay, {{4, 'C'}});
        b.when(mark_wrap, any_cell, entry, Move::Stay, {{4, 'w'}});

        const StateId judge_entry = rewind(b, "check_condition", kCellOne, judge);
        b.when(restore, right_end, judge_entry, Move::Stay);
        b.when(restore, [](const CellView& c) { return c[2] == 'o'; }, restore, Move::Right, {{2, '1'}});
        b.when(restore, [](const CellView& c) { return c[2] == 'O'; }, restore, Move::Right, {{2, 'I'}});
        b.when(restore, [](const CellView& c) { return c[2] == '1' || c[2] == 'I'; }, restore, Move::Right);
        b.when(restore, any_cell, judge_entry, Move::Stay);

        b.when(judge, right_end, reject, Move::Stay);
        b.when(judge, [s](const CellView& c) { return c[4] == 'c' && s < c[1]; }, reject, Move::Stay);
        b.when(judge, [s](const CellView& c) { return c[4] == 'C' && s + 1 < c[1]; }, reject, Move::Stay);
        b.when(judge, [](const CellView& c) { return c[4] == 'c' || c[4] == 'C' || c[4] == 'w'; }, advance_j,
               Move::Stay, {{4, kBlank}});
        b.when(judge, any_cell, judge, Move::Right);
    }

    // Read u_i, then u_j, then drop a cursor on j.
    for (Letter a = 1; a <= n; ++a) {
        const StateId read_j = b.add_state("read_j_" + std::to_string(a), "read_pair");
        const StateId find_j = scan_symbol(b, "read_pair", 3, {'J'}, Move::Right, read_j, reject);
        b.when(read_i, input_is(static_cast<Symbol>(a)), find_j, Move::Stay);
        for (Letter c = 1; c <= n; ++c) {
            const Letter s = std::min(a + c, n);
            b.when(read_j, input_is(static_cast<Symbol>(c)), walk_entry[s], Move::Stay, {{4, 'c'}});
        }
    }

    return b.compile();
}

}  // namespace kunzlab::lba
