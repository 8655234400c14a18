#pragma once

#include "kunzlab/lba.hpp"

namespace kunzlab::lba {

/// Five-track acceptor for K_3. Track roles: 1 input with cross marks x/y,
/// 2 index i of the current x, 3 index j of the current y, 4 the sum i+j,
/// 5 the input length (cell 1 flagged 'L'). Tape use is 5 * (l + 1) cells.
LbaMachine build_k3_machine();

/// Five-track acceptor for K_n, 3 <= n <= kMaxMachineLetter, running the full
/// pair loop of the word problem. Track roles: 1 input, 2 index i (last unit
/// 'I'), 3 index j (last unit 'J'), 4 a cursor that walks from j by i cells
/// and wraps past the right marker, 5 the length (cell 1 flagged 'L').
/// Throws DomainError outside the supported range.
LbaMachine build_kn_machine(Letter n);

}  // namespace kunzlab::lba
