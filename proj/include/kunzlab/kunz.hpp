#pragma once

#include <cstddef>
#include <vector>

#include "kunzlab/semigroup.hpp"
#include "kunzlab/word.hpp"

namespace kunzlab {

enum class ConditionKind {
    First,   // u_i + u_j >= u_{i+j}
    Second,  // u_i + u_j + 1 >= u_{i+j-(l+1)}
};

/// A failed Kunz condition; all indices are 1-based and i <= j.
struct Violation {
    ConditionKind kind;
    std::size_t i;
    std::size_t j;
    std::size_t target;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Index pair test of the word problem. A condition only participates when
/// its target lies in [1, l]; i + j = l + 1 constrains nothing.
bool is_kunz(const Word& w);

/// All failed conditions, ordered by (i, j). Empty iff is_kunz(w).
std::vector<Violation> violations(const Word& w);

/// Maximum letter, 0 for the empty word.
Letter word_depth(const Word& w);

/// Membership in K_q: letters in {1..q}, Kunz, and maximum letter exactly q.
bool in_kunz_language(Letter q, const Word& w);

/// The semigroup with Apéry elements a_i = w_i * (l+1) + i. Throws NotKunz.
NumericalSemigroup to_semigroup(const Word& w);

/// The Kunz coordinates of S as a word; empty for N.
Word from_semigroup(const NumericalSemigroup& s);

/// 1^n 2^n ... (q-1)^n q. Throws DomainError unless q >= 3 and n >= 1.
Word witness_kunz(Letter q, std::size_t n);

/// 1^(n+m) 2^n ... (q-1)^n q, never Kunz. Throws DomainError unless q >= 3,
/// n >= 1 and m >= 1.
Word witness_nonkunz(Letter q, std::size_t n, std::size_t m);

}  // namespace kunzlab
