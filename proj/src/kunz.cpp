#include "kunzlab/kunz.hpp"

#include <string>

namespace kunzlab {

namespace {

// Visits every defined condition (i <= j, 1-based) and stops early when the
// visitor returns false.
template <typename Visit>
void for_each_condition(const Word& w, Visit&& visit) {
    const std::size_t len = w.size();
    for (std::size_t i = 1; i <= len; ++i) {
        for (std::size_t j = i; j <= len; ++j) {
            const std::size_t sum = i + j;
            if (sum <= len) {
                if (!visit(ConditionKind::First, i, j, sum)) return;
            } else if (sum >= len + 2) {
                if (!visit(ConditionKind::Second, i, j, sum - (len + 1))) return;
            }
        }
    }
}

bool holds(const Word& w, ConditionKind kind, std::size_t i, std::size_t j, std::size_t target) {
    const std::uint64_t lhs = std::uint64_t{w.letter(i)} + w.letter(j) + (kind == ConditionKind::Second ? 1 : 0);
    return lhs >= w.letter(target);
}

}  // namespace

bool is_kunz(const Word& w) {
    bool ok = true;
    for_each_condition(w, [&](ConditionKind kind, std::size_t i, std::size_t j, std::size_t t) {
        ok = holds(w, kind, i, j, t);
        return ok;
    });
    return ok;
}

std::vector<Violation> violations(const Word& w) {
    std::vector<Violation> out;
    for_each_condition(w, [&](ConditionKind kind, std::size_t i, std::size_t j, std::size_t t) {
        if (!holds(w, kind, i, j, t)) out.push_back({kind, i, j, t});
        return true;
    });
    return out;
}

Letter word_depth(const Word& w) { return w.max_letter(); }

bool in_kunz_language(Letter q, const Word& w) { return word_depth(w) == q && is_kunz(w); }

NumericalSemigroup to_semigroup(const Word& w) {
    if (!is_kunz(w)) throw Error(ErrorCode::NotKunz, "word '" + w.to_string() + "' is not Kunz");
    if (w.empty()) return NumericalSemigroup{};
    const auto m = static_cast<std::int64_t>(w.size() + 1);
    std::vector<std::int64_t> gens{m};
    for (std::size_t i = 1; i <= w.size(); ++i) {
        gens.push_back(static_cast<std::int64_t>(w.letter(i)) * m + static_cast<std::int64_t>(i));
    }
    return NumericalSemigroup::from_generators(gens);
}

Word from_semigroup(const NumericalSemigroup& s) {
    std::vector<Letter> letters;
    for (const std::int64_t k : s.apery().kunz) letters.push_back(static_cast<Letter>(k));
    return Word(std::move(letters));
}

Word witness_kunz(Letter q, std::size_t n) {
    if (q < 3 || n < 1) throw Error(ErrorCode::DomainError, "witness_kunz needs q >= 3 and n >= 1");
    std::vector<Letter> letters;
    for (Letter a = 1; a < q; ++a) letters.insert(letters.end(), n, a);
    letters.push_back(q);
    return Word(std::move(letters));
}

Word witness_nonkunz(Letter q, std::size_t n, std::size_t m) {
    if (q < 3 || n < 1 || m < 1) throw Error(ErrorCode::DomainError, "witness_nonkunz needs q >= 3, n >= 1, m >= 1");
    return repeat(1, m).concat(witness_kunz(q, n));
}

}  // namespace kunzlab
