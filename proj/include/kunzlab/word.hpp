#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kunzlab {

using Letter = std::uint32_t;

/// A finite word over the positive integers. Letters are addressed 1-based
/// through letter(); the empty word is valid.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    /// Parses the wire format: comma-separated positive decimals, "" for the
    /// empty word. Throws Error(ParseError).
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 1-based access, index in [1, size()].
    Letter letter(std::size_t index) const { return letters_.at(index - 1); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }

    /// Largest letter, 0 for the empty word.
    Letter max_letter() const noexcept;

    std::string to_string() const;

    Word concat(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::vector<Letter> letters_;
};

/// a^count as a word.
Word repeat(Letter a, std::size_t count);

}  // namespace kunzlab
