#include "kunzlab/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "kunzlab/error.hpp"

namespace kunzlab {

namespace {

void check_letters(const std::vector<Letter>& letters) {
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] == 0) {
            throw Error(ErrorCode::DomainError, "letter " + std::to_string(k + 1) + " is 0; letters must be positive");
        }
    }
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { check_letters(letters_); }

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) { check_letters(letters_); }

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    if (text.empty()) return Word{};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error(ErrorCode::ParseError, "malformed letter '" + std::string(token) + "' in word '" + std::string(text) + "'");
        }
        Letter value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size()) {
            throw Error(ErrorCode::ParseError, "letter '" + std::string(token) + "' out of range");
        }
        if (value == 0) {
            throw Error(ErrorCode::ParseError, "letters must be positive, got 0 in '" + std::string(text) + "'");
        }
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

Letter Word::max_letter() const noexcept {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string Word::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(letters_[k]);
    }
    return out;
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word repeat(Letter a, std::size_t count) { return Word(std::vector<Letter>(count, a)); }

}  // namespace kunzlab
