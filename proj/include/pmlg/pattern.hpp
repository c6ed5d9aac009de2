#ifndef PMLG_PATTERN_HPP
#define PMLG_PATTERN_HPP

#include <string>
#include <utility>

#include "pmlg/alphabet.hpp"
#include "pmlg/error.hpp"

namespace pmlg {

// A nonempty query string over one of the fixed alphabets.
class Pattern {
public:
    Pattern(Alphabet alphabet, std::string symbols) : alphabet_(alphabet), symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw Error("pattern must be nonempty");
        if (!alphabet_.spells(symbols_)) {
            throw AlphabetMismatch("pattern '" + symbols_ + "' is not over " +
                                   std::string(alphabet_.name_string()));
        }
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Alphabet alphabet_;
    std::string symbols_;
};

} // namespace pmlg

#endif
