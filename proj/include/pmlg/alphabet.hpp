#ifndef PMLG_ALPHABET_HPP
#define PMLG_ALPHABET_HPP

#include <optional>
#include <string>
#include <string_view>

namespace pmlg {

enum class AlphabetName { base4, binary, zigzag6 };

/*
 * One of the three fixed symbol sets used by the reductions:
 *   base4   = b e 0 1      (gadget graphs)
 *   binary  = 0 1          (after the alphabet encoding)
 *   zigzag6 = b e A B x y  (the degree-two path construction)
 */
class Alphabet {
public:
    static Alphabet base4() { return Alphabet(AlphabetName::base4); }
    static Alphabet binary() { return Alphabet(AlphabetName::binary); }
    static Alphabet zigzag6() { return Alphabet(AlphabetName::zigzag6); }

    static std::optional<Alphabet> from_name(std::string_view name) {
        if (name == "base4") return base4();
        if (name == "binary") return binary();
        if (name == "zigzag6") return zigzag6();
        return std::nullopt;
    }

    AlphabetName name() const noexcept { return name_; }

    std::string_view name_string() const noexcept {
        switch (name_) {
        case AlphabetName::base4: return "base4";
        case AlphabetName::binary: return "binary";
        case AlphabetName::zigzag6: return "zigzag6";
        }
        return "";
    }

    std::string_view symbols() const noexcept {
        switch (name_) {
        case AlphabetName::base4: return "be01";
        case AlphabetName::binary: return "01";
        case AlphabetName::zigzag6: return "beABxy";
        }
        return "";
    }

    bool contains(char c) const noexcept { return symbols().find(c) != std::string_view::npos; }

    // true iff every character of s is a symbol of this alphabet
    bool spells(std::string_view s) const noexcept {
        for (char c : s) {
            if (!contains(c)) return false;
        }
        return true;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    explicit Alphabet(AlphabetName name) : name_(name) {}

    AlphabetName name_;
};

} // namespace pmlg

#endif
