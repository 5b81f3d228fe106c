#include "eedist/symbolic.hpp"

#include "eedist/errors.hpp"

namespace eedist {

SymbolicSequence::SymbolicSequence(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) {
        throw InvalidParameter("alphabet size must be positive");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_size_) {
            throw InvalidParameter("symbol " + std::to_string(symbols_[i]) + " at position " +
                                   std::to_string(i + 1) + " exceeds alphabet size " +
                                   std::to_string(alphabet_size_));
        }
    }
}

SymbolicSequence SymbolicSequence::from_letters(std::string_view text, std::size_t alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > 26) {
        throw InvalidParameter("letter alphabets must have between 1 and 26 symbols");
    }
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    const char last = static_cast<char>('a' + alphabet_size - 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < 'a' || ch > last) {
            throw InvalidParameter(std::string("character '") + ch + "' at position " +
                                   std::to_string(i + 1) + " is outside the a-" + last +
                                   " window");
        }
        symbols.push_back(static_cast<Symbol>(ch - 'a'));
    }
    return SymbolicSequence(std::move(symbols), alphabet_size);
}

std::string SymbolicSequence::to_letters() const {
    if (alphabet_size_ > 26) {
        throw InvalidParameter("sequence alphabet is too large for letter output");
    }
    std::string out;
    out.reserve(symbols_.size());
    for (const Symbol s : symbols_) {
        out.push_back(static_cast<char>('a' + s));
    }
    return out;
}

FrequencyHistogram::FrequencyHistogram(const SymbolicSequence& s)
    : counts_(s.alphabet_size(), 0u), total_(s.size()) {
    for (const Symbol sym : s.symbols()) {
        ++counts_[sym];
    }
}

FrequencyHistogram char_histogram(const SymbolicSequence& s) { return FrequencyHistogram(s); }

}  // namespace eedist
