#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eedist {

using Symbol = std::uint16_t;

// A finite sequence of symbols drawn from the alphabet {0, ..., alphabet_size-1}.
// Empty sequences are legal. Value equality is symbol-wise; the alphabet size is
// a capacity bound checked at construction, not part of the value.
class SymbolicSequence {
public:
    SymbolicSequence() = default;
    SymbolicSequence(std::vector<Symbol> symbols, std::size_t alphabet_size);

    // Parses letters 'a', 'b', ... into symbol indices 0, 1, ...  Characters
    // outside the first alphabet_size letters are rejected with a message
    // naming the 1-based position.
    static SymbolicSequence from_letters(std::string_view text, std::size_t alphabet_size = 26);

    // Inverse of from_letters; requires alphabet_size <= 26.
    std::string to_letters() const;

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    friend bool operator==(const SymbolicSequence& a, const SymbolicSequence& b) {
        return a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const SymbolicSequence& a, const SymbolicSequence& b) {
        return !(a == b);
    }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_ = 1;
};

// Per-symbol occurrence counts of a sequence. Symbols that never occur have
// count zero; total equals the sequence length.
class FrequencyHistogram {
public:
    explicit FrequencyHistogram(const SymbolicSequence& s);

    std::uint32_t count(std::size_t symbol) const noexcept {
        return symbol < counts_.size() ? counts_[symbol] : 0u;
    }
    std::uint64_t total() const noexcept { return total_; }
    const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

private:
    std::vector<std::uint32_t> counts_;
    std::uint64_t total_ = 0;
};

FrequencyHistogram char_histogram(const SymbolicSequence& s);

}  // namespace eedist
