#pragma once

#include "pfib/error.hpp"
#include "pfib/integer.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfib {

using Digit = std::uint16_t;

/// A p-Fibonacci word: starts with p, and every digit d is followed by d-1
/// (when d >= 2) or by p. Also the column-height profile of a bargraph.
class FibWord {
public:
    /// The empty word over alphabet {1..p}.
    explicit FibWord(int p);

    /// Throws InvalidInput unless `digits` is a valid p-Fibonacci word.
    FibWord(int p, std::vector<Digit> digits);

    /// Accepts "32321" when p <= 9, or comma-separated digits for any p.
    static FibWord parse(int p, std::string_view text);

    int p() const noexcept { return p_; }
    std::span<const Digit> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    Digit back() const { return digits_.back(); }

    /// Concatenated digits for p <= 9, comma-separated otherwise. ε is "".
    std::string str() const;

    friend bool operator==(const FibWord&, const FibWord&) = default;
    friend auto operator<=>(const FibWord&, const FibWord&) = default;

private:
    int p_;
    std::vector<Digit> digits_;
};

/// A node of the generating tree: the last digit of a word, or the root
/// state (last_digit == 0) standing for the empty word.
struct WordState {
    int p;
    int last_digit;

    static WordState root(int p) { return {p, 0}; }
    bool is_root() const noexcept { return last_digit == 0; }

    friend bool operator==(const WordState&, const WordState&) = default;
};

/// F_{p,n}; defined for p >= 1 and n >= 2 - p.
Integer fibonacci_number(int p, long n);

bool is_valid_word(int p, std::span<const Digit> digits);

/// Descent digit first (when last_digit >= 2), then the reset digit p.
std::vector<WordState> successors(const WordState& state);

/// Number of words of length n, i.e. F_{p,n+1}.
Integer count_words(int p, long n);

/// Visits every word of length n in ascending lexicographic order. The
/// callback sees the digits of a single reused buffer.
void for_each_word(int p, int n, const std::function<void(std::span<const Digit>)>& visit,
                   const Limits& limits = {});

/// All words of length n in ascending lexicographic order.
std::vector<FibWord> enumerate_words(int p, int n, const Limits& limits = {});

/// Throws InvalidInput when p is outside [1, limits.max_p].
void check_alphabet(int p, const Limits& limits = {});

}  // namespace pfib
