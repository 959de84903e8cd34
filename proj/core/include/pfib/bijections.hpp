#pragma once

#include "pfib/error.hpp"
#include "pfib/words.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pfib {

/// Ordered parts, each a block sum p + (p-1) + ... + (p-k).
class Composition {
public:
    /// Throws InvalidInput if a part is not in parts_set(p).
    Composition(int p, std::vector<std::int64_t> parts);

    /// Comma-separated parts; "" is the empty composition.
    static Composition parse(int p, std::string_view text);

    int p() const noexcept { return p_; }
    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::int64_t total() const;
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    int p_;
    std::vector<std::int64_t> parts_;
};

/// Bits with no run of p consecutive ones.
class BinaryWord {
public:
    /// Throws InvalidInput on a run of p or more ones.
    BinaryWord(int p, std::vector<bool> bits);

    /// A 0/1 string.
    static BinaryWord parse(int p, std::string_view text);

    int p() const noexcept { return p_; }
    const std::vector<bool>& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    std::string str() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    int p_;
    std::vector<bool> bits_;
};

/// Sums of the maximal decreasing blocks that start with p.
Composition word_to_composition(const FibWord& w);

/// Expands each part into its block p, p-1, ..., p-k.
FibWord composition_to_word(const Composition& c);

/// Bit i is 1 when column i+1 descends from column i, 0 when it resets to p.
/// Throws InvalidInput for the empty word.
BinaryWord word_to_binary(const FibWord& w);

FibWord binary_to_word(const BinaryWord& b);

}  // namespace pfib
