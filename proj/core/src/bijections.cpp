#include "pfib/bijections.hpp"

#include <charconv>
#include <numeric>

namespace pfib {

namespace {

// Length of the block p, p-1, ..., whose digits sum to `part`; 0 if none.
int block_length(int p, std::int64_t part) {
    std::int64_t sum = 0;
    for (int k = 0; k < p; ++k) {
        sum += p - k;
        if (sum == part) return k + 1;
        if (sum > part) break;
    }
    return 0;
}

}  // namespace

Composition::Composition(int p, std::vector<std::int64_t> parts) : p_(p), parts_(std::move(parts)) {
    check_alphabet(p);
    for (std::int64_t part : parts_) {
        if (block_length(p, part) == 0) {
            throw InvalidInput("part " + std::to_string(part) + " is not a block sum for p=" +
                               std::to_string(p));
        }
    }
}

Composition Composition::parse(int p, std::string_view text) {
    std::vector<std::int64_t> parts;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view field = text.substr(pos, next - pos);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 1) {
                throw InvalidInput("malformed part '" + std::string(field) + "'");
            }
            parts.push_back(value);
            pos = next + 1;
        }
    }
    return Composition(p, std::move(parts));
}

std::int64_t Composition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Composition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

BinaryWord::BinaryWord(int p, std::vector<bool> bits) : p_(p), bits_(std::move(bits)) {
    check_alphabet(p);
    int run = 0;
    for (bool b : bits_) {
        run = b ? run + 1 : 0;
        if (run >= p) {
            throw InvalidInput("binary word has a run of " + std::to_string(p) +
                               " consecutive ones");
        }
    }
}

BinaryWord BinaryWord::parse(int p, std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidInput(std::string("unexpected bit '") + c + "'");
        bits.push_back(c == '1');
    }
    return BinaryWord(p, std::move(bits));
}

std::string BinaryWord::str() const {
    std::string out;
    for (bool b : bits_) out += b ? '1' : '0';
    return out;
}

Composition word_to_composition(const FibWord& w) {
    std::vector<std::int64_t> parts;
    auto d = w.digits();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == 0 || d[i] + 1 != d[i - 1]) parts.push_back(0);
        parts.back() += d[i];
    }
    return Composition(w.p(), std::move(parts));
}

FibWord composition_to_word(const Composition& c) {
    const int p = c.p();
    std::vector<Digit> digits;
    for (std::int64_t part : c.parts()) {
        const int len = block_length(p, part);
        for (int k = 0; k < len; ++k) digits.push_back(static_cast<Digit>(p - k));
    }
    return FibWord(p, std::move(digits));
}

BinaryWord word_to_binary(const FibWord& w) {
    if (w.empty()) throw InvalidInput("the empty word has no transition string");
    auto d = w.digits();
    std::vector<bool> bits;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) bits.push_back(d[i + 1] + 1 == d[i]);
    return BinaryWord(w.p(), std::move(bits));
}

FibWord binary_to_word(const BinaryWord& b) {
    const int p = b.p();
    std::vector<Digit> digits{static_cast<Digit>(p)};
    for (bool descent : b.bits()) {
        digits.push_back(static_cast<Digit>(descent ? digits.back() - 1 : p));
    }
    return FibWord(p, std::move(digits));
}

}  // namespace pfib
