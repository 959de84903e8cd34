#include "pfib/words.hpp"

#include <charconv>
#include <deque>
#include <limits>

namespace pfib {

namespace {

void check_p(int p) {
    if (p < 1 || p > std::numeric_limits<Digit>::max()) {
        throw InvalidInput("alphabet bound p must be a positive integer, got " + std::to_string(p));
    }
}

}  // namespace

FibWord::FibWord(int p) : p_(p) { check_p(p); }

FibWord::FibWord(int p, std::vector<Digit> digits) : p_(p), digits_(std::move(digits)) {
    check_p(p);
    if (!is_valid_word(p, digits_)) {
        std::string shown;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (i > 0 && p > 9) shown += ',';
            shown += std::to_string(digits_[i]);
        }
        throw InvalidInput("'" + shown + "' is not a " + std::to_string(p) + "-Fibonacci word");
    }
}

FibWord FibWord::parse(int p, std::string_view text) {
    check_p(p);
    std::vector<Digit> digits;
    if (text.find(',') == std::string_view::npos && p <= 9) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw InvalidInput(std::string("unexpected character '") + c + "' in word");
            }
            digits.push_back(static_cast<Digit>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string_view field = text.substr(pos, next - pos);
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() ||
                value > std::numeric_limits<Digit>::max()) {
                throw InvalidInput("malformed digit '" + std::string(field) + "' in word");
            }
            digits.push_back(static_cast<Digit>(value));
            pos = next + 1;
        }
    }
    return FibWord(p, std::move(digits));
}

std::string FibWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i > 0 && p_ > 9) out += ',';
        out += std::to_string(digits_[i]);
    }
    return out;
}

void check_alphabet(int p, const Limits& limits) {
    check_p(p);
    if (p > limits.max_p) {
        throw InvalidInput("alphabet bound p=" + std::to_string(p) + " exceeds the limit " +
                           std::to_string(limits.max_p));
    }
}

Integer fibonacci_number(int p, long n) {
    check_p(p);
    if (n < 2L - p) {
        throw InvalidInput("F_{p,n} is undefined for n=" + std::to_string(n) +
                           " (needs n >= " + std::to_string(2L - p) + ")");
    }
    if (n <= 0) return 0;
    if (n == 1) return 1;

    // Window of the last p values, oldest first; initially F_{p,2-p..1}.
    std::deque<Integer> window(static_cast<std::size_t>(p), Integer(0));
    window.back() = 1;
    Integer sum = 1;
    for (long k = 2; k <= n; ++k) {
        Integer next = sum;
        sum += next;
        sum -= window.front();
        window.pop_front();
        window.push_back(std::move(next));
    }
    return window.back();
}

bool is_valid_word(int p, std::span<const Digit> digits) {
    if (p < 1) return false;
    if (digits.empty()) return true;
    if (digits.front() != p) return false;
    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
        const int cur = digits[i];
        const int next = digits[i + 1];
        if (cur < 1 || cur > p) return false;
        if (next != p && !(cur >= 2 && next == cur - 1)) return false;
    }
    return true;
}

std::vector<WordState> successors(const WordState& state) {
    if (state.is_root()) return {{state.p, state.p}};
    std::vector<WordState> out;
    if (state.last_digit >= 2) out.push_back({state.p, state.last_digit - 1});
    out.push_back({state.p, state.p});
    return out;
}

Integer count_words(int p, long n) {
    if (n < 0) throw InvalidInput("word length must be non-negative");
    return fibonacci_number(p, n + 1);
}

void for_each_word(int p, int n, const std::function<void(std::span<const Digit>)>& visit,
                   const Limits& limits) {
    check_alphabet(p, limits);
    if (n < 0) throw InvalidInput("word length must be non-negative");
    if (count_words(p, n) > limits.max_words) {
        throw ResourceLimit("enumerating " + to_string(count_words(p, n)) +
                            " words exceeds the cap of " + std::to_string(limits.max_words));
    }

    std::vector<Digit> buffer;
    buffer.reserve(static_cast<std::size_t>(n));
    // Successors come in ascending digit order, so depth-first order is lexicographic.
    auto descend = [&](auto&& self, WordState state) -> void {
        if (buffer.size() == static_cast<std::size_t>(n)) {
            visit(buffer);
            return;
        }
        for (const WordState& child : successors(state)) {
            buffer.push_back(static_cast<Digit>(child.last_digit));
            self(self, child);
            buffer.pop_back();
        }
    };
    descend(descend, WordState::root(p));
}

std::vector<FibWord> enumerate_words(int p, int n, const Limits& limits) {
    std::vector<FibWord> out;
    for_each_word(
        p, n,
        [&](std::span<const Digit> d) { out.emplace_back(p, std::vector<Digit>(d.begin(), d.end())); },
        limits);
    return out;
}

}  // namespace pfib
