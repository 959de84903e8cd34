#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfib {

/// Input outside an operation's domain (bad p, malformed word, part not in A_p, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    int max_p = 64;
    std::uint64_t max_words = 10'000'000;

    /// Default limits, with max_words overridden by PFIB_MAX_WORDS when set.
    static Limits from_environment();
};

}  // namespace pfib
