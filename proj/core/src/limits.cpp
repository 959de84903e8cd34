#include "pfib/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace pfib {

Limits Limits::from_environment() {
    Limits limits;
    if (const char* env = std::getenv("PFIB_MAX_WORDS"); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw InvalidInput("PFIB_MAX_WORDS must be a non-negative integer");
        }
        limits.max_words = value;
    }
    return limits;
}

}  // namespace pfib
