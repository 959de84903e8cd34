#pragma once

#include "pfib/error.hpp"
#include "pfib/integer.hpp"
#include "pfib/words.hpp"

#include <cstdint>
#include <string>

namespace pfib {

/// Statistics of one bargraph. Boundary lattice points number 2*sper, so
/// Pick's theorem reads area = inn + sper - 1.
struct PickReport {
    std::int64_t area = 0;
    std::int64_t sper = 0;
    std::int64_t inn = 0;
    bool pick_holds = false;

    friend bool operator==(const PickReport&, const PickReport&) = default;
};

/// Totals over all words with n columns.
struct AggregateStats {
    int p = 0;
    int n = 0;
    Integer count;
    Integer total_area;
    Integer total_sper;
    Integer total_inner;

    /// count == total_inner + total_sper - total_area
    bool pick_holds() const { return count == total_inner + total_sper - total_area; }
};

std::int64_t area(const FibWord& w);

/// n + u_1 + sum of ascents; 0 for the empty word.
std::int64_t semiperimeter(const FibWord& w);

/// Sum over adjacent column pairs of min(u_i, u_{i+1}) - 1.
std::int64_t inner_points(const FibWord& w);

/// Throws InvalidInput for the empty word.
PickReport pick_report(const FibWord& w);

AggregateStats aggregate_stats(int p, int n, const Limits& limits = {});

struct AsciiStyle {
    std::string filled = "[]";
    std::string blank = "  ";
};

/// Bottom-aligned drawing, one glyph group per column, trailing blanks
/// trimmed. Every line ends with '\n'; the empty word draws nothing.
std::string render_ascii(const FibWord& w, const AsciiStyle& style = {});

/// Self-contained SVG of the unit cells.
std::string render_svg(const FibWord& w, int cell_size = 20);

}  // namespace pfib
