#pragma once

#include "pfib/error.hpp"
#include "pfib/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfib {

enum class TableKind {
    total_area = 1,   ///< a_p(n)
    area_counts = 2,  ///< d_p(n)
    total_sper = 3,   ///< s_p(n)
    total_inner = 4,  ///< i_p(n)
};

/// Parses "1".."4".
TableKind parse_table_kind(const std::string& text);

/// Short symbol of the tabulated sequence: "a", "d", "s" or "i".
std::string table_symbol(TableKind kind);

/// Reference values for 2 <= p <= 5, 1 <= n <= 10 as originally published.
std::optional<std::int64_t> printed_value(TableKind kind, int p, int n);

struct TableCell {
    int p = 0;
    int n = 0;
    Integer value;
    std::optional<std::int64_t> printed;
    /// Brute-force count, filled in for area-count cells that disagree
    /// with the printed value.
    std::optional<Integer> oracle;

    bool mismatch() const { return printed.has_value() && value != *printed; }
};

struct Table {
    TableKind kind = TableKind::total_area;
    int pmin = 2;
    int pmax = 5;
    int nmax = 10;
    std::vector<TableCell> cells;  ///< row-major: p, then n = 1..nmax

    const TableCell& at(int p, int n) const;
    std::vector<const TableCell*> mismatches() const;
};

/// Statistics come from the rational generating functions; area counts
/// from the part-size recurrence.
Table compute_table(TableKind kind, int pmin, int pmax, int nmax, const Limits& limits = {});

}  // namespace pfib
