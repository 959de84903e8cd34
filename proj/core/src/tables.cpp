#include "pfib/tables.hpp"

#include "pfib/oracle.hpp"
#include "pfib/series.hpp"
#include "pfib/words.hpp"

#include <array>

namespace pfib {

namespace {

using Row = std::array<std::int64_t, 10>;

// Rows p = 2..5, columns n = 1..10.
constexpr std::array<Row, 4> kTotalArea{{
    {2, 7, 16, 35, 70, 136, 256, 473, 860, 1545},
    {3, 11, 31, 73, 168, 370, 790, 1658, 3425, 6989},
    {4, 15, 43, 111, 261, 602, 1350, 2966, 6414, 13714},
    {5, 19, 55, 143, 351, 816, 1865, 4178, 9218, 20094},
}};

constexpr std::array<Row, 4> kAreaCounts{{
    {0, 1, 1, 1, 2, 2, 3, 4, 4, 7},
    {0, 0, 1, 0, 1, 2, 0, 2, 3, 1},
    {0, 0, 0, 1, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
}};

constexpr std::array<Row, 4> kTotalSper{{
    {3, 8, 16, 33, 63, 119, 219, 398, 714, 1269},
    {4, 10, 25, 54, 118, 251, 521, 1071, 2176, 4380},
    {5, 12, 29, 69, 152, 335, 727, 1557, 3297, 6931},
    {6, 14, 33, 77, 177, 390, 856, 1859, 4001, 8545},
}};

constexpr std::array<Row, 4> kTotalInner{{
    {0, 1, 3, 7, 15, 30, 58, 109, 201, 365},
    {0, 3, 10, 26, 63, 143, 313, 668, 1398, 2883},
    {0, 5, 18, 50, 124, 296, 679, 1517, 3325, 7184},
    {0, 7, 26, 74, 190, 457, 1070, 2439, 5453, 12013},
}};

const std::array<Row, 4>& reference_rows(TableKind kind) {
    switch (kind) {
        case TableKind::total_area: return kTotalArea;
        case TableKind::area_counts: return kAreaCounts;
        case TableKind::total_sper: return kTotalSper;
        case TableKind::total_inner: return kTotalInner;
    }
    throw InvalidInput("unknown table");
}

}  // namespace

TableKind parse_table_kind(const std::string& text) {
    if (text == "1") return TableKind::total_area;
    if (text == "2") return TableKind::area_counts;
    if (text == "3") return TableKind::total_sper;
    if (text == "4") return TableKind::total_inner;
    throw InvalidInput("table must be one of 1, 2, 3, 4; got '" + text + "'");
}

std::string table_symbol(TableKind kind) {
    switch (kind) {
        case TableKind::total_area: return "a";
        case TableKind::area_counts: return "d";
        case TableKind::total_sper: return "s";
        case TableKind::total_inner: return "i";
    }
    return "?";
}

std::optional<std::int64_t> printed_value(TableKind kind, int p, int n) {
    if (p < 2 || p > 5 || n < 1 || n > 10) return std::nullopt;
    return reference_rows(kind)[static_cast<std::size_t>(p - 2)][static_cast<std::size_t>(n - 1)];
}

const TableCell& Table::at(int p, int n) const {
    if (p < pmin || p > pmax || n < 1 || n > nmax) throw InvalidInput("cell outside the table");
    return cells[static_cast<std::size_t>((p - pmin) * nmax + (n - 1))];
}

std::vector<const TableCell*> Table::mismatches() const {
    std::vector<const TableCell*> out;
    for (const auto& cell : cells) {
        if (cell.mismatch()) out.push_back(&cell);
    }
    return out;
}

Table compute_table(TableKind kind, int pmin, int pmax, int nmax, const Limits& limits) {
    if (pmin < 1 || pmax < pmin) throw InvalidInput("need 1 <= pmin <= pmax");
    if (nmax < 1) throw InvalidInput("nmax must be at least 1");
    check_alphabet(pmax, limits);

    Table table{kind, pmin, pmax, nmax, {}};
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Integer> values;
        if (kind == TableKind::area_counts) {
            values = area_counts(p, nmax);
        } else {
            const RationalGF gf = kind == TableKind::total_area  ? gf_total_area(p)
                                  : kind == TableKind::total_sper ? gf_total_sper(p)
                                                                  : gf_total_inner(p);
            values = specialize_at_one(expand_rational(gf, static_cast<std::uint32_t>(nmax)));
        }
        for (int n = 1; n <= nmax; ++n) {
            TableCell cell{p, n, values[static_cast<std::size_t>(n)], printed_value(kind, p, n), {}};
            if (kind == TableKind::area_counts && cell.mismatch()) {
                cell.oracle = oracle::brute_force_area_distribution(p, n, limits)[n];
            }
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

}  // namespace pfib
