#include "pfib/oracle.hpp"

#include <array>
#include <set>
#include <utility>

namespace pfib::oracle {

namespace {

using Cell = std::pair<long, long>;  // (column, row), both 1-based

std::set<Cell> cells_of(const FibWord& w) {
    std::set<Cell> cells;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (long j = 1; j <= w[i]; ++j) cells.emplace(static_cast<long>(i) + 1, j);
    }
    return cells;
}

// Grows every valid word up to max_length, pruning by the caller's predicate.
template <typename Keep, typename Visit>
void grow(int p, std::size_t max_length, const Limits& limits, Keep keep, Visit visit) {
    std::uint64_t visited = 0;
    std::vector<Digit> digits;
    auto step = [&](auto&& self) -> void {
        if (++visited > limits.max_words) {
            throw ResourceLimit("oracle search exceeded the cap of " +
                                std::to_string(limits.max_words) + " words");
        }
        visit(digits);
        if (digits.size() == max_length) return;
        for (int d = 1; d <= p; ++d) {
            digits.push_back(static_cast<Digit>(d));
            if (is_valid_word(p, digits) && keep(digits)) self(self);
            digits.pop_back();
        }
    };
    step(step);
}

}  // namespace

PickReport lattice_stats(const FibWord& w) {
    if (w.empty()) throw InvalidInput("the empty polyomino has no boundary polygon");
    const std::set<Cell> cells = cells_of(w);

    long exposed_edges = 0;
    constexpr std::array<Cell, 4> neighbours{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (const auto& [c, r] : cells) {
        for (const auto& [dc, dr] : neighbours) {
            if (!cells.contains({c + dc, r + dr})) ++exposed_edges;
        }
    }

    // Lattice point (a, b) is the corner shared by cells (a, b), (a+1, b),
    // (a, b+1), (a+1, b+1).
    long inner = 0;
    for (long a = 0; a <= static_cast<long>(w.size()); ++a) {
        for (long b = 0; b <= w.p(); ++b) {
            if (cells.contains({a, b}) && cells.contains({a + 1, b}) &&
                cells.contains({a, b + 1}) && cells.contains({a + 1, b + 1})) {
                ++inner;
            }
        }
    }

    PickReport r;
    r.area = static_cast<std::int64_t>(cells.size());
    r.sper = exposed_edges / 2;
    r.inn = inner;
    r.pick_holds = r.area == r.inn + r.sper - 1;
    return r;
}

TruncatedSeries brute_force_generating_series(int p, std::uint32_t order, Statistic statistic,
                                              const Limits& limits) {
    check_alphabet(p, limits);
    Polynomial total;
    grow(
        p, order, limits, [](const std::vector<Digit>&) { return true; },
        [&](const std::vector<Digit>& digits) {
            const auto n = static_cast<std::uint32_t>(digits.size());
            if (n == 0) {
                total.add_term(1, Monomial{});
                return;
            }
            const PickReport r = lattice_stats(FibWord(p, digits));
            if (statistic == Statistic::area_and_sper) {
                total.add_term(1, Monomial(n, static_cast<std::uint32_t>(r.area),
                                           static_cast<std::uint32_t>(r.sper)));
            } else {
                total.add_term(1, Monomial(n, 0, 0, static_cast<std::uint32_t>(r.inn)));
            }
        });
    return TruncatedSeries(Var::x, order, std::move(total));
}

std::vector<Integer> brute_force_area_distribution(int p, std::int64_t max_area,
                                                   const Limits& limits) {
    check_alphabet(p, limits);
    if (max_area < 0) throw InvalidInput("max_area must be non-negative");
    std::vector<Integer> counts(static_cast<std::size_t>(max_area) + 1, Integer(0));
    auto digit_total = [](const std::vector<Digit>& digits) {
        std::int64_t s = 0;
        for (Digit d : digits) s += d;
        return s;
    };
    grow(
        p, static_cast<std::size_t>(max_area), limits,
        [&](const std::vector<Digit>& digits) { return digit_total(digits) <= max_area; },
        [&](const std::vector<Digit>& digits) { counts[digit_total(digits)] += 1; });
    return counts;
}

}  // namespace pfib::oracle
