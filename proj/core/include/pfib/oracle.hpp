#pragma once

#include "pfib/error.hpp"
#include "pfib/geometry.hpp"
#include "pfib/integer.hpp"
#include "pfib/series.hpp"
#include "pfib/words.hpp"

#include <cstdint>
#include <vector>

/// Deliberately naive reference computations. Nothing here calls the
/// closed-form statistics, the transfer DP or the successor structure.
namespace pfib::oracle {

/// Builds the cell set of the bargraph, counts exposed cell edges for the
/// perimeter and lattice points touching four cells for the inner points.
PickReport lattice_stats(const FibWord& w);

enum class Statistic {
    area_and_sper,  ///< x^n y^area z^sper
    inner,          ///< x^n q^inn
};

/// Sums monomials of every word with at most `order` columns. Words are
/// grown digit by digit, keeping any prefix accepted by is_valid_word.
TruncatedSeries brute_force_generating_series(int p, std::uint32_t order, Statistic statistic,
                                              const Limits& limits = {});

/// d_p(0..max_area) by depth-first search over words pruned by digit sum.
std::vector<Integer> brute_force_area_distribution(int p, std::int64_t max_area,
                                                   const Limits& limits = {});

}  // namespace pfib::oracle
