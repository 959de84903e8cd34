#include "pfib/oracle.hpp"
#include "pfib/series.hpp"

#include <gtest/gtest.h>

using namespace pfib;

namespace {
Polynomial term(long c, std::uint32_t x, std::uint32_t y = 0, std::uint32_t z = 0, std::uint32_t q = 0) {
    return Polynomial(c, Monomial(x, y, z, q));
}
}  // namespace

TEST(LatticeStats, Examples) {
    EXPECT_EQ(oracle::lattice_stats(FibWord::parse(3, "321")), (PickReport{6, 6, 1, true}));
    EXPECT_EQ(oracle::lattice_stats(FibWord::parse(4, "4")), (PickReport{4, 5, 0, true}));
    EXPECT_EQ(oracle::lattice_stats(FibWord::parse(3, "333")), (PickReport{9, 6, 4, true}));
    EXPECT_THROW(oracle::lattice_stats(FibWord(3)), InvalidInput);
}

TEST(BruteForceSeries, PrintedExpansions) {
    const auto f2 = oracle::brute_force_generating_series(2, 3, oracle::Statistic::area_and_sper);
    EXPECT_EQ(f2.poly, term(1, 0) + term(1, 1, 2, 3) + term(1, 2, 3, 4) + term(1, 2, 4, 4) +
                           term(1, 3, 5, 5) + term(1, 3, 6, 5) + term(1, 3, 5, 6));

    const auto g3 = oracle::brute_force_generating_series(3, 4, oracle::Statistic::inner);
    EXPECT_EQ(g3.coefficient(4), term(1, 0, 0, 0, 1) + term(2, 0, 0, 0, 3) + term(2, 0, 0, 0, 4) +
                                     term(1, 0, 0, 0, 5) + term(1, 0, 0, 0, 6));

    for (int p = 1; p <= 4; ++p) {
        EXPECT_EQ(oracle::brute_force_generating_series(p, 0, oracle::Statistic::inner).poly, Polynomial(1));
    }
}

TEST(BruteForceSeries, MatchesDp) {
    for (int p = 1; p <= 4; ++p) {
        EXPECT_EQ(oracle::brute_force_generating_series(p, 9, oracle::Statistic::area_and_sper),
                  series_F_dp(p, 9));
        EXPECT_EQ(oracle::brute_force_generating_series(p, 9, oracle::Statistic::inner), series_G_dp(p, 9));
    }
}

TEST(BruteForceAreaDistribution, Examples) {
    const auto d3 = oracle::brute_force_area_distribution(3, 10);
    EXPECT_EQ(std::vector<Integer>(d3.begin() + 1, d3.end()),
              (std::vector<Integer>{0, 0, 1, 0, 1, 2, 0, 2, 3, 1}));
    // Area 9 from blocks 2 and 21: 2|2|2|21 in four orders plus 21|21|21.
    EXPECT_EQ(oracle::brute_force_area_distribution(2, 9)[9], 5);
    EXPECT_EQ(oracle::brute_force_area_distribution(5, 5)[5], 1);
    EXPECT_EQ(oracle::brute_force_area_distribution(4, 0), (std::vector<Integer>{1}));
}

TEST(BruteForceAreaDistribution, MatchesRecurrence) {
    for (int p = 1; p <= 6; ++p) EXPECT_EQ(oracle::brute_force_area_distribution(p, 30), area_counts(p, 30));
}

TEST(Oracle, RespectsCap) {
    Limits limits;
    limits.max_words = 50;
    EXPECT_THROW(oracle::brute_force_generating_series(3, 9, oracle::Statistic::inner, limits), ResourceLimit);
    EXPECT_THROW(oracle::brute_force_area_distribution(2, 40, limits), ResourceLimit);
}
