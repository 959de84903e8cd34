#include "pfib/oracle.hpp"
#include "pfib/series.hpp"
#include "pfib/words.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pfib;

namespace {

Polynomial term(long c, std::uint32_t x, std::uint32_t y = 0, std::uint32_t z = 0, std::uint32_t q = 0) {
    return Polynomial(c, Monomial(x, y, z, q));
}

Polynomial x_poly(std::initializer_list<std::pair<std::uint32_t, long>> terms) {
    Polynomial out;
    for (auto [e, c] : terms) out.add_term(c, Monomial(e));
    return out;
}

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2), count(0, 4);
    Polynomial p;
    for (int i = count(rng); i > 0; --i) {
        p.add_term(coeff(rng), Monomial(exp(rng), exp(rng), exp(rng), exp(rng)));
    }
    return p;
}

}  // namespace

TEST(PolyOps, Examples) {
    const auto one_plus_x = truncate(term(1, 0) + term(1, 1), 1);
    const auto one_minus_x = truncate(term(1, 0) - term(1, 1), 1);
    EXPECT_EQ(multiply(one_plus_x, one_minus_x).poly, Polynomial(1));

    const auto a = truncate(term(2, 1, 2, 3) + term(-1, 0, 0, 0, 4), 3);
    EXPECT_EQ(add(a, truncate(Polynomial(), 3)), a);

    EXPECT_EQ(multiply(truncate(term(1, 1, 2, 3), 2), truncate(term(1, 1, 1, 1), 2)).poly,
              term(1, 2, 3, 4));
    EXPECT_TRUE(multiply(truncate(term(1, 2), 2), truncate(term(1, 1), 2)).poly.is_zero());
}

TEST(PolyOps, RejectsMismatchedTruncation) {
    EXPECT_THROW(add(truncate(Polynomial(1), 2), truncate(Polynomial(1), 3)), InvalidInput);
    EXPECT_THROW(multiply(truncate(Polynomial(1), 2), truncate(Polynomial(1), 2, Var::y)), InvalidInput);
}

TEST(PolyOps, NoZeroCoefficientsStored) {
    Polynomial p = term(3, 1, 1) + term(-3, 1, 1);
    EXPECT_TRUE(p.is_zero());
    p = term(2, 4) * term(0, 1);
    EXPECT_TRUE(p.is_zero());
}

TEST(PolyOps, RingLaws) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = truncate(random_poly(rng), 3);
        const auto b = truncate(random_poly(rng), 3);
        const auto c = truncate(random_poly(rng), 3);
        const auto zero = truncate(Polynomial(), 3);
        const auto one = truncate(Polynomial(1), 3);
        EXPECT_EQ(add(a, b), add(b, a));
        EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
        EXPECT_EQ(multiply(a, b), multiply(b, a));
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_EQ(add(a, zero), a);
        EXPECT_EQ(multiply(a, one), a);
        EXPECT_EQ(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c)));
    }
}

TEST(ExpandRational, GeometricSeries) {
    const RationalGF r{Polynomial(1), x_poly({{0, 1}, {1, -1}}), Var::x};
    EXPECT_EQ(expand_rational(r, 3).poly, x_poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST(ExpandRational, PrintedExpansions) {
    EXPECT_EQ(expand_rational(closed_form_F(2), 2).poly,
              term(1, 0) + term(1, 1, 2, 3) + term(1, 2, 3, 4) + term(1, 2, 4, 4));
    EXPECT_EQ(expand_rational(closed_form_G(3), 2).poly,
              term(1, 0) + term(1, 1) + term(1, 2, 0, 0, 1) + term(1, 2, 0, 0, 2));
}

TEST(ExpandRational, RejectsBadDenominator) {
    EXPECT_THROW(expand_rational({Polynomial(1), x_poly({{0, 2}, {1, -1}}), Var::x}, 3), InvalidInput);
    EXPECT_THROW(expand_rational({Polynomial(1), term(1, 1), Var::x}, 3), InvalidInput);
    // 1 - q has a q-term with no x: no terminating expansion in x.
    EXPECT_THROW(expand_rational({Polynomial(1), term(1, 0) - term(1, 0, 0, 0, 1), Var::x}, 3),
                 InvalidInput);
}

TEST(ExpandRational, RemultiplicationRecoversNumerator) {
    for (int p = 1; p <= 5; ++p) {
        for (const RationalGF& r : {closed_form_F(p), closed_form_G(p), gf_total_area(p),
                                    gf_total_sper(p), gf_total_inner(p)}) {
            const auto s = expand_rational(r, 12);
            EXPECT_EQ(multiply(s, truncate(r.denominator, 12)), truncate(r.numerator, 12));
        }
    }
}

TEST(ClosedFormF, SmallAlphabets) {
    const RationalGF f2 = closed_form_F(2);
    EXPECT_EQ(f2.numerator,
              term(1, 0) - term(1, 1, 2, 1) + term(1, 1, 2, 3) - term(1, 2, 3, 3) + term(1, 2, 3, 4));
    EXPECT_EQ(f2.denominator, term(1, 0) - term(1, 1, 2, 1) - term(1, 2, 3, 3));

    EXPECT_EQ(closed_form_F(3).denominator,
              term(1, 0) - term(1, 1, 3, 1) - term(1, 2, 5, 3) - term(1, 3, 6, 5));
    EXPECT_EQ(closed_form_F(3).numerator, term(1, 0) - term(1, 1, 3, 1) - term(1, 2, 5, 3) +
                                              term(1, 1, 3, 4) + term(1, 2, 5, 5) - term(1, 3, 6, 5) +
                                              term(1, 3, 6, 6));

    const RationalGF f1 = closed_form_F(1);
    EXPECT_EQ(f1.numerator, term(1, 0) - term(1, 1, 1, 1) + term(1, 1, 1, 2));
    EXPECT_EQ(f1.denominator, term(1, 0) - term(1, 1, 1, 1));
    // p = 1: one word 11...1 per length, area n and sper n + 1.
    EXPECT_EQ(expand_rational(f1, 8),
              oracle::brute_force_generating_series(1, 8, oracle::Statistic::area_and_sper));
}

TEST(ClosedFormF, F4Denominator) {
    EXPECT_EQ(closed_form_F(4).denominator, term(1, 0) - term(1, 1, 4, 1) - term(1, 2, 7, 3) -
                                                term(1, 3, 9, 5) - term(1, 4, 10, 7));
}

TEST(SeriesFDp, Examples) {
    EXPECT_EQ(series_F_dp(4, 3).coefficient(3),
              term(1, 0, 9, 7) + term(1, 0, 11, 7) + term(1, 0, 12, 7) + term(1, 0, 11, 8));
    EXPECT_EQ(series_F_dp(3, 1).poly, term(1, 0) + term(1, 1, 3, 4));
    EXPECT_EQ(series_F_dp(2, 3).coefficient(3), term(1, 0, 5, 5) + term(1, 0, 6, 5) + term(1, 0, 5, 6));
    EXPECT_EQ(series_F_dp(3, 0).poly, Polynomial(1));
}

TEST(ClosedFormG, SmallAlphabets) {
    const RationalGF g2 = closed_form_G(2);
    // (1 + x(1 - q)) / (1 - x(q + x))
    EXPECT_EQ(g2.numerator, term(1, 0) + term(1, 1) - term(1, 1, 0, 0, 1));
    EXPECT_EQ(g2.denominator, term(1, 0) - term(1, 1, 0, 0, 1) - term(1, 2));

    // (1 + (1 - q^2)x + (1 - q)q x^2) / (1 - q x^3 - q^2 x (1 + x))
    const RationalGF g3 = closed_form_G(3);
    EXPECT_EQ(g3.numerator, term(1, 0) + term(1, 1) - term(1, 1, 0, 0, 2) + term(1, 2, 0, 0, 1) -
                                term(1, 2, 0, 0, 2));
    EXPECT_EQ(g3.denominator,
              term(1, 0) - term(1, 3, 0, 0, 1) - term(1, 1, 0, 0, 2) - term(1, 2, 0, 0, 2));

    // (1 + (1 - q^3)x + q^2(1 - q^2)x^2 + (1 - q)q^3 x^3) / (1 - q^4 x^2 (1 + x) - q^3 (x + x^4))
    const RationalGF g4 = closed_form_G(4);
    EXPECT_EQ(g4.numerator, term(1, 0) + term(1, 1) - term(1, 1, 0, 0, 3) + term(1, 2, 0, 0, 2) -
                                term(1, 2, 0, 0, 4) + term(1, 3, 0, 0, 3) - term(1, 3, 0, 0, 4));
    EXPECT_EQ(g4.denominator, term(1, 0) - term(1, 2, 0, 0, 4) - term(1, 3, 0, 0, 4) -
                                  term(1, 1, 0, 0, 3) - term(1, 4, 0, 0, 3));
    EXPECT_EQ(expand_rational(g4, 3).coefficient(3),
              term(1, 0, 0, 0, 3) + term(1, 0, 0, 0, 4) + term(1, 0, 0, 0, 5) + term(1, 0, 0, 0, 6));
}

TEST(SeriesGDp, Examples) {
    EXPECT_EQ(series_G_dp(2, 4).coefficient(4),
              term(1, 0) + term(2, 0, 0, 0, 1) + term(1, 0, 0, 0, 2) + term(1, 0, 0, 0, 3));
    EXPECT_EQ(series_G_dp(3, 3).coefficient(3),
              term(1, 0, 0, 0, 1) + term(1, 0, 0, 0, 2) + term(1, 0, 0, 0, 3) + term(1, 0, 0, 0, 4));
    for (int p = 1; p <= 4; ++p) EXPECT_EQ(series_G_dp(p, 0).poly, Polynomial(1));
}

TEST(Series, DpMatchesClosedForms) {
    for (int p = 1; p <= 6; ++p) {
        EXPECT_EQ(series_F_dp(p, 15), expand_rational(closed_form_F(p), 15)) << "p=" << p;
        EXPECT_EQ(series_G_dp(p, 15), expand_rational(closed_form_G(p), 15)) << "p=" << p;
    }
}

TEST(Series, CountingSpecialization) {
    for (int p = 1; p <= 6; ++p) {
        const auto f = specialize_at_one(series_F_dp(p, 15));
        const auto g = specialize_at_one(series_G_dp(p, 15));
        for (std::uint32_t n = 0; n <= 15; ++n) {
            EXPECT_EQ(f[n], count_words(p, n));
            EXPECT_EQ(g[n], count_words(p, n));
        }
    }
}

TEST(Series, DegreeBoundsPerColumn) {
    for (int p = 1; p <= 5; ++p) {
        for (const auto& [m, c] : series_F_dp(p, 10).poly.terms()) {
            EXPECT_LE(m[Var::y], static_cast<std::uint32_t>(p) * m[Var::x]);
            EXPECT_LE(m[Var::z], static_cast<std::uint32_t>(p + 1) * m[Var::x]);
            EXPECT_GT(c, 0);
        }
    }
}

TEST(TotalGf, PrintedValues) {
    auto coeffs = [](const RationalGF& r, std::uint32_t n) { return specialize_at_one(expand_rational(r, n)); };
    auto a2 = coeffs(gf_total_area(2), 5);
    EXPECT_EQ(std::vector<Integer>(a2.begin() + 1, a2.end()), (std::vector<Integer>{2, 7, 16, 35, 70}));
    EXPECT_EQ(coeffs(gf_total_area(5), 10)[10], 20094);
    EXPECT_EQ(coeffs(gf_total_area(3), 1)[1], 3);

    auto s2 = coeffs(gf_total_sper(2), 5);
    EXPECT_EQ(std::vector<Integer>(s2.begin() + 1, s2.end()), (std::vector<Integer>{3, 8, 16, 33, 63}));
    EXPECT_EQ(coeffs(gf_total_sper(4), 5)[5], 152);
    EXPECT_EQ(coeffs(gf_total_sper(3), 1)[1], 4);

    auto i2 = coeffs(gf_total_inner(2), 5);
    EXPECT_EQ(std::vector<Integer>(i2.begin() + 1, i2.end()), (std::vector<Integer>{0, 1, 3, 7, 15}));
    EXPECT_EQ(coeffs(gf_total_inner(4), 5)[5], 124);
    for (int p = 1; p <= 8; ++p) EXPECT_EQ(coeffs(gf_total_inner(p), 1)[1], 0);
}

TEST(TotalGf, FactoredAreaFormAgrees) {
    // x(p^2(1-x)^2 x^p + 2x(1-x^p) - p(1-x)(2 - x^p + x^(p+1))) / (2(x-1)(1-2x+x^(p+1))^2)
    for (int p = 1; p <= 6; ++p) {
        const auto P = static_cast<std::uint32_t>(p);
        const long L = p;
        const Polynomial one_minus_x = x_poly({{0, 1}, {1, -1}});
        Polynomial inner = pow(one_minus_x, 2) * x_poly({{P, L * L}});
        inner += x_poly({{1, 2}, {P + 1, -2}});
        inner -= one_minus_x * x_poly({{0, 2 * L}, {P, -L}, {P + 1, L}});
        const Polynomial numerator = (x_poly({{1, 1}}) * inner).divided_exactly(-2);
        const Polynomial denominator = one_minus_x * pow(x_poly({{0, 1}, {1, -2}, {P + 1, 1}}), 2);
        EXPECT_EQ(expand_rational({numerator, denominator, Var::x}, 14), expand_rational(gf_total_area(p), 14))
            << "p=" << p;
    }
}

TEST(TotalGf, DerivativesOfDpSeries) {
    for (int p = 1; p <= 5; ++p) {
        const auto f = series_F_dp(p, 10);
        const auto g = series_G_dp(p, 10);
        EXPECT_EQ(derivative_at_one(f, Var::y), specialize_at_one(expand_rational(gf_total_area(p), 10)));
        EXPECT_EQ(derivative_at_one(f, Var::z), specialize_at_one(expand_rational(gf_total_sper(p), 10)));
        EXPECT_EQ(derivative_at_one(g, Var::q), specialize_at_one(expand_rational(gf_total_inner(p), 10)));
    }
}

TEST(TotalGf, PickInSeriesForm) {
    for (int p = 1; p <= 5; ++p) {
        const auto a = specialize_at_one(expand_rational(gf_total_area(p), 12));
        const auto s = specialize_at_one(expand_rational(gf_total_sper(p), 12));
        const auto i = specialize_at_one(expand_rational(gf_total_inner(p), 12));
        for (std::uint32_t n = 1; n <= 12; ++n) EXPECT_EQ(i[n] + s[n] - a[n], fibonacci_number(p, n + 1));
    }
}

TEST(PartsSet, Examples) {
    EXPECT_EQ(parts_set(2), (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(parts_set(3), (std::vector<std::int64_t>{3, 5, 6}));
    EXPECT_EQ(parts_set(1), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(parts_set(4), (std::vector<std::int64_t>{4, 7, 9, 10}));
}

TEST(AreaCounts, Examples) {
    EXPECT_EQ(area_counts(3, 9)[9], 3);
    EXPECT_EQ(area_counts(5, 5)[5], 1);
    EXPECT_EQ(area_counts(2, 9)[9], 5);
    EXPECT_EQ(oracle::brute_force_area_distribution(2, 9)[9], 5);
    EXPECT_EQ(specialize_at_one(expand_rational(gf_area_counts(2), 9))[9], 5);
}

TEST(AreaCounts, MarginalOfFSeries) {
    for (int p = 1; p <= 5; ++p) {
        // Every word of area <= 25 has at most 25 columns.
        const auto f = series_F_dp(p, 25);
        std::vector<Integer> by_area(26, Integer(0));
        for (const auto& [m, c] : f.poly.terms()) {
            if (m[Var::y] <= 25) by_area[m[Var::y]] += c;
        }
        EXPECT_EQ(by_area, area_counts(p, 25)) << "p=" << p;
        EXPECT_EQ(by_area, specialize_at_one(expand_rational(gf_area_counts(p), 25)));
    }
}

TEST(Serialization, CanonicalText) {
    EXPECT_EQ(to_text(expand_rational(closed_form_F(2), 3)),
              "1 + y^2*z^3*x + (y^3*z^4 + y^4*z^4)*x^2 + (y^5*z^5 + y^6*z^5 + y^5*z^6)*x^3");
    EXPECT_EQ(to_text(expand_rational(closed_form_G(2), 4)),
              "1 + x + (1 + q)*x^2 + (1 + q + q^2)*x^3 + (1 + 2*q + q^2 + q^3)*x^4");
    EXPECT_EQ(to_text(closed_form_F(2)),
              "(1 + (-y^2*z + y^2*z^3)*x + (-y^3*z^3 + y^3*z^4)*x^2)/(1 - y^2*z*x - y^3*z^3*x^2)");
    EXPECT_EQ(to_text(expand_rational(gf_area_counts(3), 6)), "1 + y^3 + y^5 + 2*y^6");
    EXPECT_EQ(to_text(Polynomial()), "0");
    EXPECT_EQ(to_text(term(-2, 3) + term(1, 0)), "1 - 2*x^3");
}

TEST(Serialization, Json) {
    EXPECT_EQ(to_json(series_F_dp(2, 1)),
              R"({"counting":"x","order":1,"terms":[{"exponents":{},"coefficient":1},)"
              R"({"exponents":{"x":1,"y":2,"z":3},"coefficient":1}]})");
}
