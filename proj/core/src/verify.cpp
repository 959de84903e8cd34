#include "pfib/verify.hpp"

#include "pfib/bijections.hpp"
#include "pfib/geometry.hpp"
#include "pfib/oracle.hpp"
#include "pfib/series.hpp"
#include "pfib/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pfib {

std::string PickIdentity::str() const {
    return "n=" + std::to_string(n) + ": " + to_string(count) + " = " + to_string(inner) + " + " +
           to_string(sper) + " - " + to_string(area);
}

bool CheckRow::all_passed() const {
    return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

bool VerifyReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.all_passed(); });
}

std::string VerifyReport::matrix() const {
    std::size_t width = 5;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    std::ostringstream os;
    os << std::string(width, ' ');
    for (int n = 1; n <= nmax; ++n) {
        std::string head = "n=" + std::to_string(n);
        os << ' ' << std::string(head.size() < 5 ? 5 - head.size() : 0, ' ') << head;
    }
    os << '\n';
    for (const auto& row : rows) {
        os << row.name << std::string(width - row.name.size(), ' ');
        for (int n = 1; n <= nmax; ++n) {
            std::string head = "n=" + std::to_string(n);
            const std::size_t cell = std::max<std::size_t>(5, head.size());
            os << ' ' << std::string(cell - 4, ' ') << (row.passed[n - 1] ? "  ok" : "FAIL");
        }
        os << '\n';
    }
    return os.str();
}

VerifyReport verify(int p, int nmax, const Limits& limits) {
    check_alphabet(p, limits);
    if (nmax < 1) throw InvalidInput("nmax must be at least 1");
    const auto order = static_cast<std::uint32_t>(nmax);

    VerifyReport report;
    report.p = p;
    report.nmax = nmax;

    const TruncatedSeries f_dp = series_F_dp(p, order);
    const TruncatedSeries g_dp = series_G_dp(p, order);
    const TruncatedSeries f_closed = expand_rational(closed_form_F(p), order);
    const TruncatedSeries g_closed = expand_rational(closed_form_G(p), order);
    const auto f_counts = specialize_at_one(f_dp);
    const auto g_counts = specialize_at_one(g_dp);
    const auto a_gf = specialize_at_one(expand_rational(gf_total_area(p), order));
    const auto s_gf = specialize_at_one(expand_rational(gf_total_sper(p), order));
    const auto i_gf = specialize_at_one(expand_rational(gf_total_inner(p), order));
    const auto d_recurrence = area_counts(p, nmax);
    const auto d_gf = specialize_at_one(expand_rational(gf_area_counts(p), order));
    const auto d_oracle = oracle::brute_force_area_distribution(p, nmax, limits);
    const TruncatedSeries f_oracle =
        oracle::brute_force_generating_series(p, order, oracle::Statistic::area_and_sper, limits);
    const TruncatedSeries g_oracle =
        oracle::brute_force_generating_series(p, order, oracle::Statistic::inner, limits);

    auto every_word = [&](int n, const std::function<bool(const FibWord&)>& pred) {
        bool ok = true;
        for_each_word(
            p, n,
            [&](std::span<const Digit> d) {
                if (ok && !pred(FibWord(p, std::vector<Digit>(d.begin(), d.end())))) ok = false;
            },
            limits);
        return ok;
    };

    std::vector<CheckRow> rows{
        {"pick per word", {}},           {"pick aggregate", {}},
        {"lattice oracle", {}},          {"F dp = closed form", {}},
        {"G dp = closed form", {}},      {"F/G count = F_{p,n+1}", {}},
        {"totals = gf", {}},             {"series oracle", {}},
        {"composition roundtrip", {}},   {"binary roundtrip", {}},
        {"area counts", {}},
    };

    for (int n = 1; n <= nmax; ++n) {
        const auto un = static_cast<std::uint32_t>(n);
        const AggregateStats agg = aggregate_stats(p, n, limits);
        const Integer count = count_words(p, n);

        rows[0].passed.push_back(every_word(n, [](const FibWord& w) { return pick_report(w).pick_holds; }));
        rows[1].passed.push_back(agg.pick_holds() && agg.count == count);
        rows[2].passed.push_back(every_word(n, [](const FibWord& w) {
            return oracle::lattice_stats(w) == pick_report(w);
        }));
        rows[3].passed.push_back(f_dp.coefficient(un) == f_closed.coefficient(un));
        rows[4].passed.push_back(g_dp.coefficient(un) == g_closed.coefficient(un));
        rows[5].passed.push_back(f_counts[un] == count && g_counts[un] == count);
        rows[6].passed.push_back(a_gf[un] == agg.total_area && s_gf[un] == agg.total_sper &&
                                 i_gf[un] == agg.total_inner);
        rows[7].passed.push_back(f_oracle.coefficient(un) == f_dp.coefficient(un) &&
                                 g_oracle.coefficient(un) == g_dp.coefficient(un));
        rows[8].passed.push_back(every_word(n, [](const FibWord& w) {
            const Composition c = word_to_composition(w);
            return composition_to_word(c) == w && c.total() == area(w);
        }));
        rows[9].passed.push_back(every_word(n, [](const FibWord& w) {
            return binary_to_word(word_to_binary(w)) == w;
        }));
        rows[10].passed.push_back(d_recurrence[un] == d_gf[un] && d_recurrence[un] == d_oracle[un]);

        report.identities.push_back({n, count, agg.total_inner, agg.total_sper, agg.total_area});
    }
    report.rows = std::move(rows);
    return report;
}

}  // namespace pfib
