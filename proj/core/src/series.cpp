#include "pfib/series.hpp"

#include "pfib/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfib {

char var_name(Var v) {
    switch (v) {
        case Var::x: return 'x';
        case Var::y: return 'y';
        case Var::z: return 'z';
        case Var::q: return 'q';
    }
    return '?';
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Integer constant) { add_term(constant, Monomial{}); }

Polynomial::Polynomial(Integer coefficient, Monomial m) { add_term(coefficient, m); }

Integer Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

void Polynomial::add_term(const Integer& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    out *= -1;
    return out;
}

Polynomial Polynomial::shifted(const Monomial& m, const Integer& c) const {
    Polynomial out;
    if (c == 0) return out;
    // Multiplying by a monomial preserves the term order, so hint at the end.
    for (const auto& [mono, coeff] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), mono * m, coeff * c);
    }
    return out;
}

Polynomial Polynomial::slice(Var v, std::uint32_t e) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m[v] == e) out.terms_.emplace(m.without(v), c);
    }
    return out;
}

Polynomial Polynomial::truncated(Var v, std::uint32_t bound) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m[v] <= bound) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

Polynomial Polynomial::divided_exactly(const Integer& d) const {
    if (d == 0) throw std::logic_error("division of a polynomial by zero");
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (c % d != 0) throw std::logic_error("polynomial coefficient not divisible");
        out.terms_.emplace_hint(out.terms_.end(), m, c / d);
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
    }
    return out;
}

Polynomial pow(const Polynomial& base, unsigned e) {
    Polynomial result(1);
    for (unsigned i = 0; i < e; ++i) result = result * base;
    return result;
}

// ---------------------------------------------------------------------------
// Truncated series

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.counting != b.counting || a.bound != b.bound) {
        throw InvalidInput("series truncations differ");
    }
}

// s[k] = coefficient of counting^k, with the counting variable removed.
std::vector<Polynomial> slices(const Polynomial& p, Var v, std::uint32_t bound) {
    std::vector<Polynomial> out(bound + 1);
    for (const auto& [m, c] : p.terms()) {
        if (m[v] <= bound) out[m[v]].add_term(c, m.without(v));
    }
    return out;
}

Polynomial assemble(const std::vector<Polynomial>& parts, Var v) {
    Polynomial out;
    for (std::uint32_t k = 0; k < parts.size(); ++k) {
        out += parts[k].shifted(Monomial::power(v, k));
    }
    return out;
}

}  // namespace

TruncatedSeries truncate(const Polynomial& p, std::uint32_t bound, Var counting) {
    return TruncatedSeries(counting, bound, p);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    return TruncatedSeries(a.counting, a.bound, a.poly + b.poly);
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    const Var v = a.counting;
    auto sa = slices(a.poly, v, a.bound);
    auto sb = slices(b.poly, v, b.bound);
    std::vector<Polynomial> prod(a.bound + 1);
    for (std::uint32_t i = 0; i <= a.bound; ++i) {
        if (sa[i].is_zero()) continue;
        for (std::uint32_t j = 0; i + j <= a.bound; ++j) {
            if (!sb[j].is_zero()) prod[i + j] += sa[i] * sb[j];
        }
    }
    return TruncatedSeries(v, a.bound, assemble(prod, v));
}

std::vector<Integer> specialize_at_one(const TruncatedSeries& s) {
    std::vector<Integer> out(s.bound + 1, Integer(0));
    for (const auto& [m, c] : s.poly.terms()) out[m[s.counting]] += c;
    return out;
}

std::vector<Integer> derivative_at_one(const TruncatedSeries& s, Var v) {
    std::vector<Integer> out(s.bound + 1, Integer(0));
    for (const auto& [m, c] : s.poly.terms()) out[m[s.counting]] += c * m[v];
    return out;
}

TruncatedSeries expand_rational(const RationalGF& r, std::uint32_t bound) {
    const Var v = r.counting;
    const std::uint32_t den_degree = r.denominator.degree(v);
    auto den = slices(r.denominator, v, std::max(bound, den_degree));
    if (den[0].constant_term() != 1) {
        throw InvalidInput("denominator constant term must be 1, got " +
                           to_string(den[0].constant_term()));
    }
    if (den[0].size() != 1) {
        throw InvalidInput(std::string("denominator has terms free of ") + var_name(v) +
                           " besides the constant; the expansion would not terminate");
    }
    auto num = slices(r.numerator, v, bound);

    std::vector<Polynomial> s(bound + 1);
    for (std::uint32_t k = 0; k <= bound; ++k) {
        Polynomial acc = num[k];
        for (std::uint32_t j = 1; j <= std::min(k, den_degree); ++j) {
            if (!den[j].is_zero() && !s[k - j].is_zero()) acc -= den[j] * s[k - j];
        }
        s[k] = std::move(acc);
    }
    return TruncatedSeries(v, bound, assemble(s, v));
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

std::uint32_t exponent(long value) {
    if (value < 0) throw std::logic_error("negative exponent in closed form");
    return static_cast<std::uint32_t>(value);
}

// Area of a maximal block p, p-1, ..., i.
long block_area(long p, long i) { return (p + i) * (p - i + 1) / 2; }

}  // namespace

RationalGF closed_form_F(int p) {
    check_alphabet(p);
    const long P = p;
    Polynomial numerator_tail;
    for (long i = 1; i <= P; ++i) {
        numerator_tail.add_term(
            1, Monomial(exponent(P - i + 1), exponent(block_area(P, i)), exponent(2 * P - i + 1)));
    }
    Polynomial denominator(1);
    denominator.add_term(-1, Monomial(1, exponent(P), 1));
    for (long i = 1; i <= P - 1; ++i) {
        denominator.add_term(-1, Monomial(exponent(P - i + 1), exponent(block_area(P, i)),
                                          exponent(2 * P - 2 * i + 1)));
    }
    // 1 + tail / den == (den + tail) / den
    return {denominator + numerator_tail, denominator, Var::x};
}

RationalGF closed_form_G(int p) {
    check_alphabet(p);
    const long P = p;
    Polynomial numerator_tail;
    Polynomial denominator(1);
    for (long i = 1; i <= P; ++i) {
        const auto x_exp = exponent(P - i + 1);
        const long base = (P - i) * (P + i - 3);
        numerator_tail.add_term(1, Monomial(x_exp, 0, 0, exponent(base / 2)));
        denominator.add_term(-1, Monomial(x_exp, 0, 0, exponent((base + 2 * (i - 1)) / 2)));
    }
    return {denominator + numerator_tail, denominator, Var::x};
}

// ---------------------------------------------------------------------------
// Transfer DP

namespace {

// Runs the column transfer: ending[h] holds the weight polynomial of all
// words of the current length whose last column has height h. Appending
// height h-1 after h, or p after h, multiplies by the given weights.
template <typename Descent, typename Reset>
TruncatedSeries transfer(int p, std::uint32_t order, const Monomial& first_column,
                         Descent descent_weight, Reset reset_weight) {
    check_alphabet(p);
    Polynomial result(1);
    std::vector<Polynomial> ending(static_cast<std::size_t>(p) + 1);
    ending[p] = Polynomial(1, first_column);
    for (std::uint32_t n = 1; n <= order; ++n) {
        for (int h = 1; h <= p; ++h) {
            if (!ending[h].is_zero()) result += ending[h].shifted(Monomial::power(Var::x, n));
        }
        if (n == order) break;
        std::vector<Polynomial> next(ending.size());
        for (int h = 1; h <= p; ++h) {
            if (ending[h].is_zero()) continue;
            if (h >= 2) next[h - 1] += ending[h].shifted(descent_weight(h));
            next[p] += ending[h].shifted(reset_weight(h));
        }
        ending = std::move(next);
    }
    return TruncatedSeries(Var::x, order, std::move(result));
}

}  // namespace

TruncatedSeries series_F_dp(int p, std::uint32_t order) {
    const auto P = static_cast<std::uint32_t>(p);
    return transfer(
        p, order, Monomial(0, P, P + 1),
        // height h-1 after h: area h-1, one more horizontal unit, no ascent
        [](int h) { return Monomial(0, static_cast<std::uint32_t>(h - 1), 1); },
        // height p after h: area p, one horizontal unit plus the ascent p-h
        [P](int h) { return Monomial(0, P, 1 + P - static_cast<std::uint32_t>(h)); });
}

TruncatedSeries series_G_dp(int p, std::uint32_t order) {
    const auto P = static_cast<std::uint32_t>(p);
    // New inner points sit on the shared edge: min(previous, next) - 1 of them.
    return transfer(
        p, order, Monomial{},
        [](int h) { return Monomial(0, 0, 0, static_cast<std::uint32_t>(h - 2)); },
        [P](int h) { return Monomial(0, 0, 0, std::min<std::uint32_t>(P, h) - 1); });
}

// ---------------------------------------------------------------------------
// Total statistics

namespace {

Polynomial x_poly(std::initializer_list<std::pair<std::uint32_t, long>> terms) {
    Polynomial out;
    for (auto [e, c] : terms) out.add_term(c, Monomial(e));
    return out;
}

// 1 - 2x + x^(p+1)
Polynomial tail_free_factor(std::uint32_t p) { return x_poly({{0, 1}, {1, -2}, {p + 1, 1}}); }

}  // namespace

RationalGF gf_total_area(int p) {
    check_alphabet(p);
    const long P = p;
    Polynomial numerator;
    Polynomial fib_den(1);
    for (long i = 1; i <= P; ++i) {
        // i(2p - i + 1) is always even
        numerator.add_term(i * (2 * P - i + 1) / 2, Monomial(exponent(i)));
        fib_den.add_term(-1, Monomial(exponent(i)));
    }
    return {numerator, pow(fib_den, 2), Var::x};
}

RationalGF gf_total_sper(int p) {
    check_alphabet(p);
    const auto P = static_cast<std::uint32_t>(p);
    const Polynomial x = Polynomial::variable(Var::x);
    const Polynomial one_minus_x = x_poly({{0, 1}, {1, -1}});
    Polynomial first = one_minus_x * x * x_poly({{0, 1}, {1, -2}, {P, -2}, {P + 1, 3}});
    first *= Integer(p);
    Polynomial second =
        x * x_poly({{0, 1}, {P, -1}}) * x_poly({{0, -1}, {1, 1}, {2, -1}, {P + 2, 1}});
    return {first - second, one_minus_x * pow(tail_free_factor(P), 2), Var::x};
}

RationalGF gf_total_inner(int p) {
    check_alphabet(p);
    const auto P = static_cast<std::uint32_t>(p);
    const long L = p;
    Polynomial inner = x_poly({{1, 6 - 4 * L},
                               {2, -(2 - 4 * L)},
                               {P, -(3 - L) * L},
                               {P + 1, -2 * (2 - L) * (2 - L)},
                               {P + 2, 2 - 5 * L + L * L},
                               {2 * P + 1, 2}});
    Polynomial numerator = Polynomial::variable(Var::x) * inner;
    // The printed denominator is 2(x - 1)(1 - 2x + x^(p+1))^2; fold the
    // factor -2 into the numerator so the denominator starts with 1.
    Polynomial denominator = x_poly({{0, 1}, {1, -1}}) * pow(tail_free_factor(P), 2);
    return {numerator.divided_exactly(-2), denominator, Var::x};
}

std::vector<std::int64_t> parts_set(int p) {
    check_alphabet(p);
    std::vector<std::int64_t> parts;
    for (long i = 1; i <= p; ++i) parts.push_back(block_area(p, i));
    std::sort(parts.begin(), parts.end());
    return parts;
}

RationalGF gf_area_counts(int p) {
    Polynomial denominator(1);
    for (std::int64_t a : parts_set(p)) {
        denominator.add_term(-1, Monomial::power(Var::y, static_cast<std::uint32_t>(a)));
    }
    return {Polynomial(1), denominator, Var::y};
}

std::vector<Integer> area_counts(int p, std::int64_t max_area) {
    if (max_area < 0) throw InvalidInput("max_area must be non-negative");
    const auto parts = parts_set(p);
    std::vector<Integer> d(static_cast<std::size_t>(max_area) + 1, Integer(0));
    d[0] = 1;
    for (std::int64_t n = 1; n <= max_area; ++n) {
        for (std::int64_t a : parts) {
            if (a <= n) d[n] += d[n - a];
        }
    }
    return d;
}

}  // namespace pfib
