#pragma once

#include "pfib/error.hpp"
#include "pfib/integer.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pfib {

/// Variables of the generating functions: x marks columns, y area,
/// z semi-perimeter, q inner points.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, q = 3 };

inline constexpr std::size_t kVarCount = 4;

char var_name(Var v);

struct Monomial {
    std::array<std::uint32_t, kVarCount> exponents{};

    Monomial() = default;
    explicit Monomial(std::uint32_t x, std::uint32_t y = 0, std::uint32_t z = 0,
                      std::uint32_t q = 0)
        : exponents{x, y, z, q} {}

    static Monomial power(Var v, std::uint32_t e) {
        Monomial m;
        m[v] = e;
        return m;
    }

    std::uint32_t operator[](Var v) const { return exponents[static_cast<std::size_t>(v)]; }
    std::uint32_t& operator[](Var v) { return exponents[static_cast<std::size_t>(v)]; }

    bool is_one() const noexcept { return exponents == decltype(exponents){}; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (std::size_t i = 0; i < kVarCount; ++i) m.exponents[i] = exponents[i] + o.exponents[i];
        return m;
    }

    /// Copy with the exponent of v cleared.
    Monomial without(Var v) const {
        Monomial m = *this;
        m[v] = 0;
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term order for storage and printing: ascending x-degree, then ascending
/// q, z, y exponents. Within one x-degree this lists terms the way the
/// classical expansions are written, e.g. y^5*z^5 + y^6*z^5 + y^5*z^6.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        constexpr std::array<Var, kVarCount> keys{Var::x, Var::q, Var::z, Var::y};
        for (Var v : keys) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
        return false;
    }
};

/// Multivariate polynomial with exact integer coefficients. No stored
/// coefficient is zero.
class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, CanonicalOrder>;

    Polynomial() = default;
    Polynomial(Integer constant);  // NOLINT(google-explicit-constructor)
    Polynomial(Integer coefficient, Monomial m);

    static Polynomial variable(Var v, std::uint32_t e = 1) {
        return Polynomial(1, Monomial::power(v, e));
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const Monomial& m) const;
    Integer constant_term() const { return coefficient(Monomial{}); }
    std::uint32_t degree(Var v) const;

    void add_term(const Integer& c, const Monomial& m);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Integer& c);
    Polynomial operator-() const;

    /// Multiply by the single term c*m.
    Polynomial shifted(const Monomial& m, const Integer& c = 1) const;

    /// Terms whose v-degree is exactly e, with v removed.
    Polynomial slice(Var v, std::uint32_t e) const;

    /// Terms of v-degree at most bound.
    Polynomial truncated(Var v, std::uint32_t bound) const;

    /// Every coefficient divided by d; throws std::logic_error if inexact.
    Polynomial divided_exactly(const Integer& d) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned e);

/// Formal power series kept exactly up to `bound` in the counting variable.
struct TruncatedSeries {
    Var counting = Var::x;
    std::uint32_t bound = 0;
    Polynomial poly;

    TruncatedSeries() = default;
    TruncatedSeries(Var counting_var, std::uint32_t order, Polynomial p)
        : counting(counting_var), bound(order), poly(std::move(p).truncated(counting_var, order)) {}

    /// Coefficient of counting^n as a polynomial in the remaining variables.
    Polynomial coefficient(std::uint32_t n) const { return poly.slice(counting, n); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries truncate(const Polynomial& p, std::uint32_t bound, Var counting = Var::x);

/// Both operands must share the counting variable and bound.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients of counting^0..bound after setting every other variable to 1.
std::vector<Integer> specialize_at_one(const TruncatedSeries& s);

/// Derivative in v at all-ones, per counting degree: sum of coeff * deg_v.
std::vector<Integer> derivative_at_one(const TruncatedSeries& s, Var v);

/// numerator / denominator, expanded in powers of `counting`.
struct RationalGF {
    Polynomial numerator;
    Polynomial denominator;
    Var counting = Var::x;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Unique s with s * denominator == numerator modulo counting^(bound+1).
/// Throws InvalidInput unless the denominator's part free of the counting
/// variable is exactly 1.
TruncatedSeries expand_rational(const RationalGF& r, std::uint32_t bound);

/// Generating function in x (columns), y (area), z (semi-perimeter).
RationalGF closed_form_F(int p);

/// Generating function in x (columns), q (inner points).
RationalGF closed_form_G(int p);

/// Column-by-column transfer over the height of the last column.
TruncatedSeries series_F_dp(int p, std::uint32_t order);
TruncatedSeries series_G_dp(int p, std::uint32_t order);

/// Total area, semi-perimeter and inner points over words of length n.
RationalGF gf_total_area(int p);
RationalGF gf_total_sper(int p);
RationalGF gf_total_inner(int p);

/// {(p+i)(p-i+1)/2 : 1 <= i <= p}, ascending.
std::vector<std::int64_t> parts_set(int p);

/// 1 / (1 - sum of y^a over the parts set), counted in y (area).
RationalGF gf_area_counts(int p);

/// d_p(0..max_area) by d(n) = sum over parts a of d(n - a), d(0) = 1.
std::vector<Integer> area_counts(int p, std::int64_t max_area);

/// `1 + y^2*z^3*x + (y^3*z^4 + y^4*z^4)*x^2`: grouped by the counting variable.
std::string to_text(const TruncatedSeries& s);
std::string to_text(const Polynomial& p, Var counting = Var::x);
std::string to_text(const RationalGF& r);

/// {"counting":"x","order":N,"terms":[{"exponents":{"y":2},"coefficient":1},...]}
std::string to_json(const TruncatedSeries& s);

}  // namespace pfib
