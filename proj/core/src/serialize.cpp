#include "pfib/series.hpp"

#include <json.hpp>

#include <limits>

namespace pfib {

namespace {

std::string power_text(Var v, std::uint32_t e) {
    std::string out(1, var_name(v));
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

// "y^2*z^3", or "" for the unit monomial; `skip` is left out.
std::string monomial_text(const Monomial& m, Var skip) {
    std::string out;
    for (Var v : {Var::x, Var::y, Var::z, Var::q}) {
        if (v == skip || m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += power_text(v, m[v]);
    }
    return out;
}

// Signed term text such as "-2*q^3" or "y^2*z^3"
std::string term_text(const Integer& c, const std::string& mono) {
    if (mono.empty()) return to_string(c);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return to_string(c) + "*" + mono;
}

// Joins signed pieces with " + " / " - ".
std::string join_signed(const std::vector<std::string>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        const bool negative = !piece.empty() && piece.front() == '-';
        if (out.empty()) {
            out = piece;
        } else {
            out += negative ? " - " : " + ";
            out += negative ? piece.substr(1) : piece;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string to_text(const Polynomial& p, Var counting) {
    std::map<std::uint32_t, std::vector<std::pair<Integer, Monomial>>> groups;
    for (const auto& [m, c] : p.terms()) groups[m[counting]].emplace_back(c, m.without(counting));

    std::vector<std::string> pieces;
    for (const auto& [degree, terms] : groups) {
        const std::string power = degree == 0 ? "" : power_text(counting, degree);
        if (degree == 0) {
            for (const auto& [c, m] : terms) pieces.push_back(term_text(c, monomial_text(m, counting)));
            continue;
        }
        if (terms.size() == 1) {
            const auto& [c, m] = terms.front();
            std::string mono = monomial_text(m, counting);
            pieces.push_back(term_text(c, mono.empty() ? power : mono + "*" + power));
            continue;
        }
        std::vector<std::string> inner;
        for (const auto& [c, m] : terms) inner.push_back(term_text(c, monomial_text(m, counting)));
        pieces.push_back("(" + join_signed(inner) + ")*" + power);
    }
    return join_signed(pieces);
}

std::string to_text(const TruncatedSeries& s) { return to_text(s.poly, s.counting); }

std::string to_text(const RationalGF& r) {
    return "(" + to_text(r.numerator, r.counting) + ")/(" + to_text(r.denominator, r.counting) + ")";
}

std::string to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : s.poly.terms()) {
        nlohmann::ordered_json exponents = nlohmann::ordered_json::object();
        for (Var v : {Var::x, Var::y, Var::z, Var::q}) {
            if (m[v] != 0) exponents[std::string(1, var_name(v))] = m[v];
        }
        nlohmann::ordered_json term;
        term["exponents"] = std::move(exponents);
        // Coefficients beyond 64 bits are written as decimal strings.
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            term["coefficient"] = static_cast<std::int64_t>(c);
        } else {
            term["coefficient"] = to_string(c);
        }
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json out;
    out["counting"] = std::string(1, var_name(s.counting));
    out["order"] = s.bound;
    out["terms"] = std::move(terms);
    return out.dump();
}

}  // namespace pfib
