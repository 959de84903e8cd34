#include "pfib/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace pfib {

namespace {

std::int64_t digit_sum(std::span<const Digit> d) {
    std::int64_t total = 0;
    for (Digit h : d) total += h;
    return total;
}

// Horizontal edges contribute n; vertical edges contribute the first
// column plus every ascent.
std::int64_t half_perimeter(std::span<const Digit> d) {
    if (d.empty()) return 0;
    std::int64_t total = static_cast<std::int64_t>(d.size()) + d.front();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i + 1] > d[i]) total += d[i + 1] - d[i];
    }
    return total;
}

std::int64_t shared_interior(std::span<const Digit> d) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        total += std::min(d[i], d[i + 1]) - 1;
    }
    return total;
}

}  // namespace

std::int64_t area(const FibWord& w) { return digit_sum(w.digits()); }

std::int64_t semiperimeter(const FibWord& w) { return half_perimeter(w.digits()); }

std::int64_t inner_points(const FibWord& w) { return shared_interior(w.digits()); }

PickReport pick_report(const FibWord& w) {
    if (w.empty()) throw InvalidInput("the empty polyomino has no boundary polygon");
    PickReport r;
    r.area = area(w);
    r.sper = semiperimeter(w);
    r.inn = inner_points(w);
    r.pick_holds = r.area == r.inn + r.sper - 1;
    return r;
}

AggregateStats aggregate_stats(int p, int n, const Limits& limits) {
    if (n < 1) throw InvalidInput("aggregate statistics need at least one column");
    AggregateStats s;
    s.p = p;
    s.n = n;
    // Per-word values stay small; accumulate in 64 bits and promote once.
    std::int64_t count = 0, total_area = 0, total_sper = 0, total_inner = 0;
    for_each_word(
        p, n,
        [&](std::span<const Digit> d) {
            ++count;
            total_area += digit_sum(d);
            total_sper += half_perimeter(d);
            total_inner += shared_interior(d);
        },
        limits);
    s.count = count;
    s.total_area = total_area;
    s.total_sper = total_sper;
    s.total_inner = total_inner;
    return s;
}

std::string render_ascii(const FibWord& w, const AsciiStyle& style) {
    auto d = w.digits();
    if (d.empty()) return {};
    const int height = *std::max_element(d.begin(), d.end());
    std::string out;
    for (int row = height; row >= 1; --row) {
        std::string line;
        for (Digit h : d) line += h >= row ? style.filled : style.blank;
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_svg(const FibWord& w, int cell_size) {
    auto d = w.digits();
    const int height = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    const int width = static_cast<int>(d.size());
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * cell_size
       << "\" height=\"" << height * cell_size << "\" viewBox=\"0 0 " << width * cell_size << ' '
       << height * cell_size << "\">\n";
    for (int col = 0; col < width; ++col) {
        for (int row = 0; row < d[col]; ++row) {
            os << "  <rect x=\"" << col * cell_size << "\" y=\"" << (height - row - 1) * cell_size
               << "\" width=\"" << cell_size << "\" height=\"" << cell_size
               << "\" fill=\"#7fc97f\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pfib
