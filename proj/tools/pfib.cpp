// pfib: command-line front end for p-Fibonacci words and polyominoes.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure,
// 4 enumeration cap exceeded.

#include "pfib/bijections.hpp"
#include "pfib/geometry.hpp"
#include "pfib/series.hpp"
#include "pfib/tables.hpp"
#include "pfib/verify.hpp"
#include "pfib/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitResource = 4;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json json_integer(const pfib::Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return pfib::to_string(v);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
    int p = 0;
    long n = 0;
    int nmax = 10;
    int pmin = 2;
    int pmax = 5;
    std::uint32_t order = 0;
    std::string format;
    std::string word;
    std::string composition;
    std::string binary;
    std::string to;
    std::string kind;
    std::string which;
    std::optional<std::uint64_t> max_words;
};

pfib::Limits limits_for(const Options& o) {
    pfib::Limits limits = pfib::Limits::from_environment();
    if (o.max_words) limits.max_words = *o.max_words;
    return limits;
}

int run_count(const Options& o) {
    pfib::check_alphabet(o.p, limits_for(o));
    const pfib::Integer count = pfib::count_words(o.p, o.n);
    if (o.format == "json") {
        print_json({{"p", o.p}, {"n", o.n}, {"count", json_integer(count)}});
    } else {
        std::cout << count << '\n';
    }
    return 0;
}

int run_words(const Options& o) {
    if (o.n > std::numeric_limits<int>::max()) throw pfib::InvalidInput("word length too large");
    const auto words = pfib::enumerate_words(o.p, static_cast<int>(o.n), limits_for(o));
    if (o.format == "json") {
        json list = json::array();
        for (const auto& w : words) list.push_back(w.str());
        print_json({{"p", o.p}, {"n", o.n}, {"count", words.size()}, {"words", std::move(list)}});
    } else {
        for (const auto& w : words) std::cout << w.str() << '\n';
    }
    return 0;
}

int run_stats(const Options& o) {
    pfib::check_alphabet(o.p, limits_for(o));
    const auto w = pfib::FibWord::parse(o.p, o.word);
    const auto r = pfib::pick_report(w);
    print_json({{"p", o.p},
                {"word", w.str()},
                {"columns", w.size()},
                {"area", r.area},
                {"sper", r.sper},
                {"inn", r.inn},
                {"pick", r.pick_holds}});
    return 0;
}

pfib::TruncatedSeries series_of_kind(const std::string& kind, int p, std::uint32_t order) {
    if (kind == "F") return pfib::expand_rational(pfib::closed_form_F(p), order);
    if (kind == "G") return pfib::expand_rational(pfib::closed_form_G(p), order);
    if (kind == "A") return pfib::expand_rational(pfib::gf_total_area(p), order);
    if (kind == "S") return pfib::expand_rational(pfib::gf_total_sper(p), order);
    if (kind == "I") return pfib::expand_rational(pfib::gf_total_inner(p), order);
    if (kind == "D") return pfib::expand_rational(pfib::gf_area_counts(p), order);
    throw pfib::InvalidInput("unknown series kind '" + kind + "'");
}

int run_series(const Options& o) {
    pfib::check_alphabet(o.p, limits_for(o));
    const auto s = series_of_kind(o.kind, o.p, o.order);
    if (o.format == "json") {
        json j = json::parse(pfib::to_json(s));
        json out{{"p", o.p}, {"kind", o.kind}};
        for (auto& [key, value] : j.items()) out[key] = value;
        print_json(out);
    } else if (o.format == "coefficients") {
        const auto coeffs = pfib::specialize_at_one(s);
        for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? "," : "") << coeffs[i];
        std::cout << '\n';
    } else {
        std::cout << pfib::to_text(s) << '\n';
    }
    return 0;
}

void print_table_plain(const pfib::Table& t) {
    const std::string sym = pfib::table_symbol(t.kind);
    std::cout << "Sequence " << sym << "_p(n)\n";
    std::ostringstream head;
    head << std::setw(4) << "p\\n";
    for (int n = 1; n <= t.nmax; ++n) head << std::setw(8) << n;
    std::cout << head.str() << '\n';
    for (int p = t.pmin; p <= t.pmax; ++p) {
        std::cout << std::setw(4) << p;
        for (int n = 1; n <= t.nmax; ++n) {
            const auto& cell = t.at(p, n);
            std::string text = pfib::to_string(cell.value) + (cell.mismatch() ? "*" : "");
            std::cout << std::setw(8) << text;
        }
        std::cout << '\n';
    }
    for (const auto* cell : t.mismatches()) {
        std::cout << "* p=" << cell->p << ", n=" << cell->n << ": computed " << cell->value
                  << ", printed reference " << *cell->printed;
        if (cell->oracle) std::cout << ", brute-force count " << *cell->oracle;
        std::cout << '\n';
    }
}

int run_tables(const Options& o) {
    const auto kind = pfib::parse_table_kind(o.which);
    const auto t = pfib::compute_table(kind, o.pmin, o.pmax, o.nmax, limits_for(o));
    if (o.format == "csv") {
        std::cout << "p,n,value,printed,mismatch\n";
        for (const auto& c : t.cells) {
            std::cout << c.p << ',' << c.n << ',' << c.value << ','
                      << (c.printed ? std::to_string(*c.printed) : "") << ','
                      << (c.mismatch() ? 1 : 0) << '\n';
        }
    } else if (o.format == "json") {
        json rows = json::array();
        for (int p = t.pmin; p <= t.pmax; ++p) {
            json values = json::array();
            for (int n = 1; n <= t.nmax; ++n) values.push_back(json_integer(t.at(p, n).value));
            rows.push_back({{"p", p}, {"values", std::move(values)}});
        }
        json discrepancies = json::array();
        for (const auto* c : t.mismatches()) {
            json d{{"p", c->p}, {"n", c->n}, {"computed", json_integer(c->value)}, {"printed", *c->printed}};
            if (c->oracle) d["oracle"] = json_integer(*c->oracle);
            discrepancies.push_back(std::move(d));
        }
        print_json({{"table", static_cast<int>(kind)},
                    {"sequence", pfib::table_symbol(kind)},
                    {"pmin", t.pmin},
                    {"pmax", t.pmax},
                    {"nmax", t.nmax},
                    {"rows", std::move(rows)},
                    {"discrepancies", std::move(discrepancies)}});
    } else {
        print_table_plain(t);
    }
    return 0;
}

int run_biject(const Options& o) {
    pfib::check_alphabet(o.p, limits_for(o));
    const int given = !o.word.empty() + !o.composition.empty() + !o.binary.empty();
    if (given != 1) throw pfib::InvalidInput("give exactly one of --word, --composition, --binary");

    std::string from;
    std::optional<pfib::FibWord> word;
    if (!o.word.empty()) {
        from = "word";
        word = pfib::FibWord::parse(o.p, o.word);
    } else if (!o.composition.empty()) {
        from = "composition";
        word = pfib::composition_to_word(pfib::Composition::parse(o.p, o.composition));
    } else {
        from = "binary";
        word = pfib::binary_to_word(pfib::BinaryWord::parse(o.p, o.binary));
    }

    std::string result;
    if (o.to == "word") {
        result = word->str();
    } else if (o.to == "composition") {
        result = pfib::word_to_composition(*word).str();
    } else if (o.to == "binary") {
        result = pfib::word_to_binary(*word).str();
    } else {
        throw pfib::InvalidInput("--to must be word, composition or binary");
    }
    const std::string input = !o.word.empty() ? o.word : !o.composition.empty() ? o.composition : o.binary;

    if (o.format == "json") {
        print_json({{"p", o.p}, {"from", from}, {"to", o.to}, {"input", input}, {"output", result}});
    } else {
        std::cout << result << '\n';
    }
    return 0;
}

int run_verify(const Options& o) {
    const auto report = pfib::verify(o.p, o.nmax, limits_for(o));
    if (o.format == "json") {
        json checks = json::array();
        for (const auto& row : report.rows) {
            checks.push_back({{"name", row.name}, {"passed", row.passed}});
        }
        json identities = json::array();
        for (const auto& id : report.identities) {
            identities.push_back({{"n", id.n},
                                  {"count", json_integer(id.count)},
                                  {"inner", json_integer(id.inner)},
                                  {"sper", json_integer(id.sper)},
                                  {"area", json_integer(id.area)}});
        }
        print_json({{"p", report.p},
                    {"nmax", report.nmax},
                    {"passed", report.passed()},
                    {"checks", std::move(checks)},
                    {"identities", std::move(identities)}});
    } else {
        std::cout << "p=" << report.p << ", count = inner + sper - area:\n";
        for (const auto& id : report.identities) std::cout << "  " << id.str() << '\n';
        std::cout << '\n' << report.matrix() << '\n' << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? 0 : kExitVerifyFailed;
}

int run_render(const Options& o) {
    pfib::check_alphabet(o.p, limits_for(o));
    const auto w = pfib::FibWord::parse(o.p, o.word);
    if (o.format == "svg") {
        std::cout << pfib::render_svg(w);
    } else {
        std::cout << pfib::render_ascii(w);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-Fibonacci words and polyominoes: enumeration, statistics, generating functions"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add_p = [&](CLI::App* cmd) { cmd->add_option("--p", o.p, "alphabet bound p")->required(); };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--max-words", o.max_words,
                        "enumeration cap (default 10000000, or PFIB_MAX_WORDS)");
    };

    auto* count = app.add_subcommand("count", "print F_{p,n+1}, the number of words of length n");
    add_p(count);
    count->add_option("--n", o.n, "word length")->required();
    count->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    add_cap(count);
    count->callback([&] { handler = run_count; });

    auto* words = app.add_subcommand("words", "list all words of length n in lexicographic order");
    add_p(words);
    words->add_option("--n", o.n, "word length")->required();
    words->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    add_cap(words);
    words->callback([&] { handler = run_words; });

    auto* stats = app.add_subcommand("stats", "area, semi-perimeter and inner points of one polyomino");
    add_p(stats);
    stats->add_option("--word", o.word, "digits, e.g. 32321")->required();
    add_cap(stats);
    stats->callback([&] { handler = run_stats; });

    auto* series = app.add_subcommand("series", "expand a generating function");
    add_p(series);
    series->add_option("--kind", o.kind, "F, G, A, S, I or D")
        ->required()
        ->check(CLI::IsMember({"F", "G", "A", "S", "I", "D"}));
    series->add_option("--order", o.order, "truncation order")->required();
    series->add_option("--format", o.format, "plain, json or coefficients")
        ->check(CLI::IsMember({"plain", "json", "coefficients"}));
    add_cap(series);
    series->callback([&] { handler = run_series; });

    auto* tables = app.add_subcommand("tables", "recompute the reference tables");
    tables->add_option("--which", o.which, "1 (area), 2 (area counts), 3 (semi-perimeter), 4 (inner)")
        ->required();
    tables->add_option("--pmin", o.pmin, "first row")->capture_default_str();
    tables->add_option("--pmax", o.pmax, "last row")->capture_default_str();
    tables->add_option("--nmax", o.nmax, "last column")->capture_default_str();
    tables->add_option("--format", o.format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    add_cap(tables);
    tables->callback([&] { handler = run_tables; });

    auto* biject = app.add_subcommand("biject", "convert between words, compositions and binary words");
    add_p(biject);
    biject->add_option("--word", o.word, "p-Fibonacci word");
    biject->add_option("--composition", o.composition, "comma-separated parts");
    biject->add_option("--binary", o.binary, "0/1 string");
    biject->add_option("--to", o.to, "word, composition or binary")->required();
    biject->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    add_cap(biject);
    biject->callback([&] { handler = run_biject; });

    auto* verify = app.add_subcommand("verify", "cross-check every identity up to nmax columns");
    add_p(verify);
    verify->add_option("--nmax", o.nmax, "largest number of columns")->required();
    verify->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    add_cap(verify);
    verify->callback([&] { handler = run_verify; });

    auto* render = app.add_subcommand("render", "draw a polyomino");
    add_p(render);
    render->add_option("--word", o.word, "p-Fibonacci word")->required();
    render->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    add_cap(render);
    render->callback([&] { handler = run_render; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        return handler(o);
    } catch (const pfib::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const pfib::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    }
}
