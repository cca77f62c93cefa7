#include "patience/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "patience/enumeration.hpp"
#include "patience/errors.hpp"
#include "patience/geometry.hpp"
#include "patience/io.hpp"
#include "patience/patience.hpp"
#include "patience/patterns.hpp"
#include "patience/verify.hpp"

namespace patience::cli {

namespace {

// Digit word for n <= 9 unless the caller asked for commas.
std::string show(const Permutation& p, bool commas) { return p.to_string(!commas && p.size() <= 9); }

bool has_comma(const std::string& text) { return text.find(',') != std::string::npos; }

std::string read_payload(const std::string& value) {
    const auto first = value.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && value[first] == '{') return value;
    std::ifstream in(value);
    if (!in) throw ParseError("cannot read pair file '" + value + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_sequence(std::ostream& out, const std::string& key, const std::vector<BigNat>& values, bool json) {
    if (json) {
        Json arr = Json::array();
        for (const BigNat& v : values) arr.push_back(v.str());
        Json j;
        j[key] = std::move(arr);
        out << to_json_text(j) << '\n';
        return;
    }
    std::size_t width = 1;
    for (const BigNat& v : values) width = std::max(width, v.str().size());
    const std::size_t index_width = std::to_string(values.empty() ? 0 : values.size() - 1).size();
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << std::setw(static_cast<int>(index_width)) << i << "  " << std::setw(static_cast<int>(width))
            << values[i].str() << '\n';
    }
}

void write_matrix(std::ostream& out, const std::string& key, const LowerTriMatrix& m, bool json) {
    if (json) {
        Json rows = Json::array();
        for (const auto& row : m.rows) {
            Json r = Json::array();
            for (const BigNat& v : row) r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        Json j;
        j[key] = std::move(rows);
        out << to_json_text(j) << '\n';
        return;
    }
    std::size_t width = 1;
    for (const auto& row : m.rows) {
        for (const BigNat& v : row) width = std::max(width, v.str().size());
    }
    for (const auto& row : m.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? " " : "") << std::setw(static_cast<int>(width)) << row[c].str();
        }
        out << '\n';
    }
}

struct Options {
    std::string perm;
    bool json = false;
    std::string pair;
    std::vector<std::string> patterns;
    int n = -1;
    bool count = false;
    bool list = false;
    int iterate = 0;
    bool all = false;
    std::string format;
    std::string out_path;
    int f = -1;
    int bell = -1;
    int fib = -1;
    int matrix = -1;
    int inverse = -1;
    std::string suite;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Patience sorting, barred pattern avoidance, shadow diagrams and their enumeration", "patience"};
    app.require_subcommand(1);
    Options o;

    auto* sort = app.add_subcommand("sort", "pile configuration R(p)");
    sort->add_option("perm", o.perm, "permutation, digit word or comma list")->required();
    sort->add_flag("--json", o.json, "emit JSON");

    auto* extended = app.add_subcommand("extended", "stable pair (R(p), S(p)) as JSON");
    extended->add_option("perm", o.perm, "permutation")->required();

    auto* rpw = app.add_subcommand("rpw", "reverse patience word of R(p)");
    rpw->add_option("perm", o.perm, "permutation")->required();

    auto* invert = app.add_subcommand("invert", "permutation with the given stable pair");
    invert->add_option("--pair", o.pair, "JSON file or inline JSON")->required();

    auto* avoid = app.add_subcommand("avoid", "permutations of size n avoiding every pattern");
    avoid->add_option("--pattern", o.patterns, "pattern such as 3-!1-42")->required();
    avoid->add_option("--n", o.n, "size")->required()->check(CLI::NonNegativeNumber);
    auto* avoid_count = avoid->add_flag("--count", o.count, "print the cardinality");
    auto* avoid_list = avoid->add_flag("--list", o.list, "list the permutations");
    avoid_count->excludes(avoid_list);

    auto* shadow = app.add_subcommand("shadow", "shadow diagram D(k) of p");
    shadow->add_option("perm", o.perm, "permutation")->required();
    auto* shadow_iter = shadow->add_option("--iterate", o.iterate, "iterate index")->check(CLI::NonNegativeNumber);
    auto* shadow_all = shadow->add_flag("--all", o.all, "every nonempty iterate");
    shadow_iter->excludes(shadow_all);
    shadow->add_option("--format", o.format, "svg or json")->required();
    shadow->add_option("--out", o.out_path, "output file");

    auto* enumerate = app.add_subcommand("enumerate", "counting tables");
    auto* tables = enumerate->add_option_group("table");
    tables->add_option("--f", o.f, "f(0..N)")->check(CLI::NonNegativeNumber);
    tables->add_option("--bell", o.bell, "B(0..N)")->check(CLI::NonNegativeNumber);
    tables->add_option("--fib", o.fib, "F(0..N)")->check(CLI::NonNegativeNumber);
    tables->add_option("--matrix", o.matrix, "N x N convolved Fibonacci matrix A")->check(CLI::PositiveNumber);
    tables->add_option("--inverse", o.inverse, "N x N matrix (I - A)^-1")->check(CLI::PositiveNumber);
    tables->require_option(1);
    enumerate->add_flag("--json", o.json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify->add_option("--suite", o.suite, "suite id")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", o.n, "size bound")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sort->parsed()) {
            const PileConfig r = patience_sort(Permutation::parse(o.perm));
            out << (o.json ? pile_config_to_json(r) : r.to_string()) << '\n';
        } else if (extended->parsed()) {
            out << stable_pair_to_json(extended_patience_sort(Permutation::parse(o.perm))) << '\n';
        } else if (rpw->parsed()) {
            const Permutation p = Permutation::parse(o.perm);
            out << show(reverse_patience_word(patience_sort(p)), has_comma(o.perm)) << '\n';
        } else if (invert->parsed()) {
            out << show(invert_extended(stable_pair_from_json(read_payload(o.pair))), false) << '\n';
        } else if (avoid->parsed()) {
            if (!o.count && !o.list) throw ParseError("avoid needs --count or --list");
            std::vector<GenPattern> pats;
            for (const std::string& t : o.patterns) pats.push_back(parse_pattern(t));
            if (o.count) {
                out << avoidance_count(o.n, pats) << '\n';
            } else {
                for (const Permutation& p : avoidance_set(o.n, pats)) out << show(p, false) << '\n';
            }
        } else if (shadow->parsed()) {
            const RenderFormat fmt = parse_render_format(o.format);
            const Permutation p = Permutation::parse(o.perm);
            std::string text;
            if (o.all) {
                text = render(exhaustive_iterates(p), fmt);
            } else {
                ShadowDiagram d = shadow_diagram(p);
                for (int k = 0; k < o.iterate; ++k) d = iterate(d);
                text = render(d, fmt);
            }
            if (text.empty() || text.back() != '\n') text += '\n';
            if (o.out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(o.out_path, std::ios::binary);
                if (!file) throw ParseError("cannot write '" + o.out_path + "'");
                file << text;
            }
        } else if (enumerate->parsed()) {
            if (o.f >= 0) {
                write_sequence(out, "f", f_table(o.f).f_n, o.json);
            } else if (o.bell >= 0) {
                std::vector<BigNat> v;
                for (int i = 0; i <= o.bell; ++i) v.push_back(bell(i));
                write_sequence(out, "bell", v, o.json);
            } else if (o.fib >= 0) {
                std::vector<BigNat> v;
                for (int i = 0; i <= o.fib; ++i) v.push_back(fib(i));
                write_sequence(out, "fib", v, o.json);
            } else if (o.matrix > 0) {
                write_matrix(out, "A", matrix_A(o.matrix), o.json);
            } else {
                write_matrix(out, "inverse", matrix_inverse(o.inverse), o.json);
            }
        } else if (verify->parsed()) {
            const SuiteReport report = run_suite(o.suite, o.n);
            out << format_report(report);
            return report.passed() ? kExitOk : kExitFail;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace patience::cli
