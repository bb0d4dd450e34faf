#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "boxcalc/closed_form.hpp"
#include "boxcalc/errors.hpp"
#include "boxcalc/json_io.hpp"
#include "boxcalc/sequences.hpp"
#include "boxcalc/verify.hpp"

namespace boxcalc::cli {

namespace {

std::pair<Rational, Rational> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos)
        throw ParseError("--range expects <rational>:<rational>, got \"" + text + "\"");
    return {Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))};
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

// Shared by eval and population: one-sided evaluation on request, interior
// otherwise; at a knot the interior attempt may be ambiguous, which from
// the command line is a usage error asking for an explicit --side.
int print_value(const PiecewisePoly& fn, const Rational& x, const std::string& side) {
    Rational value;
    if (side == "left") {
        value = fn.eval(x, Side::left);
    } else if (side == "right") {
        value = fn.eval(x, Side::right);
    } else {
        try {
            value = fn.eval(x, Side::interior);
        } catch (const KnotAmbiguousError& e) {
            std::cerr << e.what() << "\n"
                      << "pass --side left or --side right to pick a one-sided value\n";
            return 2;
        }
    }
    std::cout << value.to_string() << "\n";
    return 0;
}

std::string piecewise_payload(const PiecewisePoly& fn) {
    return piecewise_to_json(fn).dump(2) + "\n";
}

const char* kind_name(ExportKind kind) {
    switch (kind) {
        case ExportKind::f: return "f";
        case ExportKind::g: return "g";
        case ExportKind::population: return "population";
    }
    return "";
}

}  // namespace

ExportTable export_samples(ExportKind kind, int n_or_t, int count, const Rational& lo,
                           const Rational& hi, const std::optional<Rational>& R,
                           std::optional<int> decimal_digits) {
    if (!(lo < hi))
        throw EmptyRangeError("need lo < hi, got " + lo.to_string() + ":" + hi.to_string());
    if (count < 1) throw std::invalid_argument("export needs a positive sample count");
    if (kind == ExportKind::population && !R)
        throw std::invalid_argument("population export needs --R");

    const PiecewisePoly fn = kind == ExportKind::f   ? build_f(n_or_t)
                             : kind == ExportKind::g ? build_g(n_or_t)
                                                     : population_profile(n_or_t, *R);

    ExportTable table;
    table.decimal_digits = decimal_digits;
    table.rows.reserve(static_cast<std::size_t>(count));
    const Rational step = count > 1 ? (hi - lo) / (count - 1) : hi - lo;
    for (int i = 0; i < count; ++i) {
        Rational x = count > 1 ? lo + step * i : (lo + hi) / 2;
        Rational nudge = step / 2;
        while (fn.is_knot(x)) {  // finitely many knots, nudges sum below one step
            x += nudge;
            nudge /= 2;
        }
        table.rows.push_back({x, fn.eval(x, Side::interior)});
    }
    return table;
}

std::string format_decimal(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal digits must be >= 0");
    Rational scaled = value;
    for (int i = 0; i < digits; ++i) scaled *= 10;

    Integer q = floor(scaled);
    const Rational frac = scaled - Rational(q);
    const Rational half(1, 2);
    if (frac > half) {
        ++q;
    } else if (frac == half) {
        const Integer rem = q % 2;
        if (!rem.is_zero()) ++q;  // ties go to the even neighbour
    }

    const bool negative = q < 0;
    Integer a = q;
    if (negative) a = -a;
    std::string body = a.str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');

    std::string result;
    if (negative && !a.is_zero()) result += '-';
    if (digits == 0) {
        result += body;
    } else {
        result.append(body, 0, body.size() - static_cast<std::size_t>(digits));
        result += '.';
        result.append(body, body.size() - static_cast<std::size_t>(digits), std::string::npos);
    }
    return result;
}

namespace {

std::string cell(const Rational& v, const std::optional<int>& digits) {
    return digits ? format_decimal(v, *digits) : v.to_string();
}

}  // namespace

std::string render_csv(const ExportTable& table) {
    std::string out = "x,value\n";
    for (const ExportRow& row : table.rows)
        out += cell(row.x, table.decimal_digits) + "," + cell(row.value, table.decimal_digits) +
               "\n";
    return out;
}

std::string render_json(const ExportTable& table, ExportKind kind, int n_or_t,
                        const std::optional<Rational>& R) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(kind);
    if (kind == ExportKind::population) {
        j["t"] = n_or_t;
        j["R"] = R ? R->to_string() : "";
    } else {
        j["n"] = n_or_t;
    }
    j["rows"] = nlohmann::ordered_json::array();
    for (const ExportRow& row : table.rows) {
        nlohmann::ordered_json entry;
        entry["x"] = cell(row.x, table.decimal_digits);
        entry["value"] = cell(row.value, table.decimal_digits);
        j["rows"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact calculus for the box-kernel sequences f_n and g_n"};
    app.name("boxcalc");
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Construct a sequence element, emit it as JSON");
    std::string build_kind;
    int build_n = 0;
    std::string build_out;
    build->add_option("--kind", build_kind, "Sequence kind")
        ->required()
        ->check(CLI::IsMember({"f", "g"}));
    build->add_option("--n", build_n, "Sequence index, 1-based")
        ->required()
        ->check(CLI::PositiveNumber);
    build->add_option("--out", build_out, "Output path (stdout when omitted)");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a sequence element at a point");
    std::string eval_kind;
    int eval_n = 0;
    std::string eval_x;
    std::string eval_method = "recursion";
    std::string eval_side;
    eval_cmd->add_option("--kind", eval_kind, "Sequence kind")
        ->required()
        ->check(CLI::IsMember({"f", "g"}));
    eval_cmd->add_option("--n", eval_n, "Sequence index, 1-based")
        ->required()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--x", eval_x, "Evaluation point, e.g. -3/2")->required();
    eval_cmd->add_option("--method", eval_method, "recursion (default), closed-form, combination")
        ->check(CLI::IsMember({"recursion", "closed-form", "combination"}));
    eval_cmd->add_option("--side", eval_side, "One-sided value at a knot")
        ->check(CLI::IsMember({"left", "right"}));

    auto* export_cmd = app.add_subcommand("export", "Sample a function into a CSV/JSON table");
    std::string ex_kind;
    int ex_n = 0;
    int ex_t = 0;
    std::string ex_R;
    int ex_count = 0;
    std::string ex_range;
    std::string ex_format = "csv";
    int ex_digits = 0;
    std::string ex_out;
    export_cmd->add_option("--kind", ex_kind, "f, g, or population")
        ->required()
        ->check(CLI::IsMember({"f", "g", "population"}));
    auto* ex_n_opt =
        export_cmd->add_option("--n", ex_n, "Sequence index (kinds f and g)")
            ->check(CLI::PositiveNumber);
    auto* ex_t_opt =
        export_cmd->add_option("--t", ex_t, "Generation count (kind population)")
            ->check(CLI::PositiveNumber);
    auto* ex_R_opt =
        export_cmd->add_option("--R", ex_R, "Growth factor (kind population), e.g. 3/2");
    export_cmd->add_option("--count", ex_count, "Number of sample points")
        ->required()
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--range", ex_range, "Sampling range as <rational>:<rational>")
        ->required();
    export_cmd->add_option("--format", ex_format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* ex_digits_opt =
        export_cmd->add_option("--decimal-digits", ex_digits, "Fixed-point rendering, half-even")
            ->check(CLI::NonNegativeNumber);
    export_cmd->add_option("--out", ex_out, "Output path (stdout when omitted)");

    auto* verify_cmd =
        app.add_subcommand("verify", "Run the verification battery, print the JSON report");
    int v_n_max = 12;
    int v_samples = 100;
    long long v_seed = 42;
    verify_cmd->add_option("--n-max", v_n_max, "Largest sequence index exercised (>= 2)");
    verify_cmd->add_option("--samples", v_samples, "Sample points / test functions per check")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", v_seed, "Deterministic sampling seed");

    auto* pop_cmd = app.add_subcommand(
        "population", "Population profile after t generations with growth factor R");
    int pop_t = 0;
    std::string pop_R;
    std::string pop_x;
    std::string pop_side;
    std::string pop_out;
    pop_cmd->add_option("--t", pop_t, "Generation count, 1-based")
        ->required()
        ->check(CLI::PositiveNumber);
    pop_cmd->add_option("--R", pop_R, "Growth factor, e.g. 2 or 3/2")->required();
    pop_cmd->add_option("--x", pop_x, "Evaluate at this point instead of emitting JSON");
    pop_cmd->add_option("--side", pop_side, "One-sided value at a knot")
        ->check(CLI::IsMember({"left", "right"}));
    pop_cmd->add_option("--out", pop_out, "Output path (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the diagnostic
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build)) {
            const PiecewisePoly fn = build_kind == "f" ? build_f(build_n) : build_g(build_n);
            write_output(piecewise_payload(fn), build_out);
            return 0;
        }

        if (app.got_subcommand(eval_cmd)) {
            const Rational x = Rational::parse(eval_x);
            if (eval_method == "recursion") {
                const PiecewisePoly fn = eval_kind == "f" ? build_f(eval_n) : build_g(eval_n);
                return print_value(fn, x, eval_side);
            }
            Rational value;
            if (eval_method == "closed-form") {
                value = eval_kind == "f" ? eval_f_closed(eval_n, x) : eval_g_closed(eval_n, x);
            } else {
                if (eval_kind == "f") {
                    std::cerr << "--method combination applies to --kind g only\n";
                    return 2;
                }
                value = eval_g_combination(eval_n, x);
            }
            std::cout << value.to_string() << "\n";
            return 0;
        }

        if (app.got_subcommand(export_cmd)) {
            const bool population = ex_kind == "population";
            if (population && (!*ex_t_opt || !*ex_R_opt || !!*ex_n_opt)) {
                std::cerr << "export --kind population takes --t and --R (not --n)\n";
                return 2;
            }
            if (!population && (!*ex_n_opt || !!*ex_t_opt || !!*ex_R_opt)) {
                std::cerr << "export --kind " << ex_kind << " takes --n (not --t or --R)\n";
                return 2;
            }
            const auto [lo, hi] = parse_range(ex_range);
            const std::optional<Rational> R =
                population ? std::optional<Rational>(Rational::parse(ex_R)) : std::nullopt;
            const std::optional<int> digits =
                *ex_digits_opt ? std::optional<int>(ex_digits) : std::nullopt;
            const ExportKind kind = population   ? ExportKind::population
                                    : ex_kind == "f" ? ExportKind::f
                                                     : ExportKind::g;
            const int n_or_t = population ? ex_t : ex_n;
            const ExportTable table = export_samples(kind, n_or_t, ex_count, lo, hi, R, digits);
            const std::string payload =
                ex_format == "csv" ? render_csv(table) : render_json(table, kind, n_or_t, R);
            write_output(payload, ex_out);
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const VerificationReport report =
                run_all(v_n_max, v_samples, static_cast<std::uint64_t>(v_seed));
            std::cout << report_to_json(report).dump(2) << "\n";
            return report.all_passed() ? 0 : 1;
        }

        if (app.got_subcommand(pop_cmd)) {
            const PiecewisePoly profile = population_profile(pop_t, Rational::parse(pop_R));
            if (!pop_x.empty()) return print_value(profile, Rational::parse(pop_x), pop_side);
            write_output(piecewise_payload(profile), pop_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace boxcalc::cli
