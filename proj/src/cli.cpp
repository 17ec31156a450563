#include "colorbound/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>

#include "colorbound/bounds.hpp"
#include "colorbound/edge_list.hpp"
#include "colorbound/injection.hpp"

namespace colorbound::cli {

namespace {

template <typename T>
T parse_number(std::string_view text, const char *what)
{
    T value{};
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw std::invalid_argument(std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

std::pair<int, int> parse_int_range(std::string_view text, const char *what)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        int n = parse_number<int>(text, what);
        return {n, n};
    }
    int lo = parse_number<int>(text.substr(0, dots), what);
    int hi = parse_number<int>(text.substr(dots + 2), what);
    if (lo > hi)
        throw std::invalid_argument(std::string("empty ") + what + " range '" + std::string(text) + "'");
    return {lo, hi};
}

struct CountResult {
    BigInt value;
    std::string method;
};

// Brute force within the enumeration budget, otherwise the chromatic polynomial.
std::optional<CountResult> auto_count(const Graph &graph, int lambda, std::uint64_t budget)
{
    if (coloring_count(graph.vertex_count(), lambda) <= budget)
        return CountResult{count_proper_brute(graph, lambda, budget), "brute"};
    try {
        return CountResult{evaluate_polynomial(chromatic_polynomial(graph), lambda), "poly"};
    } catch (const BudgetExceeded &) {
        return std::nullopt;
    }
}

Cell optional_cell(const std::optional<Rational> &r)
{
    return r ? Cell(*r) : Cell();
}

Cell optional_decimal(const std::optional<Rational> &r)
{
    return r ? decimal_cell(*r) : Cell();
}

Cell ratio_cell(const std::optional<CountResult> &count, const std::optional<Rational> &bound)
{
    if (!count || !bound || *bound == 0)
        return {};
    return Rational(count->value) / *bound;
}

std::string verify_note(const VerificationReport &r)
{
    std::string note = r.injective ? "injective" : "not injective";
    note += ", multiplicity <= " + std::to_string(r.max_image_multiplicity);
    note += ", " + r.inequality_lhs.str() + (r.bound_holds ? " <= " : " > ") + r.inequality_rhs.str();
    if (r.tight())
        note += " (tight)";
    return note;
}

std::string degenerate_note(const Graph &graph, int lambda)
{
    if (graph.edge_count() == 0)
        return "e=0: every coloring is proper and the bound equals lambda^v";
    if (lambda == 1)
        return "lambda=1: no proper colorings; the bound is 0";
    return "";
}

void report_counterexamples(std::ostream &err, const Graph &graph, const VerificationReport &r)
{
    for (const auto &cx : r.counterexamples) {
        err << "counterexample [" << cx.property << "] v=" << graph.vertex_count() << " edges=";
        for (const Edge &e : graph.edges())
            err << "{" << e.u << "," << e.w << "}";
        err << " lambda=" << r.lambda << ": " << cx.witness << '\n';
    }
}

Graph load_graph(const RunConfig &config)
{
    if (const auto *path = std::get_if<std::string>(&config.graph_source))
        return read_edge_list_file(*path);
    const auto &spec = std::get<FamilySpec>(config.graph_source);
    if (spec.n_min != spec.n_max)
        throw std::invalid_argument("a size range is only accepted by sweep");
    return family(spec.kind, spec.n_min, spec.seed ? spec.seed : config.seed, spec.p);
}

void write_table(std::ostream &out, const Table &table, Format format)
{
    if (format == Format::json)
        write_json(out, table);
    else
        write_csv(out, table);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }

    FamilySpec spec;
    spec.text = std::string(text);
    auto kind = parse_family_name(parts[0]);
    if (!kind)
        throw std::invalid_argument("unknown family '" + std::string(parts[0]) + "'");
    spec.kind = *kind;
    if (parts.size() < 2)
        throw std::invalid_argument("family spec '" + spec.text + "' lacks a size");
    std::tie(spec.n_min, spec.n_max) = parse_int_range(parts[1], "family size");
    if (spec.n_min < 1)
        throw std::invalid_argument("family size must be at least 1");

    if (spec.kind == Family::random) {
        if (parts.size() < 3 || parts.size() > 4)
            throw std::invalid_argument("random family needs 'random:n:p[:seed]'");
        spec.p = parse_number<double>(parts[2], "edge probability");
        if (!(*spec.p >= 0.0 && *spec.p <= 1.0))
            throw std::invalid_argument("edge probability must lie in [0,1]");
        if (parts.size() == 4)
            spec.seed = parse_number<std::uint64_t>(parts[3], "seed");
    } else if (parts.size() != 2) {
        throw std::invalid_argument("family '" + std::string(parts[0]) + "' takes only a size");
    }
    if (spec.kind == Family::cycle && spec.n_min < 3)
        throw std::invalid_argument("cycle requires n >= 3");
    return spec;
}

LambdaRange parse_lambda_range(std::string_view text)
{
    auto [lo, hi] = parse_int_range(text, "lambda");
    if (lo < 1)
        throw std::invalid_argument("lambda must be at least 1");
    return {lo, hi};
}

int count_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err)
{
    table.columns = {"v", "e", "lambda", "method", "count", "brute", "poly", "agree"};
    std::optional<ChromaticPolynomial> poly;
    if (config.method != Method::brute)
        poly = chromatic_polynomial(graph);

    int status = exit_ok;
    for (int lambda = config.lambda.min; lambda <= config.lambda.max; ++lambda) {
        Cell brute, from_poly, agree;
        BigInt count;
        if (config.method != Method::poly) {
            count = count_proper_brute(graph, lambda, config.budget);
            brute = count;
        }
        if (poly) {
            BigInt value = evaluate_polynomial(*poly, lambda);
            if (config.method == Method::both) {
                agree = value == count;
                if (value != count) {
                    err << "methods disagree at lambda=" << lambda << ": brute " << count
                        << ", polynomial " << value << '\n';
                    status = exit_property_failed;
                }
            }
            count = value;
            from_poly = std::move(value);
        }
        const char *method = config.method == Method::brute  ? "brute"
                             : config.method == Method::poly ? "poly"
                                                             : "both";
        table.add_row({BigInt(graph.vertex_count()), BigInt(graph.edge_count()), BigInt(lambda),
                       std::string(method), count, brute, from_poly, agree});
    }
    return status;
}

int bounds_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err)
{
    table.columns = {"v", "e", "lambda", "count", "count_method",
                     "liu_murty", "liu_murty_approx", "klazar", "klazar_approx",
                     "lazebnik_term1", "lazebnik_term2", "lazebnik_term3", "lazebnik_A",
                     "lazebnik_bound", "lazebnik_bound_approx", "all_bounds_hold"};
    int status = exit_ok;
    for (int lambda = config.lambda.min; lambda <= config.lambda.max; ++lambda) {
        auto count = auto_count(graph, lambda, config.budget);
        auto report = compare_bounds(graph, lambda,
                                     count ? std::optional<BigInt>(count->value) : std::nullopt);
        if (report.all_bounds_hold == false) {
            err << "bound violated at lambda=" << lambda << '\n';
            status = exit_property_failed;
        }
        table.add_row({BigInt(report.v), BigInt(report.e), BigInt(lambda),
                       count ? Cell(count->value) : Cell(),
                       count ? Cell(count->method) : Cell(),
                       optional_cell(report.liu_murty), optional_decimal(report.liu_murty),
                       report.klazar, decimal_cell(report.klazar),
                       report.lazebnik.terms[0], report.lazebnik.terms[1], report.lazebnik.terms[2],
                       report.lazebnik.factor, report.lazebnik.bound,
                       decimal_cell(report.lazebnik.bound),
                       report.all_bounds_hold ? Cell(*report.all_bounds_hold) : Cell()});
    }
    return status;
}

int verify_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err)
{
    table.columns = {"v", "e", "lambda", "proper_count", "domain_size", "image_size",
                     "total", "injective", "round_trip_forward", "round_trip_backward",
                     "max_multiplicity", "multiplicity_bounded", "two_bad_colors_unique",
                     "image_structure", "inequality_lhs", "inequality_rhs", "bound_holds",
                     "tight", "status", "note"};
    int status = exit_ok;
    for (int lambda = config.lambda.min; lambda <= config.lambda.max; ++lambda) {
        const BigInt v(graph.vertex_count()), e(graph.edge_count());
        if (lambda < 2 || graph.edge_count() == 0) {
            std::vector<Cell> row(table.columns.size());
            row[0] = v;
            row[1] = e;
            row[2] = BigInt(lambda);
            row[18] = std::string("degenerate");
            row[19] = degenerate_note(graph, lambda);
            table.add_row(std::move(row));
            continue;
        }
        auto r = verify_theorem(graph, lambda, config.budget);
        const bool ok = r.all_hold();
        if (!ok) {
            report_counterexamples(err, graph, r);
            status = exit_property_failed;
        }
        std::string note = ok || r.counterexamples.empty()
                               ? verify_note(r)
                               : r.counterexamples.front().property + ": " +
                                     r.counterexamples.front().witness;
        table.add_row({v, e, BigInt(lambda), r.proper_count, r.domain_size, r.image_size,
                       r.total, r.injective, r.round_trip_forward, r.round_trip_backward,
                       BigInt(r.max_image_multiplicity), r.multiplicity_bounded,
                       r.two_bad_colors_unique, r.image_structure, r.inequality_lhs,
                       r.inequality_rhs, r.bound_holds, r.tight(),
                       std::string(ok ? "pass" : "fail"), note});
    }
    return status;
}

int sweep_table(const FamilySpec &spec, const RunConfig &config, Table &table, std::ostream &err)
{
    table.columns = {"family", "n", "v", "e", "lambda", "count",
                     "liu_murty", "klazar", "lazebnik_bound",
                     "ratio_liu_murty", "ratio_klazar", "ratio_lazebnik",
                     "all_bounds_hold", "verify"};

    // Build every graph first so invalid parameters fail before any work.
    std::vector<Graph> graphs;
    for (int n = spec.n_min; n <= spec.n_max; ++n)
        graphs.push_back(family(spec.kind, n, spec.seed ? spec.seed : config.seed, spec.p));

    int status = exit_ok;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph &graph = graphs[i];
        const int n = spec.n_min + static_cast<int>(i);
        for (int lambda = config.lambda.min; lambda <= config.lambda.max; ++lambda) {
            auto count = auto_count(graph, lambda, config.budget);
            auto report = compare_bounds(
                graph, lambda, count ? std::optional<BigInt>(count->value) : std::nullopt);
            if (report.all_bounds_hold == false)
                status = exit_property_failed;

            std::string verdict = "n/a";
            if (lambda >= 2 && graph.edge_count() >= 1 &&
                coloring_count(graph.vertex_count(), lambda) <= config.budget) {
                auto r = verify_theorem(graph, lambda, config.budget);
                verdict = r.all_hold() ? "pass" : "fail";
                if (!r.all_hold()) {
                    report_counterexamples(err, graph, r);
                    status = exit_property_failed;
                }
            }
            table.add_row({std::string(family_name(spec.kind)), BigInt(n),
                           BigInt(graph.vertex_count()), BigInt(graph.edge_count()), BigInt(lambda),
                           count ? Cell(count->value) : Cell(), optional_cell(report.liu_murty),
                           report.klazar, report.lazebnik.bound,
                           ratio_cell(count, report.liu_murty), ratio_cell(count, report.klazar),
                           ratio_cell(count, report.lazebnik.bound),
                           report.all_bounds_hold ? Cell(*report.all_bounds_hold) : Cell(),
                           verdict});
        }
    }
    return status;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact proper-coloring counts, coloring bounds, and injection verification"};
    app.require_subcommand(1);

    std::string graph_file, family_text, lambda_text, method_text = "both", format_text = "csv",
                out_file;
    std::uint64_t budget = default_enumeration_budget, seed = 0;

    auto add_common = [&](CLI::App *sub, bool family_only) {
        auto *fam = sub->add_option("--family", family_text, "Graph family name:n[:p][:seed]");
        if (family_only) {
            fam->required();
        } else {
            auto *file = sub->add_option("--graph", graph_file, "Edge-list file");
            file->excludes(fam);
            fam->excludes(file);
        }
        sub->add_option("--lambda", lambda_text, "Color count A or range A..B")->required();
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--budget", budget, "Maximum colorings to enumerate")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "Seed for random families without an explicit seed");
        sub->add_option("--out", out_file, "Output file (default standard output)");
    };

    auto *count = app.add_subcommand("count", "Exact proper-coloring counts");
    add_common(count, false);
    count->add_option("--method", method_text, "Counting method")
        ->check(CLI::IsMember({"brute", "poly", "both"}));
    auto *bounds = app.add_subcommand("bounds", "Counts against the three upper bounds");
    add_common(bounds, false);
    auto *verify = app.add_subcommand("verify", "Exhaustive injection verification");
    add_common(verify, false);
    auto *sweep = app.add_subcommand("sweep", "Counts, bounds and verification over a family");
    add_common(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    // --graph and --family are mutually exclusive but one is needed.
    auto *active = app.get_subcommands().front();
    if (active != sweep && graph_file.empty() && family_text.empty()) {
        err << "one of --graph or --family is required\n";
        return exit_input_error;
    }

    RunConfig config;
    config.command = active == count    ? Command::count
                     : active == bounds ? Command::bounds
                     : active == verify ? Command::verify
                                        : Command::sweep;
    config.method = method_text == "brute" ? Method::brute
                    : method_text == "poly" ? Method::poly
                                            : Method::both;
    config.format = format_text == "json" ? Format::json : Format::csv;
    config.budget = budget;
    config.seed = seed;
    if (!out_file.empty())
        config.out = out_file;

    Table table;
    int status = exit_ok;
    try {
        config.lambda = parse_lambda_range(lambda_text);
        if (!family_text.empty())
            config.graph_source = parse_family_spec(family_text);
        else
            config.graph_source = graph_file;

        if (config.command == Command::sweep) {
            status = sweep_table(std::get<FamilySpec>(config.graph_source), config, table, err);
        } else {
            Graph graph = load_graph(config);
            switch (config.command) {
            case Command::count:
                status = count_table(graph, config, table, err);
                break;
            case Command::bounds:
                status = bounds_table(graph, config, table, err);
                break;
            case Command::verify:
                status = verify_table(graph, config, table, err);
                break;
            case Command::sweep:
                break;
            }
        }
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget_exceeded;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_input_error;
    }

    if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) {
            err << "cannot write '" << *config.out << "'\n";
            return exit_input_error;
        }
        write_table(file, table, config.format);
    } else {
        write_table(out, table, config.format);
    }
    return status;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace colorbound::cli
