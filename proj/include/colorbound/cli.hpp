#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colorbound/coloring.hpp"
#include "colorbound/graph.hpp"
#include "colorbound/table.hpp"

namespace colorbound::cli {

enum ExitStatus : int {
    exit_ok = 0,
    exit_property_failed = 1,
    exit_input_error = 2,
    exit_budget_exceeded = 3,
};

enum class Command { count, bounds, verify, sweep };
enum class Method { brute, poly, both };
enum class Format { csv, json };

/// `name:n[:p][:seed]`; n may be a range `a..b` (sweep only).
struct FamilySpec {
    Family kind = Family::path;
    int n_min = 1;
    int n_max = 1;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::string text;
};

/// Throws std::invalid_argument on malformed specs.
FamilySpec parse_family_spec(std::string_view text);

struct LambdaRange {
    int min = 1;
    int max = 1;
};

/// `A` or `A..B` with 1 <= A <= B.
LambdaRange parse_lambda_range(std::string_view text);

struct RunConfig {
    Command command = Command::count;
    std::variant<std::string, FamilySpec> graph_source;
    LambdaRange lambda;
    Method method = Method::both;
    Format format = Format::csv;
    std::uint64_t budget = default_enumeration_budget;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
};

/// Table builders behind each subcommand. Each returns the exit status the
/// command will report; tables are fully built before anything is written.
int count_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err);
int bounds_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err);
int verify_table(const Graph &graph, const RunConfig &config, Table &table, std::ostream &err);
int sweep_table(const FamilySpec &spec, const RunConfig &config, Table &table, std::ostream &err);

/// Full command line (argv[0] is the program name).
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace colorbound::cli
