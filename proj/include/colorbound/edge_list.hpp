#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "colorbound/graph.hpp"

namespace colorbound {

/// Malformed edge-list input. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : "end of input: " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Reads `v e` followed by e lines `u w` with 1 <= u < w <= v. Blank lines and
/// lines whose first non-blank character is '#' are skipped.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(const std::string &text);
Graph read_edge_list_file(const std::string &path);

void write_edge_list(std::ostream &out, const Graph &graph);

}  // namespace colorbound
