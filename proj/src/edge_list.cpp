#include "colorbound/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

namespace colorbound {

namespace {

bool is_skippable(const std::string &line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly two non-negative integers from the line, rejecting anything else.
std::pair<long long, long long> read_pair(const std::string &line, int lineno, const char *what)
{
    std::istringstream ss(line);
    long long a = 0, b = 0;
    if (!(ss >> a >> b))
        throw ParseError(lineno, std::string("expected ") + what);
    std::string rest;
    if (ss >> rest)
        throw ParseError(lineno, "unexpected trailing token '" + rest + "'");
    return {a, b};
}

}  // namespace

Graph parse_edge_list(std::istream &in)
{
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long v = 0, e = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_line;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line))
            continue;
        if (!have_header) {
            std::tie(v, e) = read_pair(line, lineno, "header 'v e'");
            if (v < 1)
                throw ParseError(lineno, "vertex count must be at least 1");
            if (e < 0 || e > v * (v - 1) / 2)
                throw ParseError(lineno, "edge count " + std::to_string(e) +
                                             " impossible for a simple graph on " +
                                             std::to_string(v) + " vertices");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == e)
            throw ParseError(lineno, "more edge lines than the declared " + std::to_string(e));
        auto [u, w] = read_pair(line, lineno, "edge 'u w'");
        if (u < 1 || w < 1 || u > v || w > v)
            throw ParseError(lineno, "vertex out of range 1.." + std::to_string(v));
        if (u == w)
            throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (u > w)
            throw ParseError(lineno, "edge must be written with u < w");
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].u == u && edges[i].w == w)
                throw ParseError(lineno, "duplicate edge (" + std::to_string(u) + "," +
                                             std::to_string(w) + "), first on line " +
                                             std::to_string(edge_line[i]));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(w)});
        edge_line.push_back(lineno);
    }

    if (!have_header)
        throw ParseError(0, "missing header 'v e'");
    if (static_cast<long long>(edges.size()) != e)
        throw ParseError(0, "declared " + std::to_string(e) + " edges but found " +
                                std::to_string(edges.size()));
    return Graph(static_cast<int>(v), edges);
}

Graph parse_edge_list(const std::string &text)
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &graph)
{
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const Edge &e : graph.edges())
        out << e.u << ' ' << e.w << '\n';
}

}  // namespace colorbound
