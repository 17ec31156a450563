#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "colorbound/exact.hpp"

namespace colorbound {

/// Display-only decimal text; written verbatim to CSV and as a string to JSON.
struct Decimal {
    std::string text;
};

/// Empty cells (monostate) render as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::string, bool, BigInt, Rational, Decimal>;

/// Rows of typed cells. CSV renders rationals as "p/q"; JSON renders them as
/// {"num": p, "den": q}, and integers beyond 64 bits as decimal strings.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

inline constexpr int decimal_digits = 6;

Cell decimal_cell(const Rational &r);

void write_csv(std::ostream &out, const Table &table);
void write_json(std::ostream &out, const Table &table);

}  // namespace colorbound
