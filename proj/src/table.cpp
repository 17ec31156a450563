#include "colorbound/table.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace colorbound {

namespace {

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json json_integer(const BigInt &n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

struct CsvCell {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string &s) const { return csv_escape(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const BigInt &n) const { return n.str(); }
    std::string operator()(const Rational &r) const { return to_fraction_string(r); }
    std::string operator()(const Decimal &d) const { return d.text; }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string &s) const { return s; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const BigInt &n) const { return json_integer(n); }
    nlohmann::ordered_json operator()(const Rational &r) const
    {
        nlohmann::ordered_json j;
        j["num"] = json_integer(numerator_of(r));
        j["den"] = json_integer(denominator_of(r));
        return j;
    }
    nlohmann::ordered_json operator()(const Decimal &d) const { return d.text; }
};

}  // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

Cell decimal_cell(const Rational &r)
{
    return Decimal{to_decimal_string(r, decimal_digits)};
}

void write_csv(std::ostream &out, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(table.columns[i]);
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        out << '\n';
    }
}

void write_json(std::ostream &out, const Table &table)
{
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace colorbound
