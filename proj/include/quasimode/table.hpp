#ifndef QUASIMODE_TABLE_HPP
#define QUASIMODE_TABLE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

// Tabular datasets and their CSV / JSON encodings. CSV numbers use a fixed
// 17-significant-digit scientific format ("{:.16e}"), which round-trips every
// double and does not depend on the locale.

namespace quasimode
{

inline constexpr const char* kSchemaVersion = "1.0.0";

using Cell = std::variant<double, std::int64_t, std::string>;
using Row = std::vector<Cell>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<Row> rows;

    std::size_t column_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        throw std::out_of_range("no column named " + name);
    }
};

inline std::string format_number(double v) { return fmt::format("{:.16e}", v); }

inline std::string format_cell(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_number(v);
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return fmt::format("{}", v);
            else
                return v;
        },
        cell);
}

/// Header row, then one line per row; LF line endings.
inline void write_csv(std::ostream& out, const Table& table)
{
    std::string line;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        if (i != 0)
            line += ',';
        line += table.columns[i];
    }
    out << line << '\n';
    for (const auto& row : table.rows)
    {
        line.clear();
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i != 0)
                line += ',';
            line += format_cell(row[i]);
        }
        out << line << '\n';
    }
}

inline nlohmann::json cell_to_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
            else
                return nlohmann::json(v);
        },
        cell);
}

inline nlohmann::json table_to_json(const Table& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows)
    {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row)
            r.push_back(cell_to_json(cell));
        rows.push_back(std::move(r));
    }
    return {{"columns", table.columns}, {"rows", std::move(rows)}};
}

} // namespace quasimode

#endif // QUASIMODE_TABLE_HPP
