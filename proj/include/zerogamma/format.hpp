#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zerogamma {

/// 15 significant digits, '.' decimal point regardless of locale.
inline std::string format_number(double value, int significant = 15)
{
    if (std::isnan(value)) {
        return "nan";
    }
    char buffer[64];
    auto const [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, significant);
    return std::string(buffer, end);
}

/// One CSV cell: an integer index, a real, or empty.
using Cell = std::variant<std::monostate, std::uint64_t, double>;

inline std::string format_cell(Cell const& cell)
{
    if (auto const* n = std::get_if<std::uint64_t>(&cell)) {
        return std::to_string(*n);
    }
    if (auto const* x = std::get_if<double>(&cell)) {
        return std::isnan(*x) ? std::string{} : format_number(*x);
    }
    return {};
}

/// A header row plus data rows; rendered with ',' separators and LF endings.
struct CsvTable
{
    std::vector<std::string>       columns;
    std::vector<std::vector<Cell>> rows;

    void write(std::ostream& out) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "") << columns[i];
        }
        out << '\n';
        for (auto const& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << format_cell(row[i]);
            }
            out << '\n';
        }
    }
};

} // namespace zerogamma
