#pragma once

// Row-oriented output table written as CSV or JSON lines.
//
// CSV: optional '#' comment lines, a header row, then rows. Doubles use
// "%.17g" (round-trippable, '.' decimal point, no grouping).
// JSON lines: one object per row keyed by column name; comments are dropped.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace segprop {

enum class OutputFormat { Csv, Json };

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

std::string format_double(double v);

void write_csv(std::ostream& os, const Table& table);
void write_json_lines(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace segprop
