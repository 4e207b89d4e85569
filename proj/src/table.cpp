#include "segprop/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace segprop {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("table row width does not match header");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    if (const auto* l = std::get_if<long>(&cell)) return std::to_string(*l);
    return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
    for (const auto& c : table.comments) os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json_lines(std::ostream& os, const Table& table) {
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
        }
        os << obj.dump() << '\n';
    }
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        write_csv(os, table);
    } else {
        write_json_lines(os, table);
    }
}

}  // namespace segprop
