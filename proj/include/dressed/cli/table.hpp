// table.hpp: tabular command output with CSV and JSON serializers
//
// Every float is written with 17 significant digits so output re-parses to
// the same doubles. Output depends only on the table contents.

#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace dressed::cli {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);

// Empty cell (monostate) is written as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

std::string format_double(double value);

// '#'-prefixed params and metadata lines, a header, then one record per row.
void write_csv(const Table& table, std::ostream& os);

// {"command", "params", "metadata", "rows": [{column: value, ...}, ...]}
void write_json(const Table& table, std::ostream& os);

// Deterministic JSON writer with 17-digit floats; non-finite floats become null.
void write_json_value(const nlohmann::ordered_json& value, std::ostream& os, int indent = 0);

void write_table(const Table& table, OutputFormat format, std::ostream& os);

}  // namespace dressed::cli
