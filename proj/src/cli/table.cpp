#include "dressed/cli/table.hpp"

#include "dressed/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace dressed::cli {

namespace {

using ojson = nlohmann::ordered_json;

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> ojson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_csv(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_escape(v);
            }
        },
        cell);
}

// Flat rendering of a metadata value for a CSV comment line.
std::string scalar_text(const ojson& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ',';
            out += scalar_text(v[i]);
        }
        return out;
    }
    return v.dump();
}

void write_comment_block(const std::string& prefix, const ojson& obj, std::ostream& os) {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            write_comment_block(prefix + key + ".", value, os);
        } else {
            os << "# " << prefix << key << '=' << scalar_text(value) << '\n';
        }
    }
}

void newline_indent(std::ostream& os, int indent) {
    os << '\n';
    for (int i = 0; i < indent; ++i) os << ' ';
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw DomainError("unknown output format '" + name + "' (expected csv or json)");
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw DomainError("Table::add_row: expected " + std::to_string(columns.size()) + " cells, got " +
                          std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& os) {
    os << "# command=" << table.command << '\n';
    write_comment_block("", table.params, os);
    write_comment_block("", table.metadata, os);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << cell_to_csv(row[c]);
        }
        os << '\n';
    }
}

void write_json_value(const ojson& value, std::ostream& os, int indent) {
    switch (value.type()) {
        case ojson::value_t::number_float: {
            const double d = value.get<double>();
            if (std::isfinite(d)) {
                os << format_double(d);
            } else {
                os << "null";
            }
            return;
        }
        case ojson::value_t::array: {
            if (value.empty()) {
                os << "[]";
                return;
            }
            const bool flat = std::none_of(value.begin(), value.end(),
                                           [](const ojson& v) { return v.is_structured(); });
            os << '[';
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i > 0) os << (flat ? ", " : ",");
                if (!flat) newline_indent(os, indent + 2);
                write_json_value(value[i], os, indent + 2);
            }
            if (!flat) newline_indent(os, indent);
            os << ']';
            return;
        }
        case ojson::value_t::object: {
            if (value.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (const auto& [key, v] : value.items()) {
                if (!first) os << ',';
                first = false;
                newline_indent(os, indent + 2);
                os << ojson(key).dump() << ": ";
                write_json_value(v, os, indent + 2);
            }
            newline_indent(os, indent);
            os << '}';
            return;
        }
        default:
            os << value.dump();
            return;
    }
}

void write_json(const Table& table, std::ostream& os) {
    ojson doc = ojson::object();
    doc["command"] = table.command;
    doc["params"] = table.params;
    doc["metadata"] = table.metadata;
    ojson rows = ojson::array();
    for (const auto& row : table.rows) {
        ojson record = ojson::object();
        for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = cell_to_json(row[c]);
        rows.push_back(std::move(record));
    }
    doc["rows"] = std::move(rows);
    write_json_value(doc, os);
    os << '\n';
}

void write_table(const Table& table, OutputFormat format, std::ostream& os) {
    if (format == OutputFormat::csv) {
        write_csv(table, os);
    } else {
        write_json(table, os);
    }
}

}  // namespace dressed::cli
