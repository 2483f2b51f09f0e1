#include "kerr_mzi/table_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>

#include <json.hpp>

namespace kerr_mzi {

void NumericTable::add_column(std::string name, std::string origin) {
    columns.push_back(std::move(name));
    provenance.push_back(std::move(origin));
}

void NumericTable::check_rectangular() const {
    for (const auto& row : rows)
        if (row.size() != columns.size())
            throw std::logic_error("NumericTable: ragged row");
}

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

void write_csv(const NumericTable& table, std::ostream& out) {
    table.check_rectangular();
    out << "# kerr-mzi v" << kVersion << "\n";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

void write_json(const NumericTable& table, std::ostream& out) {
    table.check_rectangular();
    nlohmann::json doc;
    doc["schema"] = std::string("kerr-mzi v") + kVersion;
    doc["columns"] = table.columns;
    doc["provenance"] = table.provenance;
    doc["rows"] = table.rows;
    out << doc.dump(2) << '\n';
}

OutputFormat parse_output_format(const std::string& tag) {
    if (tag == "csv") return OutputFormat::Csv;
    if (tag == "json") return OutputFormat::Json;
    throw ValidationError("format: unknown value '" + tag + "' (expected csv|json)");
}

void write_table(const NumericTable& table, const std::string& path, OutputFormat format) {
    const auto emit = [&](std::ostream& out) {
        if (format == OutputFormat::Csv)
            write_csv(table, out);
        else
            write_json(table, out);
        if (!out) throw IoError("failed while writing output");
    };
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open output path '" + path + "'");
    emit(file);
}

}  // namespace kerr_mzi
