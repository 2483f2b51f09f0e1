#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kerr_mzi {

inline constexpr const char* kVersion = "0.1.0";

/// Config/CLI input that violates the schema; the message names the field.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rectangular table of doubles with named columns. Provenance records the
/// library operation that generated each column (emitted in JSON output).
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::string> provenance;  // parallel to columns; may be empty
    std::vector<std::vector<double>> rows;

    void add_column(std::string name, std::string origin = "");
    void check_rectangular() const;  // throws std::logic_error on mismatch
};

/// Shortest-of-17-significant-digits decimal rendering via std::to_chars:
/// locale-independent, '.' separator, round-trips the double exactly.
std::string format_double(double value);

/// CSV: "# kerr-mzi v<semver>" line, column header row, data rows,
/// newline-terminated, stable column order.
void write_csv(const NumericTable& table, std::ostream& out);

/// JSON mirror: schema string, columns, provenance, rows.
void write_json(const NumericTable& table, std::ostream& out);

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(const std::string& tag);

/// Writes to the path, or to stdout when path is empty. Throws IoError.
void write_table(const NumericTable& table, const std::string& path, OutputFormat format);

}  // namespace kerr_mzi
