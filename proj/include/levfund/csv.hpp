// Minimal CSV plumbing shared by the loaders and report writers.
// Comma-separated, '.' decimal point, UTF-8, LF or CRLF line endings.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace levfund {

struct CsvRow {
    int line_no = 0;  // 1-based line in the source file
    std::vector<std::string> fields;
};

struct CsvFile {
    std::vector<std::string> header;  // normalized: lowercased, spaces -> '_'
    std::vector<CsvRow> rows;

    // Index of a normalized column name, or -1.
    int column(std::string_view name) const;
};

// Reads and splits a CSV file. Skips blank lines, strips a UTF-8 BOM and
// trailing CR. Throws std::runtime_error naming the path when the file is
// missing or has no header row.
CsvFile read_csv(const std::filesystem::path& path);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

// Parses a decimal field; throws std::runtime_error mentioning the field on
// trailing garbage or empty input.
double parse_double_field(const std::string& field);
long parse_int_field(const std::string& field);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace levfund
