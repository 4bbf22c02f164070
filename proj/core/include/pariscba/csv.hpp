#ifndef PARISCBA_CSV_HPP
#define PARISCBA_CSV_HPP

#include <string>
#include <vector>

namespace pariscba::csv {

/// A parsed CSV file: one header row plus data rows, all cells as strings.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a column, or -1 if absent.
    int find_column(const std::string& name) const;

    /// Index of a required column; throws naming the column if absent.
    std::size_t require_column(const std::string& name) const;
};

/// Read a comma-separated file with a mandatory header row.
/// Blank lines and lines starting with '#' are skipped.
/// Throws std::runtime_error naming the row on ragged rows.
Table read_file(const std::string& path);

/// Parse CSV from an in-memory string (same rules as read_file).
Table parse(const std::string& text, const std::string& origin = "<string>");

/// Parse a cell as double; throws naming row/column on failure or empty cell.
double to_double(const std::string& cell, std::size_t row, const std::string& column);

/// Parse a cell as integer year.
int to_year(const std::string& cell, std::size_t row, const std::string& column);

/// Format a double with fixed six decimals (the normalized on-disk format).
std::string format_value(double v);

/// Write rows to a file, creating parent directories if needed.
void write_file(const std::string& path, const std::string& content);

}  // namespace pariscba::csv

#endif
