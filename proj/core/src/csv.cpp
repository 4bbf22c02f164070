#include "pariscba/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pariscba::csv {

int Table::find_column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

std::size_t Table::require_column(const std::string& name) const {
    int i = find_column(name);
    if (i < 0) throw std::runtime_error("missing column '" + name + "'");
    return static_cast<std::size_t>(i);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

Table parse(const std::string& text, const std::string& origin) {
    Table t;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_line(line);
        if (t.header.empty()) {
            t.header = cells;
            continue;
        }
        if (cells.size() != t.header.size())
            throw std::runtime_error(origin + ": row " + std::to_string(lineno) +
                                     " has " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(cells));
    }
    if (t.header.empty())
        throw std::runtime_error(origin + ": no header row");
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

double to_double(const std::string& cell, std::size_t row, const std::string& column) {
    if (cell.empty())
        throw std::runtime_error("row " + std::to_string(row + 1) +
                                 ": empty value in column '" + column + "'");
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("row " + std::to_string(row + 1) + ": cannot parse '" +
                                 cell + "' in column '" + column + "'");
    }
    if (pos != cell.size())
        throw std::runtime_error("row " + std::to_string(row + 1) + ": trailing junk in '" +
                                 cell + "' in column '" + column + "'");
    return v;
}

int to_year(const std::string& cell, std::size_t row, const std::string& column) {
    double v = to_double(cell, row, column);
    int y = static_cast<int>(v);
    if (static_cast<double>(y) != v)
        throw std::runtime_error("row " + std::to_string(row + 1) +
                                 ": non-integer year '" + cell + "'");
    return y;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace pariscba::csv
