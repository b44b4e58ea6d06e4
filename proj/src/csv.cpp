#include "stimsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace stimsim {

std::string format_value(double v) {
    if (v == 0.0) v = 0.0; // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    if (columns_ == 0)
        throw std::invalid_argument("CsvWriter: empty header");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvWriter: row width " + std::to_string(cells.size()) +
                                    " != header width " + std::to_string(columns_));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

void CsvWriter::add_numeric_row(const std::vector<double>& cells) {
    std::vector<std::string> row;
    row.reserve(cells.size());
    for (double v : cells) row.push_back(format_value(v));
    add_row(row);
}

void CsvWriter::write(const std::string& path) const { write_file(path, text_); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace stimsim
