#pragma once

#include <string>
#include <vector>

namespace stimsim {

// CSV numeric cell: 9 significant digits, '.' decimal separator.
std::string format_value(double v);

// Minimal CSV writer: header row, LF line endings, no quoting (the toolkit
// never emits cells containing commas).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(const std::vector<std::string>& cells);
    void add_numeric_row(const std::vector<double>& cells);
    const std::string& text() const { return text_; }
    void write(const std::string& path) const;

private:
    std::size_t columns_;
    std::string text_;
};

// Overwrites path with exactly the given bytes (binary mode, LF preserved).
void write_file(const std::string& path, const std::string& content);

} // namespace stimsim
