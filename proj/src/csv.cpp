#include "waveobs/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace waveobs {

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    if (columns_ != 0) throw std::logic_error("CsvWriter: header already written");
    columns_ = columns.size();
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (columns_ == 0) throw std::logic_error("CsvWriter: header row is mandatory");
    if (cells.size() != columns_) throw std::logic_error("CsvWriter: column count mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

std::string CsvWriter::format(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace waveobs
