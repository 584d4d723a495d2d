#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace waveobs {

/// CSV emitter: comma separators, mandatory header, doubles at 17 significant
/// digits so values round-trip exactly.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

    static std::string format(double value);
    static std::string format(int value) { return std::to_string(value); }

private:
    std::ofstream out_;
    size_t columns_ = 0;
};

} // namespace waveobs
