#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace frontlab {

/// Writes "# schema=1" plus a header row, then full-precision (%.17g) rows.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns,
              int schema = 1);
    ~CsvWriter();

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);
    void close();

    static std::string format(double v);

private:
    std::ofstream out_;
    std::size_t ncols_ = 0;
    std::string path_;
};

}  // namespace frontlab
