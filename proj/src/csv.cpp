#include "frontlab/csv.hpp"

#include <cstdio>

#include "frontlab/errors.hpp"

namespace frontlab {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns,
                     int schema)
    : out_(path), ncols_(columns.size()), path_(path) {
    if (!out_) throw ConfigError("cannot open output file: " + path);
    out_ << "# schema=" << schema << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
}

CsvWriter::~CsvWriter() { close(); }

void CsvWriter::close() {
    if (out_.is_open()) out_.close();
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_)
        throw ConfigError("csv row width mismatch writing " + path_);
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << format(values[i]) << (i + 1 == values.size() ? "\n" : ",");
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    if (values.size() != ncols_)
        throw ConfigError("csv row width mismatch writing " + path_);
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << values[i] << (i + 1 == values.size() ? "\n" : ",");
}

}  // namespace frontlab
