#pragma once

#include <string>
#include <vector>

namespace sltr::cli {

/// Minimal CSV layer for the emitted tables: comma separator, one header
/// row, '.' decimal separator, LF line endings. Values never contain commas
/// or quotes, so no quoting rules are needed.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    std::string str() const;
    void write(const std::string& path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Parse a file written by CsvWriter; throws sltr::Error on ragged rows or
/// a missing header.
CsvTable read_csv(const std::string& path);

}  // namespace sltr::cli
