#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "sltr/errors.hpp"

namespace sltr::cli {

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw Error("csv row has " + std::to_string(row.size()) + " fields, header has " +
                    std::to_string(header_.size()));
    for (const std::string& field : row)
        if (field.find_first_of(",\n\r\"") != std::string::npos)
            throw Error("csv field '" + field + "' contains a separator or quote");
    rows_.push_back(std::move(row));
}

std::string CsvWriter::str() const {
    std::ostringstream out;
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) out << ',';
            out << fields[i];
        }
        out << '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return out.str();
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << str();
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");

    CsvTable table;
    std::string line;
    auto split = [](const std::string& text) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream stream(text);
        while (std::getline(stream, field, ',')) fields.push_back(field);
        if (!text.empty() && text.back() == ',') fields.emplace_back();
        return fields;
    };

    if (!std::getline(in, line)) throw Error("'" + path + "' is empty (no header)");
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != table.header.size())
            throw Error("'" + path + "': ragged row with " + std::to_string(fields.size()) +
                        " fields");
        table.rows.push_back(std::move(fields));
    }
    return table;
}

}  // namespace sltr::cli
