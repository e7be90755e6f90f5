#include "womkit/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace womkit::cli {

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

OutputTable::OutputTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("row width does not match header");
    rows_.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string OutputTable::to_csv(int precision) const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c)
            out += ',';
        out += csv_escape(columns_[c]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            if (const double* num = std::get_if<double>(&row[c]))
                out += format_number(*num, precision);
            else
                out += csv_escape(std::get<std::string>(row[c]));
        }
        out += '\n';
    }
    return out;
}

std::string OutputTable::to_json(int precision) const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += r ? ",\n " : "\n ";
        out += '{';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c)
                out += ',';
            out += json_escape(columns_[c]);
            out += ':';
            if (const double* num = std::get_if<double>(&rows_[r][c]))
                out += format_number(*num, precision);
            else
                out += json_escape(std::get<std::string>(rows_[r][c]));
        }
        out += '}';
    }
    out += rows_.empty() ? "]" : "\n]";
    out += '\n';
    return out;
}

} // namespace womkit::cli
