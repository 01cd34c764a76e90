#include "irmir/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "irmir/errors.hpp"

namespace irmir {

void ReportTable::add_row(std::vector<ReportValue> row) {
    if (row.size() != columns.size()) {
        throw Error("report row width does not match the column count");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    return buffer;
}

namespace {

double maybe_scale(double value, bool scalable, bool scale_e03) {
    return scale_e03 && scalable ? value * 1e-3 : value;
}

} // namespace

void write_csv(std::ostream& out, const ReportTable& table, int precision, bool scale_e03) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) {
            out << ',';
        }
        out << table.columns[c].name;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out << ',';
            }
            const bool scalable = table.columns[c].scalable;
            std::visit(
                [&](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, std::string>) {
                        out << cell;
                    } else if constexpr (std::is_same_v<T, double>) {
                        out << format_number(maybe_scale(cell, scalable, scale_e03), precision);
                    } else if constexpr (std::is_same_v<T, std::int64_t>) {
                        out << cell;
                    }
                    // monostate renders as an empty cell
                },
                row[c]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const ReportTable& table, bool scale_e03) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& name = table.columns[c].name;
            const bool scalable = table.columns[c].scalable;
            std::visit(
                [&](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, std::string>) {
                        obj[name] = cell;
                    } else if constexpr (std::is_same_v<T, double>) {
                        obj[name] = maybe_scale(cell, scalable, scale_e03);
                    } else if constexpr (std::is_same_v<T, std::int64_t>) {
                        obj[name] = cell;
                    } else {
                        obj[name] = nullptr;
                    }
                },
                row[c]);
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

ExternalCounts::ExternalCounts(std::vector<std::string> names,
                               std::map<std::string, std::vector<std::optional<double>>> rows)
    : names_(std::move(names)), by_path_(std::move(rows)) {
    for (const auto& [key, values] : by_path_) {
        by_filename_[std::filesystem::path(key).filename().string()] = values;
    }
}

std::vector<std::optional<double>> ExternalCounts::lookup(
    const std::filesystem::path& image) const {
    if (auto it = by_path_.find(image.string()); it != by_path_.end()) {
        return it->second;
    }
    if (auto it = by_filename_.find(image.filename().string()); it != by_filename_.end()) {
        return it->second;
    }
    return std::vector<std::optional<double>>(names_.size());
}

ExternalCounts load_external_counts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open external counts file " + path.string());
    }

    const auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::stringstream ss(line);
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        return fields;
    };

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("external counts file is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    auto header = split(line);
    if (header.size() < 2 || header[0] != "path") {
        throw ParseError("external counts header must be: path,<name>[,<name>...]");
    }
    std::vector<std::string> names(header.begin() + 1, header.end());

    std::map<std::string, std::vector<std::optional<double>>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (fields.size() != header.size()) {
            throw ParseError("external counts line " + std::to_string(line_no) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(header.size()));
        }
        std::vector<std::optional<double>> values(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& cell = fields[i + 1];
            if (cell.empty()) {
                continue;
            }
            try {
                values[i] = std::stod(cell);
            } catch (const std::exception&) {
                throw ParseError("external counts line " + std::to_string(line_no) +
                                 ": cannot parse \"" + cell + "\" as a number");
            }
        }
        rows[fields[0]] = std::move(values);
    }
    return ExternalCounts(std::move(names), std::move(rows));
}

} // namespace irmir
