#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irmir/errors.hpp"

namespace irmir {

/// One table cell: empty, text, a real value, or an integer.
using ReportValue = std::variant<std::monostate, std::string, double, std::int64_t>;

struct ReportColumn {
    std::string name;
    bool scalable = false; // pixel-count column, scaled by 1e-3 under table-style output
};

/// A rectangular report emitted as CSV or JSON. Rows follow the column order.
struct ReportTable {
    std::vector<ReportColumn> columns;
    std::vector<std::vector<ReportValue>> rows;

    void add_row(std::vector<ReportValue> row);
};

/// Formats a real value with the given number of significant digits, the
/// same way CSV cells are rendered.
std::string format_number(double value, int precision);

/// CSV with a header row, LF line endings, and reals at `precision`
/// significant digits. Output is byte-deterministic for identical tables.
void write_csv(std::ostream& out, const ReportTable& table, int precision = 6,
               bool scale_e03 = false);

/// JSON array of row objects keyed by column name, in column order.
void write_json(std::ostream& out, const ReportTable& table, bool scale_e03 = false);

/// Externally supplied per-image detector counts (e.g. ORB/SURF/KAZE),
/// loaded from a CSV whose header is `path,<name>[,<name>...]`. Cells may be
/// empty. Lookups match the path string exactly, then fall back to the
/// filename component.
class ExternalCounts {
public:
    ExternalCounts() = default;
    ExternalCounts(std::vector<std::string> names,
                   std::map<std::string, std::vector<std::optional<double>>> rows);

    const std::vector<std::string>& names() const { return names_; }
    bool empty() const { return names_.empty(); }

    std::vector<std::optional<double>> lookup(const std::filesystem::path& image) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::vector<std::optional<double>>> by_path_;
    std::map<std::string, std::vector<std::optional<double>>> by_filename_;
};

ExternalCounts load_external_counts(const std::filesystem::path& path);

} // namespace irmir
