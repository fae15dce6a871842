#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace xxchain::cli {

using Value = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// Rows of one output schema. Every row has one value per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

enum class Format { csv, json };

/// RFC-4180 CSV: header row, LF line endings, doubles with 9 significant
/// digits, empty field for monostate.
void write_csv(const Table& table, std::ostream& out);

/// {"meta": meta, "rows": [{column: value, ...}, ...]}. Doubles keep full
/// precision; non-finite doubles are written as the strings "inf", "-inf", "nan".
nlohmann::ordered_json table_to_json(const Table& table, const nlohmann::ordered_json& meta);
Table table_from_json(const nlohmann::ordered_json& doc);

/// Writes to path, or to `fallback` when path is empty or "-". Throws
/// std::runtime_error when the file cannot be written.
void emit(const Table& table, Format format, const std::string& path, const nlohmann::ordered_json& meta,
          std::ostream& fallback);

std::string format_double(double v);

} // namespace xxchain::cli
