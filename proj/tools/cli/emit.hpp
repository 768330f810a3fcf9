#pragma once

#include "symcurv/curvature_report.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symcurv::cli {

enum class Format { Markdown, Csv, Json };

/// "markdown", "csv" or "json". Throws std::invalid_argument.
Format parse_format(std::string_view text);

/// A rectangular table of already-rendered cells.
///
/// `keys` name the columns in CSV headers and JSON objects; `headers` are
/// the markdown column titles.
struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::string> keys;
  std::vector<std::vector<std::string>> rows;
};

/// Markdown pipes, RFC 4180 CSV, or a JSON array of string-valued objects.
std::string render(const TextTable& table, Format format);

/// The curvature table with columns type, space, rank, dimension, bound.
/// Throws std::invalid_argument for an empty selection.
std::string emit_table(std::span<const TableRow> rows, Format format);

nlohmann::json to_json(const TableRow& row);

/// Greedy word wrap at `width` columns; width 0 disables wrapping.
std::vector<std::string> wrap(std::string_view text, std::size_t width);

}  // namespace symcurv::cli
