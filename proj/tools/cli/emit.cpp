#include "cli/emit.hpp"

#include <sstream>
#include <stdexcept>

namespace symcurv::cli {
namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void markdown_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << c << " |";
  os << '\n';
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_cell(cells[i]);
  }
  os << '\n';
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "markdown") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string render(const TextTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Markdown: {
      markdown_line(os, table.headers);
      os << '|';
      for (std::size_t i = 0; i < table.headers.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& r : table.rows) markdown_line(os, r);
      break;
    }
    case Format::Csv:
      csv_line(os, table.keys);
      for (const auto& r : table.rows) csv_line(os, r);
      break;
    case Format::Json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < table.keys.size(); ++i) obj[table.keys[i]] = r.at(i);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

nlohmann::json to_json(const TableRow& row) {
  return {
      {"type", row.type},
      {"space", row.space_name},
      {"rank", row.rank},
      {"dimension", row.dim},
      {"bound", row.bound.str()},
      {"name", row.space.name()},
      {"bound_formula", row.bound_formula},
      {"closed_form", row.closed_form.str()},
  };
}

std::string emit_table(std::span<const TableRow> rows, Format format) {
  if (rows.empty()) throw std::invalid_argument("empty selection: no table rows to emit");
  if (format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  TextTable t;
  t.headers = {"Type", "compact type", "rank", "dimension", "bound"};
  t.keys = {"type", "space", "rank", "dimension", "bound"};
  for (const auto& r : rows) {
    t.rows.push_back({r.type, r.space_name, std::to_string(r.rank), std::to_string(r.dim), r.bound.str()});
  }
  return render(t, format);
}

std::vector<std::string> wrap(std::string_view text, std::size_t width) {
  if (width == 0) return {std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  std::istringstream words{std::string(text)};
  std::string w;
  while (words >> w) {
    if (!line.empty() && line.size() + 1 + w.size() > width) {
      lines.push_back(std::move(line));
      line.clear();
    }
    if (!line.empty()) line += ' ';
    line += w;
  }
  if (!line.empty() || lines.empty()) lines.push_back(std::move(line));
  return lines;
}

}  // namespace symcurv::cli
