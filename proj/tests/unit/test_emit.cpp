#include "cli/emit.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace symcurv;
using namespace symcurv::cli;

namespace {

std::vector<TableRow> rows_of(std::initializer_list<const char*> types) {
  std::vector<TableRow> out;
  for (const TableRow& r : curvature_table({6, 6})) {
    for (const char* t : types) {
      if (r.type == t) out.push_back(r);
    }
  }
  return out;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(EmitTable, MarkdownFII) {
  auto text = emit_table(rows_of({"FII"}), Format::Markdown);
  auto ls = lines(text);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "| Type | compact type | rank | dimension | bound |");
  EXPECT_EQ(ls[1], "|---|---|---|---|---|");
  EXPECT_EQ(ls[2], "| FII |  | 1 | 16 | 1/18 |");
}

TEST(EmitTable, CsvHeaderAndRows) {
  auto ls = lines(emit_table(rows_of({"AI"}), Format::Csv));
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[0], "type,space,rank,dimension,bound");
  EXPECT_EQ(ls[1], "AI,SU(2)/SO(2),1,2,1/2");
}

TEST(EmitTable, JsonArrayOfRows) {
  auto j = nlohmann::json::parse(emit_table(rows_of({"G", "EIV"}), Format::Json));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& r : j) {
    for (const char* k : {"type", "space", "rank", "dimension", "bound"}) EXPECT_TRUE(r.contains(k)) << k;
  }
  EXPECT_EQ(j[0]["type"], "EIV");
  EXPECT_EQ(j[0]["bound"], "1/24");
  EXPECT_EQ(j[1]["dimension"], 8);
}

TEST(EmitTable, EmptySelectionIsAnError) {
  std::vector<TableRow> none;
  EXPECT_THROW(emit_table(none, Format::Markdown), std::invalid_argument);
  EXPECT_THROW(emit_table(none, Format::Json), std::invalid_argument);
}

TEST(EmitTable, Deterministic) {
  auto rows = curvature_table({6, 6});
  EXPECT_EQ(emit_table(rows, Format::Markdown), emit_table(curvature_table({6, 6}), Format::Markdown));
}

TEST(Render, CsvQuoting) {
  TextTable t{{"A", "B"}, {"a", "b"}, {{"x,y", "say \"hi\""}}};
  auto ls = lines(render(t, Format::Csv));
  EXPECT_EQ(ls[1], "\"x,y\",\"say \"\"hi\"\"\"");
}

TEST(Formats, Parse) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("markdown"), Format::Markdown);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Wrap, Greedy) {
  EXPECT_EQ(wrap("aa bb cc", 5), (std::vector<std::string>{"aa bb", "cc"}));
  EXPECT_EQ(wrap("aa bb cc", 0), (std::vector<std::string>{"aa bb cc"}));
  EXPECT_EQ(wrap("longword", 3), (std::vector<std::string>{"longword"}));
}
