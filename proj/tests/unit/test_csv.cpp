#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ecsc/csv.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/report.hpp"

namespace {

using ecsc::csv::Document;

TEST(Csv, NumberFormatting) {
  EXPECT_EQ(ecsc::csv::format_number(-0.4900009), "-0.4900009");
  EXPECT_EQ(ecsc::csv::format_number(1.0 / 3.0), "0.3333333333");
  EXPECT_EQ(ecsc::csv::format_number(-2.16e-4), "-0.000216");
  EXPECT_EQ(ecsc::csv::format_number(1.2345678901234e-12), "1.23456789e-12");
  EXPECT_EQ(ecsc::csv::format_optional(std::nullopt), "");
  EXPECT_EQ(ecsc::csv::parse_number("-0.4900009"), -0.4900009);
  EXPECT_FALSE(ecsc::csv::parse_optional(""));
  EXPECT_THROW(ecsc::csv::parse_number("1,5"), ecsc::DomainError);
  EXPECT_THROW(ecsc::csv::parse_number("abc"), ecsc::DomainError);
}

TEST(Csv, DocumentLayout) {
  Document doc;
  doc.comments = {"r_valid=12.5"};
  doc.header = {"a", "b"};
  doc.rows = {{"1", "2"}, {"3", ""}};
  EXPECT_EQ(doc.to_string(), "# r_valid=12.5\na,b\n1,2\n3,\n");
  EXPECT_EQ(Document::parse(doc.to_string()), doc);
  EXPECT_EQ(Document::parse("a,b\r\n1,2\r\n").rows.at(0).at(1), "2");
  EXPECT_THROW(Document::parse("a,b\n1\n"), ecsc::DomainError);
}

TEST(Csv, HeaderOnly) {
  Document doc;
  doc.header = ecsc::csv::table_header();
  const auto back = Document::parse(doc.to_string());
  EXPECT_TRUE(back.rows.empty());
  EXPECT_TRUE(ecsc::csv::table_rows(back).empty());
}

ecsc::TableRow random_row(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(-12.0, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(0, 4);
  auto value = [&] { return (unit(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, mag(rng)) * (1 + unit(rng)); };
  auto maybe = [&]() -> std::optional<double> {
    if (unit(rng) < 0.3) return std::nullopt;
    return value();
  };
  ecsc::TableRow r;
  r.table = ecsc::table_id_from_int(1 + small(rng) % 6);
  r.row = small(rng) * 7 + 1;
  r.qn = {small(rng), small(rng)};
  r.state_label = r.qn.label();
  r.params = {std::abs(value()) + 0.1, unit(rng) * 0.2, 1.0, 1.0, unit(rng) < 0.5 ? 1.0 : 0.5};
  r.e_pert = value();
  r.e_oracle = maybe();
  r.e_reference = maybe();
  r.abs_dev_pert_ref = maybe();
  r.abs_dev_pert_oracle = maybe();
  return r;
}

TEST(Csv, TableRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ecsc::TableRow> rows;
    const int count = trial % 9;
    for (int i = 0; i < count; ++i) rows.push_back(random_row(rng));
    const auto text = ecsc::csv::table_document(rows).to_string();
    const auto parsed = ecsc::csv::table_rows(Document::parse(text));
    ASSERT_EQ(parsed.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(ecsc::csv::to_record(parsed[i]), ecsc::csv::to_record(rows[i]));
    }
    // a second pass is a fixed point byte for byte
    EXPECT_EQ(ecsc::csv::table_document(parsed).to_string(), text);
  }
}

TEST(Csv, BuiltTableRoundTrips) {
  ecsc::TableOptions fast;
  fast.run_oracle = false;
  const auto rows = ecsc::build_table(ecsc::TableId::T5, fast);
  const auto doc = ecsc::csv::table_document(rows);
  EXPECT_EQ(Document::parse(doc.to_string()), doc);
}

TEST(Csv, RecordErrors) {
  std::vector<std::string> short_record{"1", "2"};
  EXPECT_THROW(ecsc::csv::from_record(short_record), ecsc::DomainError);
  Document wrong;
  wrong.header = {"x"};
  EXPECT_THROW(ecsc::csv::table_rows(wrong), ecsc::DomainError);
}

}  // namespace
