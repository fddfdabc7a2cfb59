#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pgl/zeta_zeros.hpp"

using pgl::ErrorKind;

namespace {

pgl::ZeroTable parse(const std::string& text, std::size_t max_count = 1000) {
  std::istringstream in(text);
  return pgl::parse_zeros(in, max_count);
}

std::size_t format_line(const std::string& text) {
  try {
    parse(text);
  } catch (const pgl::FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no format error for: " << text;
  return 0;
}

ErrorKind kind_of(const std::string& text, std::size_t max_count = 1000) {
  try {
    parse(text, max_count);
  } catch (const pgl::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::precondition;
}

}  // namespace

TEST(ParseZeros, FirstThree) {
  const auto t = parse("14.134725\n21.022040\n25.010858\n");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t[2], 25.010858);
}

TEST(ParseZeros, CommentsBlankLinesAndLimit) {
  const auto t = parse("# header\n\n  14.134725  \n# mid\n21.022040\n25.010858\n", 2);
  EXPECT_EQ(t.size(), 2u);
}

TEST(ParseZeros, FormatErrorsNameTheLine) {
  EXPECT_EQ(format_line("21.0\n14.1\n"), 2u);
  EXPECT_EQ(format_line("14.134725\n21.0\n21.0\n"), 3u);
  EXPECT_EQ(format_line("14.134725\nabc\n"), 2u);
  EXPECT_EQ(format_line("14.134725\n-3\n"), 2u);
  EXPECT_EQ(format_line("15.0\n21.0\n"), 1u);
  EXPECT_EQ(format_line("# c\n14.134725\n21.0x\n"), 3u);
}

TEST(ParseZeros, EmptyInputs) {
  EXPECT_EQ(kind_of("14.134725\n", 0), ErrorKind::empty_table);
  EXPECT_EQ(kind_of(""), ErrorKind::empty_table);
  EXPECT_EQ(kind_of("# only a comment\n\n"), ErrorKind::empty_table);
}

TEST(LoadZeros, DataFileMatchesBundled) {
  const auto t = pgl::load_zeros(std::string(PGL_DATA_DIR) + "/zeros_first100.txt", 1000);
  ASSERT_EQ(t.size(), 100u);
  for (std::size_t k = 0; k < 100; ++k) EXPECT_NEAR(t[k], pgl::bundled_zeros()[k], 1e-12);
}

TEST(LoadZeros, MissingFile) {
  EXPECT_THROW(pgl::load_zeros("/nonexistent/zeros.txt", 10), pgl::Error);
}

TEST(BundledZeros, Basics) {
  const auto& z = pgl::bundled_zeros();
  EXPECT_EQ(z.size(), 100u);
  EXPECT_NEAR(z[0], 14.134725142, 1e-9);
  EXPECT_EQ(z.source(), "bundled");
  EXPECT_NEAR(z[99], 236.524229665816, 1e-9);
}

TEST(BundledZeros, SerializationRoundTrip) {
  const auto& z = pgl::bundled_zeros();
  const auto path = std::filesystem::temp_directory_path() / "pgl_zeros_round_trip.txt";
  {
    std::ofstream out(path);
    pgl::serialize_zeros(out, z);
  }
  const auto back = pgl::load_zeros(path.string(), 1000);
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), z.size());
  for (std::size_t k = 0; k < z.size(); ++k) EXPECT_EQ(back[k], z[k]);
  EXPECT_TRUE(back == z);
}

TEST(BundledZeros, CountingMatchesRiemannVonMangoldt) {
  const auto& z = pgl::bundled_zeros();
  const auto n = z.count_up_to(100.0);
  EXPECT_GE(n, 28u);
  EXPECT_LE(n, 30u);
  for (double T : {50.0, 150.0, 230.0}) {
    const double u = T / (2 * M_PI);
    const double estimate = u * std::log(u) - u + 7.0 / 8.0;
    EXPECT_LE(std::abs(static_cast<double>(z.count_up_to(T)) - estimate), 2.0) << T;
  }
}

TEST(ZeroTable, PrefixAndValidation) {
  const auto& z = pgl::bundled_zeros();
  EXPECT_EQ(z.prefix(10).size(), 10u);
  EXPECT_EQ(z.prefix(500).size(), 100u);
  EXPECT_THROW(z.prefix(0), pgl::Error);
  EXPECT_THROW(pgl::ZeroTable({}, "x"), pgl::Error);
  EXPECT_THROW(pgl::ZeroTable({14.134725, 13.0}, "x"), pgl::FormatError);
}
