#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "sdiep/error.hpp"
#include "sdiep/hadamard.hpp"
#include "sdiep/io.hpp"
#include "sdiep/realise.hpp"

namespace sdiep::io {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sdiep::Error";
  return ErrorCode::InvalidArgument;
}

TEST(SpectrumJson, Reads) {
  std::istringstream in(R"({"values":[1.0,-0.3,-0.3,-0.3]})");
  const Spectrum s = read_spectrum_json(in);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s[2], -0.3);
}

TEST(SpectrumJson, RoundTrip) {
  const Spectrum s = validate_spectrum({1.0, -0.1234567890123456789, 0.0, -1.0 / 3.0});
  std::stringstream buf;
  write_spectrum_json(buf, s);
  const Spectrum back = read_spectrum_json(buf);
  for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(back[j], s[j]);
}

TEST(SpectrumJson, Errors) {
  EXPECT_EQ(code_of([] {
              std::istringstream in("{not json");
              read_spectrum_json(in);
            }),
            ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([] {
              std::istringstream in(R"({"vals":[1]})");
              read_spectrum_json(in);
            }),
            ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([] {
              std::istringstream in(R"({"values":[1,"x"]})");
              read_spectrum_json(in);
            }),
            ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([] {
              std::istringstream in(R"({"values":[1,-2]})");
              read_spectrum_json(in);
            }),
            ErrorCode::OutOfRange);
}

TEST(MatrixCsv, ReadsWithWhitespaceAndBlankLines) {
  std::istringstream in("0.5, 0.5\n\n0.5,0.5 \n");
  const Matrix m = read_matrix_csv(in);
  EXPECT_EQ(m, Matrix(2, 2, {0.5, 0.5, 0.5, 0.5}));
}

TEST(MatrixCsv, Errors) {
  EXPECT_EQ(code_of([] {
              std::istringstream in("1,2\n3\n");
              read_matrix_csv(in);
            }),
            ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of([] {
              std::istringstream in("1,abc\n");
              read_matrix_csv(in);
            }),
            ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of([] {
              std::istringstream in("1,,2\n");
              read_matrix_csv(in);
            }),
            ErrorCode::MalformedCsv);
  EXPECT_EQ(code_of([] {
              std::istringstream in("");
              read_matrix_csv(in);
            }),
            ErrorCode::MalformedCsv);
}

// 17 significant digits round-trip every double exactly.
TEST(MatrixCsv, RoundTripIsBitExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(5, 3);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = u(rng) * std::pow(10.0, trial % 7 - 3);
    std::stringstream buf;
    write_matrix_csv(buf, m);
    EXPECT_EQ(read_matrix_csv(buf), m);
  }
}

TEST(HadamardCsv, PlusMinusOne) {
  std::ostringstream out;
  write_hadamard_csv(out, hadamard::sylvester(1));
  EXPECT_EQ(out.str(), "1,1\n1,-1\n");
}

TEST(Files, MissingFileIsIo) {
  EXPECT_EQ(code_of([] { load_matrix("/nonexistent/dir/p.csv"); }), ErrorCode::Io);
  EXPECT_EQ(code_of([] { load_spectrum("/nonexistent/dir/s.json"); }), ErrorCode::Io);
  EXPECT_EQ(code_of([] { save_matrix("/nonexistent/dir/p.csv", Matrix::identity(2)); }), ErrorCode::Io);
}

TEST(ReportJson, Fields) {
  const RealisationReport r = realise(validate_spectrum({1, -1}), hadamard::hadamard_basis(2));
  const nlohmann::json j = to_json(r);
  for (const char* key : {"sym_defect", "row_sum_defect", "col_sum_defect", "min_entry", "min_cell",
                          "spectrum_residual", "passes", "nonnegative", "n"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["passes"].get<bool>());
  EXPECT_TRUE(to_json(inspect(Matrix::identity(2)))["spectrum_residual"].is_null());
}

}  // namespace
}  // namespace sdiep::io
