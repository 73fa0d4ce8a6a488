#include "support.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace tcpkit;
using tcpkit::testkit::Rng;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_tensor(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseTensor, ReadsAdequateExample) {
  auto t = parse_tensor("4 2\n1 1 1 1 2\n1 1 1 2 1\n2 1 2 2 4\n2 2 2 2 2");
  EXPECT_EQ(t.order(), 4);
  EXPECT_EQ(t.dim(), 2);
  EXPECT_EQ(t.nnz(), 4u);
  EXPECT_EQ(t, corpus::column_adequate_mixed());
}

TEST(ParseTensor, HeaderOnlyIsZeroTensor) {
  auto t = parse_tensor("3 4\n");
  EXPECT_EQ(t.nnz(), 0u);
  EXPECT_EQ(t.dim(), 4);
}

TEST(ParseTensor, SumsDuplicatesAndDropsZeros) {
  auto t = parse_tensor("3 2\n1 1 1 1/2\n1 1 1 1/2");
  EXPECT_EQ(t.nnz(), 1u);
  EXPECT_EQ(t.at({0, 0, 0}), 1);
  EXPECT_EQ(parse_tensor("3 2\n1 2 2 3\n1 2 2 -3\n2 1 1 0").nnz(), 0u);
  EXPECT_EQ(parse_tensor("# comment\n3 2 # trailing\n\n2 2 2 0.25  # x\n").at({1, 1, 1}), Rational(1, 4));
}

TEST(ParseTensor, ErrorsNameTheLine) {
  EXPECT_NE(error_of("").find("empty"), std::string::npos);
  EXPECT_NE(error_of("3").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("1 2").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("3 2\n1 1 1 1\n1 1 2").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("3 2\n1 1 3 1").find("outside"), std::string::npos);
  EXPECT_NE(error_of("3 2\n# c\n1 1 0 1").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("3 2\n1 1 1 abc").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("3 2\n1 x 1 1").find("line 2"), std::string::npos);
}

TEST(ParseTensor, RoundTripsRandomTensors) {
  Rng rng(211);
  for (int trial = 0; trial < 200; ++trial) {
    SparseTensor t(rng.integer(2, 5), rng.integer(1, 4));
    const int entries = rng.integer(0, 12);
    for (int k = 0; k < entries; ++k) {
      TensorIndex idx(static_cast<std::size_t>(t.order()));
      for (auto& i : idx) i = rng.integer(0, t.dim() - 1);
      t.set(idx, rng.rational(50, 37));
    }
    auto back = parse_tensor(format_tensor(t));
    EXPECT_EQ(back, t);
    EXPECT_EQ(format_tensor(back), format_tensor(t));
  }
}

TEST(ParseTensor, FixturesLoad) {
  EXPECT_EQ(load_tensor(testkit::data_path("column_sufficient.tns")), corpus::column_sufficient());
  EXPECT_EQ(load_tensor(testkit::data_path("row_diagonal_block.tns")), corpus::row_diagonal_block());
  EXPECT_EQ(load_tensor(testkit::data_path("mixed_order4.tns")), corpus::mixed_order4());
  EXPECT_THROW(load_tensor(testkit::data_path("missing.tns")), Error);
}

TEST(ParseVectorAndMatrix, AcceptCommonSeparators) {
  EXPECT_EQ(parse_vector("1, -1/2; 0.5"), (QVector{1, Rational(-1, 2), Rational(1, 2)}));
  EXPECT_EQ(parse_vector("(0,-1)"), (QVector{0, -1}));
  EXPECT_THROW(parse_vector(" , "), Error);
  EXPECT_THROW(parse_vector("1,x"), Error);
  QMatrix m = parse_matrix("2\n1 -1\n-1 1\n");
  EXPECT_EQ(m, (QMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(parse_matrix(format_matrix_text(m)), m);
  EXPECT_THROW(parse_matrix("2\n1 0\n"), Error);
  EXPECT_THROW(parse_matrix("2\n1 0\n0 1 2\n"), Error);
  EXPECT_EQ(load_tensor(testkit::data_path("diagonal_order3.tns")), corpus::diagonal_order3());
  EXPECT_EQ(parse_matrix(read_text_file(testkit::data_path("adequate_psd.mat"))), m);
}

TEST(FormatMatrix, AlignsUnderHeaders) {
  AuxiliarySystem aux(corpus::mixed_order4());
  auto s = format_matrix(aux.coef(), monomial_headers(aux));
  EXPECT_EQ(s, "x1^3  x2^3  x1^2*x2  x1*x2^2\n"
               "   1     0       -2        1\n"
               "   0     1        0        0\n");
}

TEST(Report, VerdictJsonKeys) {
  auto holds = check_column_adequate(corpus::row_diagonal_block());
  auto j = to_json(holds);
  EXPECT_EQ(j["verdict"], "holds");
  ASSERT_TRUE(j["certificate"].is_object());
  EXPECT_TRUE(j["certificate"].contains("chain"));
  EXPECT_TRUE(j["certificate"]["cones"].is_array());
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_NE(format_verdict(holds).find("certificate:"), std::string::npos);

  auto fails = check_column_adequate(corpus::column_sufficient());
  auto jf = to_json(fails);
  EXPECT_EQ(jf["verdict"], "fails");
  EXPECT_TRUE(jf["certificate"].is_null());
  // Exact rational strings, not floats.
  for (const auto& v : jf["counterexample"]["point"]) EXPECT_TRUE(v.is_string());
  EXPECT_EQ(jf["counterexample"]["point"][1], "0");
  EXPECT_NE(format_verdict(fails).find("x = ("), std::string::npos);
  EXPECT_EQ(exit_code(fails.status), 1);
  EXPECT_EQ(exit_code(holds.status), 0);
  EXPECT_EQ(exit_code(Status::Unknown), 2);
}

TEST(Report, PiecesPrintAsBasePlusDirections) {
  LcpInstance inst(QMatrix{{1, 0, -2, 1}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, QVector{0, -1, 0, 0});
  auto pieces = enumerate_solutions(inst);
  const std::regex shape(R"(support \{[0-9,]+\}: .+ \+ t1\*\(.+\), t >= 0  \[w (constant|varies)\])");
  for (const auto& p : pieces) EXPECT_TRUE(std::regex_match(format_piece(p), shape)) << format_piece(p);
  auto j = to_json(pieces);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& p : j)
    for (const char* key : {"support", "base", "directions", "vertices", "rays", "w_constant"})
      EXPECT_TRUE(p.contains(key)) << key;
}

TEST(Report, AuxiliaryJson) {
  auto j = to_json(AuxiliarySystem(corpus::diagonal_order3()), QVector{0, -1});
  EXPECT_EQ(j["N"], 3);
  EXPECT_EQ(j["monomials"], Json::parse(R"(["x1^2","x2^2","x1*x2"])"));
  EXPECT_EQ(j["qbar"], Json::parse(R"(["0","-1","0"])"));
  EXPECT_EQ(j["abar"][2], Json::parse(R"(["0","0","0"])"));
}

TEST(Report, RunConfigValidation) {
  RunConfig rc;
  EXPECT_NO_THROW(rc.validate());
  rc.lcp_cap = 0;
  EXPECT_THROW(rc.validate(), Error);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_output_format("xml"), Error);
  RunConfig seeded;
  seeded.seed = 7;
  EXPECT_EQ(seeded.check_config().search.base_seed, 7u);
  EXPECT_EQ(seeded.tcp_config().seed, 7u);
}

TEST(PaperSuite, PassesAndIsDeterministic) {
  auto a = run_paper_suite({}, {});
  auto b = run_paper_suite({}, {});
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), paper_cases().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].passed()) << a[i].id << ": " << (a[i].mismatches.empty() ? "" : a[i].mismatches.front());
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].mismatches, b[i].mismatches);
  }
}
