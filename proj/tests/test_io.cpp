#include <doctest.h>

#include <sstream>

#include "ucinv/io.hpp"
#include "test_support.hpp"

using namespace ucinv;
using namespace ucinv::io;

namespace {

RealMatrix parse(const std::string& text, MatrixFormat fmt) {
  std::istringstream in(text);
  return read_matrix(in, fmt);
}

}  // namespace

TEST_CASE("csv: parse") {
  const RealMatrix a = parse("0.5,-0.5\n0.5,-0.5\n", MatrixFormat::Csv);
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a(0, 0) == 0.5);
  CHECK(a(1, 1) == -0.5);

  // single row, scientific notation, CRLF tolerated
  const RealMatrix row = parse("1e-3, 2.5E2 ,-7\r\n", MatrixFormat::Csv);
  CHECK(row.rows() == 1);
  CHECK(row.cols() == 3);
  CHECK(row(0, 0) == 1e-3);
  CHECK(row(0, 1) == 250.0);

  CHECK_THROWS_AS(parse("1,2\n3\n", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse("", MatrixFormat::Csv), ParseError);
  CHECK_THROWS_AS(parse("1,abc\n", MatrixFormat::Csv), ParseError);
}

TEST_CASE("csv: write uses 6 significant digits by default") {
  RealMatrix a(2, 2);
  a << 0.1, 0.05, 1.0 / 6, 1.0 / 12;
  CHECK(to_string(a, MatrixFormat::Csv) == "0.1,0.05\n0.166667,0.0833333\n");

  RealMatrix b(2, 1);
  b << 2, 0;
  CHECK(to_string(b, MatrixFormat::Csv) == "2\n0\n");
}

TEST_CASE("matrix market: array parse is column-major") {
  const std::string text =
      "%%MatrixMarket matrix array real general\n"
      "% comment line\n"
      "2 3\n"
      "1\n2\n3\n4\n5\n6\n";
  const RealMatrix a = parse(text, MatrixFormat::MatrixMarket);
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a(0, 0) == 1);
  CHECK(a(1, 0) == 2);
  CHECK(a(0, 1) == 3);
  CHECK(a(1, 2) == 6);
}

TEST_CASE("matrix market: coordinate parse densifies") {
  const std::string text =
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 2\n"
      "1 2 5.5\n"
      "3 1 -1\n";
  const RealMatrix a = parse(text, MatrixFormat::MatrixMarket);
  CHECK(a(0, 1) == 5.5);
  CHECK(a(2, 0) == -1);
  CHECK(a(0, 0) == 0);
  CHECK(a.cwiseAbs().sum() == 6.5);
}

TEST_CASE("matrix market: rejected headers") {
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array complex general\n1 1\n1 0\n",
                        MatrixFormat::MatrixMarket),
                  ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix array real symmetric\n1 1\n1\n",
                        MatrixFormat::MatrixMarket),
                  ParseError);
  CHECK_THROWS_AS(parse("not a banner\n", MatrixFormat::MatrixMarket),
                  ParseError);
  CHECK_THROWS_AS(
      parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n",
            MatrixFormat::MatrixMarket),
      ParseError);
}

TEST_CASE("matrix market: write/parse round trip") {
  test::Rng rng(680);
  const RealMatrix a = test::random_matrix<double>(rng, 4, 3);
  std::ostringstream out;
  write_matrix(out, a, MatrixFormat::MatrixMarket, {true});
  const RealMatrix b = parse(out.str(), MatrixFormat::MatrixMarket);
  CHECK((a - b).norm() == 0.0);
}

TEST_CASE("exact mode round-trips bit-identically") {
  test::Rng rng(791);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 6);
    const Index n = 1 + static_cast<Index>(rng() % 6);
    RealMatrix a = test::random_matrix<double>(rng, m, n);
    // mix in extreme magnitudes
    if (trial % 3 == 0) a(0, 0) *= 1e300;
    if (trial % 4 == 0) a(m - 1, n - 1) *= 1e-300;
    for (const auto fmt : {MatrixFormat::Csv, MatrixFormat::MatrixMarket}) {
      std::ostringstream first;
      write_matrix(first, a, fmt, {true});
      const RealMatrix reparsed = parse(first.str(), fmt);
      std::ostringstream second;
      write_matrix(second, reparsed, fmt, {true});
      CHECK(first.str() == second.str());
      CHECK((a - reparsed).norm() == 0.0);
    }
  }
}

TEST_CASE("complex vectors: csv rows are re,im pairs") {
  ComplexVector v(2);
  v << std::complex<double>(1.5, -2), std::complex<double>(0, 3);
  std::ostringstream out;
  write_complex_vector(out, v, MatrixFormat::Csv, {});
  CHECK(out.str() == "1.5,-2\n0,3\n");

  std::ostringstream mm;
  write_complex_vector(mm, v, MatrixFormat::MatrixMarket, {});
  CHECK(mm.str() ==
        "%%MatrixMarket matrix array complex general\n2 1\n1.5 -2\n0 3\n");
}
