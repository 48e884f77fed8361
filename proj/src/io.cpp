#include "ucinv/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ucinv::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_value(std::string_view token, const char* context) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string(context) + ": invalid number '" +
                     std::string(token) + "'");
  return value;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

RealMatrix read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_value(rest.substr(0, comma), "csv"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("csv: ragged rows (" + std::to_string(row.size()) +
                       " vs " + std::to_string(rows.front().size()) +
                       " columns)");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("csv: empty input");
  RealMatrix a(static_cast<Index>(rows.size()),
               static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      a(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return a;
}

// Pulls the next whitespace-separated token, skipping '%' comment lines.
bool next_token(std::istream& in, std::string& token) {
  while (in >> token) {
    if (token.front() == '%') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return true;
  }
  return false;
}

RealMatrix read_matrix_market(std::istream& in) {
  std::string banner;
  if (!std::getline(in, banner)) throw ParseError("matrix market: empty input");
  if (!banner.empty() && banner.back() == '\r') banner.pop_back();
  std::istringstream header(lowercase(banner));
  std::string tag, object, layout, field, symmetry;
  header >> tag >> object >> layout >> field >> symmetry;
  if (tag != "%%matrixmarket" || object != "matrix")
    throw ParseError("matrix market: bad banner '" + banner + "'");
  if (layout != "array" && layout != "coordinate")
    throw ParseError("matrix market: unsupported layout '" + layout + "'");
  if (field != "real" || symmetry != "general")
    throw ParseError("matrix market: only 'real general' is supported");

  std::string token;
  auto next_index = [&](const char* what) -> Index {
    if (!next_token(in, token))
      throw ParseError(std::string("matrix market: missing ") + what);
    const double v = parse_value(token, "matrix market");
    const auto idx = static_cast<Index>(v);
    if (idx < 0 || static_cast<double>(idx) != v)
      throw ParseError(std::string("matrix market: bad ") + what + " '" +
                       token + "'");
    return idx;
  };

  const Index rows = next_index("row count");
  const Index cols = next_index("column count");
  if (rows < 1 || cols < 1)
    throw ParseError("matrix market: dimensions must be positive");

  if (layout == "array") {
    RealMatrix a(rows, cols);
    // array entries run down the columns
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) {
        if (!next_token(in, token))
          throw ParseError("matrix market: not enough entries");
        a(i, j) = parse_value(token, "matrix market");
      }
    }
    return a;
  }

  const Index nnz = next_index("entry count");
  RealMatrix a = RealMatrix::Zero(rows, cols);
  for (Index k = 0; k < nnz; ++k) {
    const Index i = next_index("row index");
    const Index j = next_index("column index");
    if (!next_token(in, token))
      throw ParseError("matrix market: missing value");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError("matrix market: index out of range");
    a(i - 1, j - 1) = parse_value(token, "matrix market");
  }
  return a;
}

}  // namespace

std::string format_value(double value, const WriteOptions& opts) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), opts.exact ? "%.17g" : "%.6g", value);
  return buf;
}

RealMatrix read_matrix(std::istream& in, MatrixFormat format) {
  return format == MatrixFormat::Csv ? read_csv(in) : read_matrix_market(in);
}

RealMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in, format);
}

void write_matrix(std::ostream& out, const RealMatrix& a, MatrixFormat format,
                  const WriteOptions& opts) {
  if (format == MatrixFormat::Csv) {
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (j > 0) out << ',';
        out << format_value(a(i, j), opts);
      }
      out << '\n';
    }
    return;
  }
  out << "%%MatrixMarket matrix array real general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out << format_value(a(i, j), opts) << '\n';
}

void write_vector(std::ostream& out, const RealVector& v, MatrixFormat format,
                  const WriteOptions& opts) {
  write_matrix(out, v, format, opts);
}

void write_complex_vector(std::ostream& out, const ComplexVector& v,
                          MatrixFormat format, const WriteOptions& opts) {
  if (format == MatrixFormat::Csv) {
    for (Index i = 0; i < v.size(); ++i)
      out << format_value(v(i).real(), opts) << ','
          << format_value(v(i).imag(), opts) << '\n';
    return;
  }
  out << "%%MatrixMarket matrix array complex general\n";
  out << v.size() << " 1\n";
  for (Index i = 0; i < v.size(); ++i)
    out << format_value(v(i).real(), opts) << ' '
        << format_value(v(i).imag(), opts) << '\n';
}

std::string to_string(const RealMatrix& a, MatrixFormat format,
                      const WriteOptions& opts) {
  std::ostringstream out;
  write_matrix(out, a, format, opts);
  return out.str();
}

}  // namespace ucinv::io
