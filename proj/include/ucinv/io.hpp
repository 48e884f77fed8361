#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ucinv/types.hpp"

namespace ucinv::io {

enum class MatrixFormat { Csv, MatrixMarket };

/// Output formatting. The default prints 6 significant digits; `exact`
/// switches to round-trip-precise decimal (17 significant digits).
struct WriteOptions {
  bool exact = false;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string format_value(double value, const WriteOptions& opts);

/// Reads a dense real matrix. CSV: comma-separated rows, one matrix row per
/// line, no header. Matrix Market: `array` or `coordinate` `real general`
/// headers, densified on read.
RealMatrix read_matrix(std::istream& in, MatrixFormat format);
RealMatrix read_matrix_file(const std::string& path, MatrixFormat format);

void write_matrix(std::ostream& out, const RealMatrix& a, MatrixFormat format,
                  const WriteOptions& opts = {});

/// A real vector is written as a single-column matrix.
void write_vector(std::ostream& out, const RealVector& v, MatrixFormat format,
                  const WriteOptions& opts = {});

/// Complex values: CSV rows are `re,im` pairs; Matrix Market uses the
/// `complex` field of the array format.
void write_complex_vector(std::ostream& out, const ComplexVector& v,
                          MatrixFormat format, const WriteOptions& opts = {});

std::string to_string(const RealMatrix& a, MatrixFormat format,
                      const WriteOptions& opts = {});

}  // namespace ucinv::io
