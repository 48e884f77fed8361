// Batch front end: read a dense real matrix from a file, run one operation,
// write the result.
//
// Exit codes: 0 success, 1 input parse error, 2 non-convergence,
// 3 invalid arguments. Errors go to stderr with an `error:` prefix.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ucinv/decomp.hpp"
#include "ucinv/inverses.hpp"
#include "ucinv/io.hpp"
#include "ucinv/matrix_core.hpp"
#include "ucinv/scaling.hpp"

namespace {

using ucinv::RealMatrix;
using ucinv::RealVector;
using ucinv::io::MatrixFormat;
using ucinv::io::WriteOptions;

struct CommonArgs {
  std::string input_path;
  std::string output_path;  // empty = stdout
  std::string format_name = "csv";
  ucinv::ToleranceConfig tol;
  bool exact = false;

  MatrixFormat format() const {
    return format_name == "mm" ? MatrixFormat::MatrixMarket
                               : MatrixFormat::Csv;
  }
  WriteOptions write_options() const { return {exact}; }
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input_path, "input matrix file")->required();
  cmd->add_option("-o,--output", args.output_path,
                  "output file (default: stdout)");
  cmd->add_option("--format", args.format_name, "file format")
      ->check(CLI::IsMember({"csv", "mm"}))
      ->capture_default_str();
  cmd->add_option("--tol", args.tol.balance_tol,
                  "balancing convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rank-tol", args.tol.rank_tol,
                  "relative singular-value cutoff (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iter", args.tol.max_iter,
                  "maximum balancing sweeps")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--exact", args.exact,
                "print round-trip-precise decimals (17 significant digits)");
}

ucinv::scaling::SizeFunction parse_size_fn(const std::string& text) {
  if (text == "gm") return ucinv::scaling::SizeFunction::geometric_mean();
  const auto parse_tail = [&](size_t start) {
    std::vector<double> vals;
    std::stringstream ss(text.substr(start));
    std::string part;
    while (std::getline(ss, part, ':')) vals.push_back(std::stod(part));
    return vals;
  };
  try {
    if (text.rfind("p:", 0) == 0) {
      const auto vals = parse_tail(2);
      if (vals.size() == 1)
        return ucinv::scaling::SizeFunction::p_norm(vals[0]);
    } else if (text.rfind("ab:", 0) == 0) {
      const auto vals = parse_tail(3);
      if (vals.size() == 2)
        return ucinv::scaling::SizeFunction::ratio(vals[0], vals[1]);
    }
  } catch (const std::exception&) {
    // fall through to the shared error below
  }
  throw CLI::ValidationError("--size-fn",
                             "expected gm, p:<p>, or ab:<a>:<b>, got '" +
                                 text + "'");
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_scaling(std::ostream& out, const ucinv::scaling::GeneralScaling<double>& gs,
                   MatrixFormat fmt, const WriteOptions& opts) {
  ucinv::io::write_vector(out, gs.dl, fmt, opts);
  out << '\n';
  ucinv::io::write_vector(out, gs.dr, fmt, opts);
  out << '\n';
  ucinv::io::write_matrix(out, gs.scaled, fmt, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-consistent generalized inverses, unit-invariant SVD, "
               "and diagonal matrix balancing"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string size_fn_spec;
  int top_k = 0;
  ucinv::Index partition_top = 0;

  auto* cmd_uinv = app.add_subcommand(
      "uinv", "unit-consistent generalized inverse");
  auto* cmd_pinv = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse");
  auto* cmd_linv = app.add_subcommand(
      "linv", "left unit-consistent generalized inverse");
  auto* cmd_rinv = app.add_subcommand(
      "rinv", "right unit-consistent generalized inverse");
  auto* cmd_dscale = app.add_subcommand(
      "dscale", "diagonal balancing; writes dl, dr, and the scaled matrix");
  auto* cmd_usvd = app.add_subcommand(
      "usvd", "unit-invariant singular values");
  auto* cmd_usvdecomp = app.add_subcommand(
      "usvdecomp", "unit-invariant SVD; writes D, U, s, V, E");
  auto* cmd_sieig = app.add_subcommand(
      "sieig", "scale-invariant eigenvalues (rows are re,im pairs)");
  auto* cmd_signature = app.add_subcommand(
      "signature", "top-k unit-invariant singular values");
  auto* cmd_mixedinv = app.add_subcommand(
      "mixedinv",
      "block-partitioned inverse for mixed diagonal/orthonormal consistency");

  for (auto* cmd : app.get_subcommands({}))
    add_common_options(cmd, args);

  cmd_dscale->add_option(
      "--size-fn", size_fn_spec,
      "balance with a Sinkhorn-type iteration under this size function "
      "(gm, p:<p>, or ab:<a>:<b>) instead of the log-domain default");
  cmd_signature->add_option("--k", top_k,
                            "number of values (default: all)")
      ->check(CLI::PositiveNumber);
  cmd_mixedinv
      ->add_option("--partition", partition_top,
                   "rows in the leading diagonal-consistent block")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ostringstream msg;
    const int ignored = app.exit(e, msg, msg);
    (void)ignored;
    std::cerr << "error: " << msg.str();
    return 3;
  }

  try {
    const RealMatrix a = ucinv::io::read_matrix_file(args.input_path,
                                                     args.format());
    OutputSink sink(args.output_path);
    std::ostream& out = sink.stream();
    const MatrixFormat fmt = args.format();
    const WriteOptions opts = args.write_options();
    const ucinv::ToleranceConfig& tol = args.tol;

    if (cmd_uinv->parsed()) {
      ucinv::io::write_matrix(out, ucinv::inverses::ginv(a, tol), fmt, opts);
    } else if (cmd_pinv->parsed()) {
      ucinv::io::write_matrix(out, ucinv::pinv(a, tol), fmt, opts);
    } else if (cmd_linv->parsed()) {
      ucinv::io::write_matrix(out, ucinv::inverses::linv(a, tol), fmt, opts);
    } else if (cmd_rinv->parsed()) {
      ucinv::io::write_matrix(out, ucinv::inverses::rinv(a, tol), fmt, opts);
    } else if (cmd_dscale->parsed()) {
      const auto gs = size_fn_spec.empty()
                          ? ucinv::scaling::dscale(a, tol)
                          : ucinv::scaling::sinkhorn_scale(
                                a, parse_size_fn(size_fn_spec), tol);
      write_scaling(out, gs, fmt, opts);
    } else if (cmd_usvd->parsed()) {
      ucinv::io::write_vector(out, ucinv::decomp::ui_singular_values(a, tol),
                              fmt, opts);
    } else if (cmd_usvdecomp->parsed()) {
      const auto f = ucinv::decomp::ui_svd(a, tol);
      ucinv::io::write_vector(out, f.d, fmt, opts);
      out << '\n';
      ucinv::io::write_matrix(out, f.u, fmt, opts);
      out << '\n';
      ucinv::io::write_vector(out, f.singular_values, fmt, opts);
      out << '\n';
      ucinv::io::write_matrix(out, f.v, fmt, opts);
      out << '\n';
      ucinv::io::write_vector(out, f.e, fmt, opts);
    } else if (cmd_sieig->parsed()) {
      ucinv::io::write_complex_vector(
          out, ucinv::decomp::si_eigenvalues(a, tol), fmt, opts);
    } else if (cmd_signature->parsed()) {
      const ucinv::Index k =
          top_k > 0 ? top_k : std::min(a.rows(), a.cols());
      ucinv::io::write_vector(out, ucinv::decomp::ui_signature(a, k, tol),
                              fmt, opts);
    } else if (cmd_mixedinv->parsed()) {
      if (partition_top >= a.rows())
        throw std::invalid_argument(
            "mixedinv: --partition must be smaller than the matrix dimension");
      const ucinv::inverses::BlockPartition part{partition_top,
                                                 a.rows() - partition_top};
      ucinv::io::write_matrix(
          out, ucinv::inverses::mixed_block_inverse(a, part, tol), fmt, opts);
    }
    return 0;
  } catch (const ucinv::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ucinv::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
