// Command-line front end: assemble operator matrices from instance files,
// run the zero-symbol test, Crofoot conjugation, rank-one constructions,
// and the randomized verification suites.
//
// Exit codes: 0 success, 1 property failure, 2 parse/validation error,
// 3 numeric failure, 4 symbol/matrix verdict inconsistency.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "atto/atto.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInconsistent = 4;

atto::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw atto::ConfigError(path + ": cannot open");
  try {
    return atto::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw atto::ConfigError(path + ": " + e.what());
  }
}

atto::InstanceConfig load_instance(const std::string& path) {
  return atto::instance_from_json(load_json(path));
}

// All output files are written to a sibling temp file first and renamed,
// so a failing run never leaves a partial artifact behind.
void atomic_write(const std::string& path, const std::string& payload) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw atto::ConfigError(path + ": cannot open for writing");
    out << payload;
    if (!out.good()) throw atto::ConfigError(path + ": write failed");
  }
  fs::rename(tmp, target);
}

void emit(const atto::json& payload, const std::optional<std::string>& out) {
  std::string text = payload.dump(2);
  text.push_back('\n');
  if (out) atomic_write(*out, text);
  else std::cout << text;
}

std::string matrix_csv(const atto::AttoMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "row,col,re,im\n";
  for (int j = 0; j < m.entries.rows(); ++j)
    for (int k = 0; k < m.entries.cols(); ++k)
      os << j << ',' << k << ',' << m.entries(j, k).real() << ','
         << m.entries(j, k).imag() << '\n';
  return os.str();
}

atto::cplx parse_point(const std::string& text, const std::string& flag) {
  double re = 0.0, im = 0.0;
  char extra = 0;
  int n = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &extra);
  if (n == 2) return {re, im};
  n = std::sscanf(text.c_str(), "%lf%c", &re, &extra);
  if (n == 1) return {re, 0.0};
  throw atto::ConfigError(flag + ": expected \"re\" or \"re,im\", got \"" +
                          text + "\"");
}

int cmd_matrix(const std::string& config_path,
               const std::optional<std::string>& out,
               const std::optional<std::string>& csv) {
  atto::InstanceConfig cfg = load_instance(config_path);
  atto::Symbol s = atto::realize_symbol(cfg);
  atto::AttoMatrix m =
      atto::atto_matrix(cfg.alpha, cfg.beta, s, cfg.quadrature());
  emit(atto::to_json(m), out);
  if (csv) atomic_write(*csv, matrix_csv(m));
  return kExitOk;
}

int cmd_check_zero(const std::string& config_path,
                   const std::optional<std::string>& out,
                   std::optional<double> tol) {
  atto::InstanceConfig cfg = load_instance(config_path);
  double tolerance = tol.value_or(cfg.tol_matrix);
  atto::Symbol s = atto::realize_symbol(cfg);
  atto::ModelSpaceBasis ab(cfg.alpha), bb(cfg.beta);
  atto::ZeroTestResult res =
      atto::is_zero_symbol(ab, bb, s, tolerance, cfg.quadrature());
  double norm = atto::atto_matrix(ab, bb, s, cfg.quadrature()).operator_norm();
  bool matrix_zero = norm < tolerance;
  atto::json payload{{"is_zero", res.is_zero},
                     {"c", res.is_zero ? atto::to_json(res.c) : atto::json()},
                     {"pair_residual", res.residual},
                     {"matrix_norm", norm}};
  emit(payload, out);
  if (res.is_zero != matrix_zero) {
    std::cerr << "check-zero: symbol-level verdict " << std::boolalpha
              << res.is_zero << " disagrees with matrix norm " << norm << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_crofoot(const std::string& config_path, const std::string& a_text,
                const std::string& b_text,
                const std::optional<std::string>& out,
                std::optional<double> tol) {
  atto::InstanceConfig cfg = load_instance(config_path);
  double tolerance = tol.value_or(cfg.tol_matrix);
  atto::DiskPoint a(parse_point(a_text, "--a"));
  atto::DiskPoint b(parse_point(b_text, "--b"));
  atto::Symbol s = atto::realize_symbol(cfg);

  atto::CrofootOperator ja =
      atto::crofoot_operator(cfg.alpha, a, cfg.quadrature());
  atto::CrofootOperator jb =
      atto::crofoot_operator(cfg.beta, b, cfg.quadrature());
  atto::AttoMatrix m = atto::atto_matrix(ja.source, jb.source, s,
                                         cfg.quadrature());
  atto::Symbol transported =
      atto::transport_symbol(cfg.alpha, cfg.beta, a, b, s);
  atto::AttoMatrix mt = atto::atto_matrix(ja.target, jb.target, transported,
                                          cfg.quadrature());
  Eigen::MatrixXcd conjugated = jb.matrix * m.entries * ja.matrix.adjoint();
  double residual = (conjugated - mt.entries).cwiseAbs().maxCoeff();

  atto::json payload{
      {"a", atto::to_json(a.value())},
      {"b", atto::to_json(b.value())},
      {"alpha_a", atto::to_json(ja.target.alpha())},
      {"beta_b", atto::to_json(jb.target.alpha())},
      {"alpha_a_at_0", atto::to_json(ja.target.alpha()(atto::cplx(0.0)))},
      {"beta_b_at_0", atto::to_json(jb.target.alpha()(atto::cplx(0.0)))},
      {"transported_symbol", atto::to_json(transported)},
      {"matrix_original", atto::to_json(m)},
      {"matrix_transported", atto::to_json(mt)},
      {"residual", residual},
      {"tolerance", tolerance}};
  emit(payload, out);
  if (residual >= tolerance) {
    std::cerr << "crofoot: conjugation residual " << residual
              << " exceeds tolerance " << tolerance << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_rank_one(const std::string& config_path,
                 const std::optional<std::string>& out,
                 std::optional<double> tol) {
  atto::InstanceConfig cfg = load_instance(config_path);
  atto::ModelSpaceBasis ab(cfg.alpha), bb(cfg.beta);
  atto::Symbol s;
  atto::AttoMatrix m{cfg.alpha, cfg.beta, {}};
  atto::AttoMatrix op{cfg.alpha, cfg.beta, {}};
  std::string kind;
  double tolerance = cfg.tol_matrix;
  using Kind = atto::SymbolSpec::Kind;
  switch (cfg.symbol.kind) {
    case Kind::rank_one_a: {
      kind = "rank_one_a";
      atto::DiskPoint w(cfg.symbol.point);
      std::tie(s, m) =
          atto::rank_one_interior_a(cfg.alpha, cfg.beta, w, cfg.quadrature());
      op = atto::outer_product(atto::conjugate_kernel(bb, w), atto::kernel(ab, w));
      tolerance = tol.value_or(cfg.tol_matrix);
      break;
    }
    case Kind::rank_one_b: {
      kind = "rank_one_b";
      atto::DiskPoint w(cfg.symbol.point);
      std::tie(s, m) =
          atto::rank_one_interior_b(cfg.alpha, cfg.beta, w, cfg.quadrature());
      op = atto::outer_product(atto::kernel(bb, w), atto::conjugate_kernel(ab, w));
      tolerance = tol.value_or(cfg.tol_matrix);
      break;
    }
    case Kind::rank_one_boundary: {
      kind = "rank_one_boundary";
      atto::BoundaryPoint eta(cfg.symbol.point);
      std::tie(s, m) =
          atto::rank_one_boundary(cfg.alpha, cfg.beta, eta, cfg.quadrature());
      op = atto::outer_product(atto::kernel(bb, eta), atto::kernel(ab, eta));
      tolerance = tol.value_or(std::max(cfg.tol_matrix, 1e-8));
      break;
    }
    default:
      throw atto::ConfigError(
          "symbol.builder: rank-one expects rank_one_a, rank_one_b, or "
          "rank_one_boundary");
  }
  double residual = (m.entries - op.entries).cwiseAbs().maxCoeff();
  atto::json payload{{"kind", kind},
                     {"symbol", atto::to_json(s)},
                     {"matrix", atto::to_json(m)},
                     {"outer_product", atto::to_json(op)},
                     {"residual", residual},
                     {"tolerance", tolerance}};
  emit(payload, out);
  if (residual >= tolerance) {
    std::cerr << "rank-one: outer-product residual " << residual
              << " exceeds tolerance " << tolerance << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, int trials,
               const std::optional<std::string>& report_path) {
  auto start = std::chrono::steady_clock::now();
  atto::verify::Report report = atto::verify::run_all(seed, trials);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  atto::json props = atto::json::array();
  for (const auto& p : report.properties) {
    props.push_back(atto::json{{"name", p.name},
                               {"trials", p.trials},
                               {"max_residual", p.max_residual},
                               {"tolerance", p.tolerance},
                               {"pass", p.pass}});
    std::printf("%-28s trials %4d  max residual %10.3e  tol %8.1e  %s\n",
                p.name.c_str(), p.trials, p.max_residual, p.tolerance,
                p.pass ? "pass" : "FAIL");
  }
  atto::json payload{{"properties", props},
                     {"metadata", atto::json{{"seed", seed},
                                             {"trials", trials},
                                             {"elapsed_seconds", elapsed}}}};
  if (report_path) atomic_write(*report_path, payload.dump(2) + "\n");
  if (!report.all_pass()) {
    std::cerr << "verify: at least one property failed\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model spaces of finite Blaschke products and truncated "
               "Toeplitz operators as concrete matrices"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_path, csv_path, report_path;
  std::optional<double> tol;
  std::string a_text = "0", b_text = "0";
  std::uint64_t seed = 1;
  int trials = 100;

  CLI::App* matrix = app.add_subcommand("matrix", "Assemble the operator matrix");
  matrix->add_option("--config", config_path, "Instance file (JSON)")->required();
  matrix->add_option("--out", out_path, "Write matrix JSON here");
  matrix->add_option("--csv", csv_path, "Also write entries as CSV");

  CLI::App* zero = app.add_subcommand("check-zero", "Zero-symbol test");
  zero->add_option("--config", config_path, "Instance file (JSON)")->required();
  zero->add_option("--out", out_path, "Write verdict JSON here");
  zero->add_option("--tol", tol, "Override matrix tolerance");

  CLI::App* crofoot = app.add_subcommand("crofoot", "Crofoot conjugation");
  crofoot->add_option("--config", config_path, "Instance file (JSON)")->required();
  crofoot->add_option("--a", a_text, "Interior point for K_alpha (re,im)");
  crofoot->add_option("--b", b_text, "Interior point for K_beta (re,im)");
  crofoot->add_option("--out", out_path, "Write conjugation JSON here");
  crofoot->add_option("--tol", tol, "Override residual tolerance");

  CLI::App* rank = app.add_subcommand("rank-one", "Rank-one constructions");
  rank->add_option("--config", config_path, "Instance file (JSON)")->required();
  rank->add_option("--out", out_path, "Write construction JSON here");
  rank->add_option("--tol", tol, "Override residual tolerance");

  CLI::App* verify = app.add_subcommand("verify", "Randomized property suites");
  verify->add_option("--seed", seed, "Deterministic seed");
  verify->add_option("--trials", trials, "Trials per property")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--report", report_path, "Write report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(config_path, out_path, csv_path);
    if (zero->parsed()) return cmd_check_zero(config_path, out_path, tol);
    if (crofoot->parsed())
      return cmd_crofoot(config_path, a_text, b_text, out_path, tol);
    if (rank->parsed()) return cmd_rank_one(config_path, out_path, tol);
    if (verify->parsed()) return cmd_verify(seed, trials, report_path);
  } catch (const atto::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const atto::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const atto::Error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitParse;
}
