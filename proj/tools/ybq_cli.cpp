// Command-line front end: verification suite, parameter sweeps, spectrum and
// Berry-phase computations, matrix exports (CSV/JSON).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybq/basis.hpp"
#include "ybq/checks.hpp"
#include "ybq/dynamics.hpp"
#include "ybq/geometric.hpp"
#include "ybq/tensor.hpp"
#include "ybq/yang_baxter.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ybq::Error("cannot open output file: " + path);
  out << content;
}

ordered_json matrix_json(const ybq::ComplexMatrix& m) {
  ordered_json entries = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::string matrix_csv(const ybq::ComplexMatrix& m) {
  std::string out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) out += ',';
    out += "c" + std::to_string(j) + "_re,c" + std::to_string(j) + "_im";
  }
  out += '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += fmt(m(i, j).real()) + ',' + fmt(m(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

struct CommonOpts {
  double theta = 0.0, phi1 = 0.0, phi2 = 0.0;
  double omega1 = 1.0, omega2 = 2.0, hbar = 1.0, t = 0.0;
  int subsystem = 1, steps = 2048;
  std::string band = "+";
  std::string out, format = "json", order = "paper";
};

int run_verify(const ybq::VerifyOptions& opt, const std::string& out_path) {
  const auto records = ybq::run_verification(opt);
  ordered_json checks = ordered_json::array();
  int failures = 0;
  for (const auto& r : records) {
    if (!r.informational && !r.pass) ++failures;
    checks.push_back({{"name", r.name},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"informational", r.informational},
                      {"paper_anchor", r.anchor}});
  }
  ordered_json report = {{"seed", opt.seed},
                         {"trials", opt.trials},
                         {"checks_run", records.size()},
                         {"failures", failures},
                         {"passed", failures == 0},
                         {"checks", checks}};
  write_output(out_path, report.dump(2) + "\n");
  return failures == 0 ? 0 : 1;
}

int run_rmatrix(const CommonOpts& o) {
  ybq::ComplexMatrix r = ybq::build_R({o.theta, o.phi1, o.phi2});
  if (o.order == "paper") r = ybq::to_paper_order(r);
  if (o.format == "csv") {
    write_output(o.out, matrix_csv(r));
  } else {
    ordered_json doc = {{"theta", o.theta}, {"phi1", o.phi1},
                        {"phi2", o.phi2},   {"order", o.order},
                        {"matrix", matrix_json(r)}};
    write_output(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

int run_negativity_sweep(const CommonOpts& o, double theta_min,
                         double theta_max) {
  if (o.steps < 2) throw ybq::Error("negativity-sweep: steps must be >= 2");
  ordered_json rows_json = ordered_json::array();
  std::string csv = "theta,negativity_closed,negativity_numeric,abs_diff\n";
  for (int i = 0; i < o.steps; ++i) {
    const double theta =
        theta_min + (theta_max - theta_min) * i / (o.steps - 1);
    const double closed = ybq::negativity_closed(theta);
    const double numeric =
        ybq::negativity(ybq::act_on_basis({theta, o.phi1, o.phi2}, 1, 1));
    const double diff = std::abs(closed - numeric);
    csv += fmt(theta) + ',' + fmt(closed) + ',' + fmt(numeric) + ',' +
           fmt(diff) + '\n';
    rows_json.push_back({{"theta", theta},
                         {"negativity_closed", closed},
                         {"negativity_numeric", numeric},
                         {"abs_diff", diff}});
  }
  if (o.format == "json")
    write_output(o.out, ordered_json{{"rows", rows_json}}.dump(2) + "\n");
  else
    write_output(o.out, csv);
  return 0;
}

int run_spectrum(const CommonOpts& o, bool all_subsystems) {
  const ybq::HamiltonianSpec spec{o.theta, o.omega1, o.omega2, o.hbar};
  const ybq::ComplexMatrix h = ybq::build_H(spec, o.t);
  ordered_json subsystems = ordered_json::array();
  std::string csv = "subsystem,level,closed,numeric,abs_diff\n";
  for (int k = 1; k <= 3; ++k) {
    if (!all_subsystems && k != o.subsystem) continue;
    const ybq::SubsystemBlock blk = ybq::subsystem_block(h, k);
    const ybq::EigenSystem es =
        ybq::eig_hermitian(ybq::ComplexMatrix(blk.h));
    auto closed = ybq::closed_form_spectrum(spec, k);
    std::sort(closed.begin(), closed.end());
    ordered_json closed_json = ordered_json::array(),
                 numeric_json = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
      closed_json.push_back(closed[i]);
      numeric_json.push_back(es.values[i]);
      csv += std::to_string(k) + ',' + std::to_string(i) + ',' +
             fmt(closed[i]) + ',' + fmt(es.values[i]) + ',' +
             fmt(std::abs(closed[i] - es.values[i])) + '\n';
    }
    subsystems.push_back({{"subsystem", k},
                          {"closed", closed_json},
                          {"numeric", numeric_json}});
  }
  if (o.format == "csv") {
    write_output(o.out, csv);
  } else {
    ordered_json doc = {{"theta", o.theta},   {"omega1", o.omega1},
                        {"omega2", o.omega2}, {"hbar", o.hbar},
                        {"t", o.t},           {"subsystems", subsystems}};
    write_output(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

int run_berry(const CommonOpts& o) {
  const ybq::LoopSpec loop{{o.theta, o.omega1, o.omega2, o.hbar}, o.subsystem,
                           ybq::parse_band(o.band), o.steps};
  const ybq::BerryResult r = ybq::berry_numeric(loop);
  ordered_json doc = {{"subsystem", r.subsystem},
                      {"band", ybq::band_name(r.band)},
                      {"theta", o.theta},
                      {"omega1", o.omega1},
                      {"omega2", o.omega2},
                      {"steps", r.steps},
                      {"numeric_phase", r.numeric_phase},
                      {"analytic_phase", r.analytic_phase},
                      {"richardson_estimate", r.richardson_estimate}};
  if (o.format == "csv") {
    std::string csv =
        "subsystem,band,theta,omega1,omega2,steps,numeric_phase,analytic_"
        "phase,richardson_estimate\n";
    csv += std::to_string(r.subsystem) + ',' + ybq::band_name(r.band) + ',' +
           fmt(o.theta) + ',' + fmt(o.omega1) + ',' + fmt(o.omega2) + ',' +
           std::to_string(r.steps) + ',' + fmt(r.numeric_phase) + ',' +
           fmt(r.analytic_phase) + ',' + fmt(r.richardson_estimate) + '\n';
    write_output(o.out, csv);
  } else {
    write_output(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

int run_blocks(const CommonOpts& o) {
  const ybq::HamiltonianSpec spec{o.theta, o.omega1, o.omega2, o.hbar};
  ybq::ComplexMatrix h = ybq::build_H(spec, o.t);
  const ybq::ComplexMatrix ht = ybq::block_diagonalize(h);
  ordered_json subsystems = ordered_json::array();
  for (int k = 1; k <= 3; ++k) {
    const ybq::SubsystemBlock blk = ybq::subsystem_block(h, k);
    subsystems.push_back(
        {{"subsystem", k},
         {"basis", {blk.basis[0], blk.basis[1], blk.basis[2]}},
         {"h", matrix_json(blk.h)},
         {"off_block_norm", blk.off_block_norm}});
  }
  if (o.order == "paper") h = ybq::to_paper_order(h);
  if (o.format == "csv") {
    std::string csv = "matrix,row,col,re,im\n";
    const auto append = [&](const std::string& name,
                            const ybq::ComplexMatrix& m) {
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          csv += name + ',' + std::to_string(i) + ',' + std::to_string(j) +
                 ',' + fmt(m(i, j).real()) + ',' + fmt(m(i, j).imag()) + '\n';
    };
    append("h", h);
    for (int k = 1; k <= 3; ++k)
      append("h" + std::to_string(k),
             ybq::ComplexMatrix(
                 ybq::subsystem_block(ybq::build_H(spec, o.t), k).h));
    append("block_diagonal", ht);
    write_output(o.out, csv);
  } else {
    ordered_json doc = {{"theta", o.theta},
                        {"omega1", o.omega1},
                        {"omega2", o.omega2},
                        {"hbar", o.hbar},
                        {"t", o.t},
                        {"order", o.order},
                        {"h", matrix_json(h)},
                        {"subsystems", subsystems},
                        {"block_diagonal", matrix_json(ht)}};
    write_output(o.out, doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qutrit Yang-Baxter toolkit: unitary R-matrix, "
               "entanglement negativity, induced Hamiltonian, Berry phases"};
  app.require_subcommand(1);

  CommonOpts o;
  ybq::VerifyOptions vopt;
  double theta_min = 0.0, theta_max = std::numbers::pi;

  auto* verify = app.add_subcommand("verify", "run the full check suite");
  verify->add_option("--seed", vopt.seed, "RNG seed for randomized checks");
  verify->add_option("--trials", vopt.trials,
                     "randomized-check repetitions (0 = deterministic only)");
  verify->add_option("--tol", vopt.tol, "algebraic tolerance");
  verify->add_option("--tol-berry", vopt.tol_berry,
                     "numeric-vs-analytic Berry tolerance");
  verify->add_flag("--self-test-negative", vopt.self_test_negative,
                   "sabotage the YBE grid check; the run must fail");
  verify->add_option("--out", o.out, "output path (default stdout)");

  const auto add_angles = [&](CLI::App* cmd) {
    cmd->add_option("--theta", o.theta, "spectral angle");
    cmd->add_option("--phi1", o.phi1, "first phase");
    cmd->add_option("--phi2", o.phi2, "second phase");
  };
  const auto add_drive = [&](CLI::App* cmd) {
    cmd->add_option("--theta", o.theta, "spectral angle");
    cmd->add_option("--omega1", o.omega1, "first drive frequency");
    cmd->add_option("--omega2", o.omega2, "second drive frequency");
    cmd->add_option("--hbar", o.hbar, "action scale");
  };
  const auto add_io = [&](CLI::App* cmd, bool with_order) {
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_order)
      cmd->add_option("--order", o.order, "matrix ordering: lex or paper")
          ->check(CLI::IsMember({"lex", "paper"}));
  };

  auto* rmatrix = app.add_subcommand("rmatrix", "export the 9x9 R-matrix");
  add_angles(rmatrix);
  add_io(rmatrix, true);

  auto* sweep = app.add_subcommand("negativity-sweep",
                                   "negativity over a theta grid");
  add_angles(sweep);
  sweep->add_option("--steps", o.steps, "grid points")
      ->default_val(50)
      ->check(CLI::Range(2, 1 << 24));
  sweep->add_option("--theta-min", theta_min, "grid start");
  sweep->add_option("--theta-max", theta_max, "grid end");
  add_io(sweep, false);

  auto* spectrum = app.add_subcommand(
      "spectrum", "subsystem spectra: closed form vs numeric");
  add_drive(spectrum);
  spectrum->add_option("--t", o.t, "evaluation time");
  auto* spectrum_k =
      spectrum->add_option("--subsystem", o.subsystem, "restrict to one k")
          ->check(CLI::Range(1, 3));
  add_io(spectrum, false);

  auto* berry = app.add_subcommand("berry",
                                   "adiabatic loop phase for one band");
  add_drive(berry);
  berry->add_option("--subsystem", o.subsystem, "subsystem 1..3")
      ->check(CLI::Range(1, 3));
  berry->add_option("--band", o.band, "band: +, 0 or -");
  berry->add_option("--steps", o.steps, "loop discretization (>= 16)")
      ->check(CLI::Range(16, 1 << 24));
  add_io(berry, false);

  auto* blocks = app.add_subcommand(
      "blocks", "export H(t), its subsystem blocks, and O H O^T");
  add_drive(blocks);
  blocks->add_option("--t", o.t, "evaluation time");
  add_io(blocks, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vopt, o.out);
    if (rmatrix->parsed()) return run_rmatrix(o);
    if (sweep->parsed()) return run_negativity_sweep(o, theta_min, theta_max);
    if (spectrum->parsed()) return run_spectrum(o, spectrum_k->count() == 0);
    if (berry->parsed()) return run_berry(o);
    if (blocks->parsed()) return run_blocks(o);
  } catch (const ybq::DegenerateSpectrum& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const ybq::BadLabel& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ybq::BadSubsystem& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ybq::ZeroFrequency& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
