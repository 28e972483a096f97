// Command-line front end: spectra, counting reports, FEM solves, the
// aperture and rectangle sweeps, and the full verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 solver
// error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "trieig/trieig.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

void emit_table(const trieig::Table& table, const std::string& path) {
  if (path.empty() || path == "-") {
    trieig::write_csv(std::cout, table);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  trieig::write_csv(out, table);
}

void emit_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

trieig::SymmetryClass parse_class(const std::string& name) {
  if (name == "all") return trieig::SymmetryClass::all;
  if (name == "symmetric") return trieig::SymmetryClass::symmetric;
  if (name == "antisymmetric") return trieig::SymmetryClass::antisymmetric;
  throw CLI::ValidationError("--class", "expected all|symmetric|antisymmetric");
}

trieig::TriangleDomain parse_triangle(const std::string& name, double apex_x,
                                      double apex_y) {
  if (name.empty()) return trieig::triangle(apex_x, apex_y);
  if (name == "E") return trieig::equilateral_triangle();
  if (name == "F+") return trieig::right_triangle_plus();
  if (name == "F-") return trieig::right_triangle_minus();
  if (name == "G") return trieig::endpoint_triangle();
  throw CLI::ValidationError("--named", "expected E|F+|F-|G");
}

const char* kPalette[] = {"#1f6fb2", "#d1495b", "#3a7d44", "#8654a1",
                         "#c87e1e", "#4a4a4a"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann eigenvalues of triangles and rectangles: exact spectra, "
               "counting bounds, finite-element solves and the eigenvalue-sum "
               "verification battery"};
  app.require_subcommand(1);

  // ---- spectrum ----
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "closed-form spectrum of an equilateral triangle or rectangle");
  std::string sp_domain = "equilateral", sp_class = "all", sp_out;
  int sp_count = 20;
  double sp_side = 1.0, sp_width = 1.0, sp_height = 1.0;
  cmd_spectrum->add_option("--domain", sp_domain, "equilateral|rectangle")
      ->check(CLI::IsMember({"equilateral", "rectangle"}));
  cmd_spectrum->add_option("--count", sp_count, "number of eigenvalues");
  cmd_spectrum->add_option("--side", sp_side, "equilateral side length");
  cmd_spectrum->add_option("--class", sp_class, "all|symmetric|antisymmetric");
  cmd_spectrum->add_option("--width", sp_width, "rectangle width");
  cmd_spectrum->add_option("--height", sp_height, "rectangle height");
  cmd_spectrum->add_option("--out-csv", sp_out, "output file (default stdout)");

  // ---- count ----
  auto* cmd_count = app.add_subcommand(
      "count", "eigenvalue counting function with its two-sided bounds");
  std::string ct_class = "all", ct_out;
  double ct_lo = 48.0 * std::numbers::pi * std::numbers::pi + 1.0, ct_hi = 1e6;
  int ct_samples = 25;
  bool ct_by_index = false;
  long long ct_jmin = 26, ct_jmax = 200;
  cmd_count->add_option("--mu-min", ct_lo, "smallest threshold");
  cmd_count->add_option("--mu-max", ct_hi, "largest threshold");
  cmd_count->add_option("--samples", ct_samples, "log-spaced sample count");
  cmd_count->add_option("--class", ct_class, "all|symmetric");
  cmd_count->add_flag("--by-index", ct_by_index,
                      "emit per-index eigenvalue bounds instead");
  cmd_count->add_option("--jmin", ct_jmin, "first index (with --by-index)");
  cmd_count->add_option("--jmax", ct_jmax, "last index (with --by-index)");
  cmd_count->add_option("--out-csv", ct_out, "output file (default stdout)");

  // ---- ratios ----
  auto* cmd_ratios = app.add_subcommand(
      "ratios", "symmetric/full eigenvalue-sum ratios of the unit equilateral");
  int rt_jmax = 200;
  std::string rt_out;
  cmd_ratios->add_option("--jmax", rt_jmax, "largest index");
  cmd_ratios->add_option("--out-csv", rt_out, "output file (default stdout)");

  // ---- solve ----
  auto* cmd_solve = app.add_subcommand(
      "solve", "finite-element Neumann spectrum of a triangle");
  std::string sv_named, sv_out, sv_vectors, sv_mesh, sv_convergence;
  double sv_ax = 0.0, sv_ay = 2.14;
  int sv_count = 10;
  std::vector<int> sv_levels = {4, 5, 6};
  std::uint64_t sv_seed = trieig::SolveOptions{}.seed;
  cmd_solve->add_option("--named", sv_named, "special triangle E|F+|F-|G");
  cmd_solve->add_option("--apex-x", sv_ax, "apex x of T(a,b)");
  cmd_solve->add_option("--apex-y", sv_ay, "apex height b of T(a,b)");
  cmd_solve->add_option("--count", sv_count, "number of eigenvalues");
  cmd_solve->add_option("--levels", sv_levels, "refinement levels")->delimiter(',');
  cmd_solve->add_option("--seed", sv_seed, "solver seed");
  cmd_solve->add_option("--out-csv", sv_out, "output file (default stdout)");
  cmd_solve->add_option("--out-vectors", sv_vectors,
                        "dump finest-level eigenvectors as CSV");
  cmd_solve->add_option("--out-mesh", sv_mesh, "dump the finest mesh (OFF)");
  cmd_solve->add_option("--out-convergence", sv_convergence,
                        "per-level convergence table as CSV");

  // ---- sweep-aperture ----
  auto* cmd_sa = app.add_subcommand(
      "sweep-aperture", "diameter-normalized eigenvalues along the isosceles family");
  double sa_lo = std::numbers::pi / 7.0, sa_hi = 2.1;
  int sa_samples = 64, sa_count = 6, sa_threads = 0;
  std::vector<int> sa_levels = {4, 5, 6};
  std::uint64_t sa_seed = trieig::SolveOptions{}.seed;
  std::string sa_csv, sa_svg;
  cmd_sa->add_option("--lo", sa_lo, "smallest aperture");
  cmd_sa->add_option("--hi", sa_hi, "largest aperture");
  cmd_sa->add_option("--samples", sa_samples, "sample count");
  cmd_sa->add_option("--count", sa_count, "largest eigenvalue index");
  cmd_sa->add_option("--levels", sa_levels, "refinement levels")->delimiter(',');
  cmd_sa->add_option("--threads", sa_threads, "worker threads (0 = auto)");
  cmd_sa->add_option("--seed", sa_seed, "solver seed");
  cmd_sa->add_option("--out-csv", sa_csv, "CSV output (default stdout)");
  cmd_sa->add_option("--out-svg", sa_svg, "SVG chart output");

  // ---- sweep-rectangle ----
  auto* cmd_sr = app.add_subcommand(
      "sweep-rectangle", "exact eigenvalue sums along the rectangle family");
  double sr_lo = 1.0, sr_hi = 3.0;
  int sr_samples = 400, sr_nmax = 12, sr_threads = 0;
  std::string sr_csv, sr_svg;
  cmd_sr->add_option("--lo", sr_lo, "smallest aspect ratio (>= 1)");
  cmd_sr->add_option("--hi", sr_hi, "largest aspect ratio");
  cmd_sr->add_option("--samples", sr_samples, "sample count");
  cmd_sr->add_option("--nmax", sr_nmax, "largest sum index");
  cmd_sr->add_option("--threads", sr_threads, "worker threads (0 = auto)");
  cmd_sr->add_option("--out-csv", sr_csv, "CSV output (default stdout)");
  cmd_sr->add_option("--out-svg", sr_svg, "SVG chart output");

  // ---- minimize-mu4 ----
  auto* cmd_min = app.add_subcommand(
      "minimize-mu4", "minimize mu_4 D^2 over subequilateral apertures");
  double mn_lo = 0.45, mn_hi = 0.65, mn_tol = 1e-4;
  std::vector<int> mn_levels = {4, 5, 6};
  cmd_min->add_option("--lo", mn_lo, "bracket start");
  cmd_min->add_option("--hi", mn_hi, "bracket end");
  cmd_min->add_option("--tol", mn_tol, "aperture tolerance");
  cmd_min->add_option("--levels", mn_levels, "refinement levels")->delimiter(',');

  // ---- verify-all ----
  auto* cmd_verify = app.add_subcommand(
      "verify-all", "run the full verification battery");
  std::string vf_config, vf_out;
  cmd_verify->add_option("--config", vf_config, "flat key = value config file");
  cmd_verify->add_option("--out-csv", vf_out, "write the report as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_spectrum) {
      trieig::Spectrum s;
      if (sp_domain == "equilateral")
        s = trieig::equilateral_spectrum(sp_count, sp_side, parse_class(sp_class));
      else
        s = trieig::rectangle_spectrum(sp_width, sp_height, sp_count);
      trieig::Table table;
      table.header = {"j", "m", "n", "multiple", "value"};
      const double unit = sp_domain == "equilateral"
                              ? trieig::kEquilateralUnit / (sp_side * sp_side)
                              : std::numbers::pi * std::numbers::pi;
      for (int j = 1; j <= s.size(); ++j) {
        const auto& label = s.labels[static_cast<std::size_t>(j - 1)];
        table.add_row({trieig::format_number(j), trieig::format_number(label[0]),
                       trieig::format_number(label[1]),
                       trieig::format_number(s.value(j) / unit),
                       trieig::format_number(s.value(j))});
      }
      emit_table(table, sp_out);
    } else if (*cmd_count) {
      const auto cls = parse_class(ct_class);
      trieig::Table table;
      if (ct_by_index) {
        table.header = {"j", "lower", "exact", "upper"};
        const auto lattice = trieig::equilateral_lattice(
            static_cast<int>(ct_jmax), cls);
        for (long long j = ct_jmin; j <= ct_jmax; ++j) {
          const auto b = trieig::invert_bounds(j, cls);
          const double exact = trieig::kEquilateralUnit *
                               static_cast<double>(lattice[static_cast<std::size_t>(j - 1)].k);
          table.add_row({trieig::format_number(j), trieig::format_number(b.lower),
                         trieig::format_number(exact),
                         b.upper ? trieig::format_number(*b.upper) : ""});
        }
      } else {
        table.header = {"mu", "exact", "lower", "upper"};
        for (int i = 0; i < ct_samples; ++i) {
          const double mu =
              ct_lo * std::pow(ct_hi / ct_lo,
                               ct_samples == 1 ? 0.0 : static_cast<double>(i) / (ct_samples - 1));
          const auto b = trieig::counting_bounds(mu, cls);
          table.add_row({trieig::format_number(mu),
                         trieig::format_number(trieig::counting_function(mu, cls)),
                         b.lower ? trieig::format_number(*b.lower) : "",
                         trieig::format_number(b.upper)});
        }
      }
      emit_table(table, ct_out);
    } else if (*cmd_ratios) {
      trieig::Table table;
      table.header = {"j", "symmetric_sum", "full_sum", "ratio",
                      "exceeds_11_6", "at_least_8_5"};
      for (const auto& row : trieig::ratio_table(rt_jmax)) {
        table.add_row({trieig::format_number(row.j),
                       trieig::format_number(row.symmetric_sum),
                       trieig::format_number(row.full_sum),
                       trieig::format_number(row.ratio),
                       row.exceeds_11_6 ? "1" : "0", row.at_least_8_5 ? "1" : "0"});
      }
      emit_table(table, rt_out);
    } else if (*cmd_solve) {
      const auto t = parse_triangle(sv_named, sv_ax, sv_ay);
      trieig::SolveOptions opt;
      opt.seed = sv_seed;
      const double d = trieig::diameter(t);
      trieig::Table table;
      trieig::ExtrapolationReport report;
      if (sv_levels.size() >= 3) {
        const auto s = trieig::solve_extrapolated(t, sv_count, sv_levels, opt, &report);
        table.header = {"j", "value", "error", "mu_d2"};
        for (int j = 1; j <= s.size(); ++j)
          table.add_row({trieig::format_number(j), trieig::format_number(s.value(j)),
                         trieig::format_number(
                             s.error_estimates[static_cast<std::size_t>(j - 1)]),
                         trieig::format_number(s.value(j) * d * d)});
      } else {
        const int level = *std::max_element(sv_levels.begin(), sv_levels.end());
        const auto r = trieig::solve_neumann(trieig::mesh(t, level), sv_count, opt);
        table.header = {"j", "value", "mu_d2"};
        for (int j = 1; j <= r.spectrum.size(); ++j)
          table.add_row({trieig::format_number(j),
                         trieig::format_number(r.spectrum.value(j)),
                         trieig::format_number(r.spectrum.value(j) * d * d)});
      }
      emit_table(table, sv_out);

      if (!sv_convergence.empty()) {
        if (report.level_values.empty())
          throw std::runtime_error("--out-convergence needs at least 3 levels");
        trieig::Table conv;
        conv.header = {"j"};
        for (int level : report.levels)
          conv.header.push_back("level_" + std::to_string(level));
        conv.header.insert(conv.header.end(), {"extrapolated", "error", "rate"});
        for (int j = 1; j <= sv_count; ++j) {
          std::vector<std::string> cells = {trieig::format_number(j)};
          for (const auto& vals : report.level_values)
            cells.push_back(trieig::format_number(vals[static_cast<std::size_t>(j - 1)]));
          const auto& e = report.entries[static_cast<std::size_t>(j - 1)];
          cells.push_back(trieig::format_number(e.value));
          cells.push_back(trieig::format_number(e.error));
          cells.push_back(trieig::format_number(e.rate));
          conv.add_row(std::move(cells));
        }
        emit_table(conv, sv_convergence);
      }

      if (!sv_vectors.empty() || !sv_mesh.empty()) {
        const int finest = *std::max_element(sv_levels.begin(), sv_levels.end());
        const auto r = trieig::solve_neumann(trieig::mesh(t, finest), sv_count, opt);
        if (!sv_mesh.empty()) {
          std::ofstream out(sv_mesh);
          if (!out) throw std::runtime_error("cannot open " + sv_mesh);
          trieig::write_off(out, r.mesh);
        }
        if (!sv_vectors.empty()) {
          trieig::Table vec;
          vec.header = {"node", "x", "y"};
          for (int j = 1; j <= sv_count; ++j)
            vec.header.push_back("u" + std::to_string(j));
          for (int i = 0; i < r.mesh.node_count(); ++i) {
            std::vector<std::string> cells = {
                trieig::format_number(i),
                trieig::format_number(r.mesh.nodes[static_cast<std::size_t>(i)].x),
                trieig::format_number(r.mesh.nodes[static_cast<std::size_t>(i)].y)};
            for (int j = 0; j < sv_count; ++j)
              cells.push_back(trieig::format_number(r.vectors(i, j)));
            vec.add_row(std::move(cells));
          }
          emit_table(vec, sv_vectors);
        }
      }
    } else if (*cmd_sa) {
      trieig::SweepSpec spec;
      spec.family = trieig::SweepSpec::Family::aperture_isosceles;
      spec.lo = sa_lo;
      spec.hi = sa_hi;
      spec.samples = sa_samples;
      spec.eigen_count = sa_count;
      spec.levels = sa_levels;
      spec.threads = sa_threads;
      spec.solve.seed = sa_seed;
      const auto sweep = trieig::sweep_aperture(spec);

      trieig::Table table;
      table.header = {"aperture", "apex_height", "diameter2"};
      for (int j = 2; j <= sa_count; ++j)
        table.header.push_back("mu" + std::to_string(j) + "_d2");
      table.header.push_back("status");
      for (const auto& row : sweep.rows) {
        std::vector<std::string> cells = {trieig::format_number(row.aperture),
                                          trieig::format_number(row.apex_height),
                                          trieig::format_number(row.diameter2)};
        if (row.failed) {
          for (int j = 2; j <= sa_count; ++j) cells.push_back("");
          cells.push_back("failed: " + row.failure);
        } else {
          for (double v : row.mu_d2) cells.push_back(trieig::format_number(v));
          cells.push_back("ok");
        }
        table.add_row(std::move(cells));
      }
      emit_table(table, sa_csv);

      if (!sa_svg.empty()) {
        trieig::LineChart chart;
        chart.title = "diameter-normalized Neumann eigenvalues vs aperture";
        chart.x_label = "aperture";
        chart.y_label = "mu_j D^2";
        for (int j = 2; j <= sa_count; ++j) {
          trieig::Series series;
          series.label = "mu_" + std::to_string(j) + " D^2";
          series.color = kPalette[(j - 2) % 6];
          for (const auto& row : sweep.rows)
            if (!row.failed)
              series.points.push_back(
                  {row.aperture, row.mu_d2[static_cast<std::size_t>(j - 2)]});
          chart.series.push_back(std::move(series));
        }
        emit_text(chart.render(), sa_svg);
      }
    } else if (*cmd_sr) {
      trieig::SweepSpec spec;
      spec.family = trieig::SweepSpec::Family::rectangle_aspect;
      spec.lo = sr_lo;
      spec.hi = sr_hi;
      spec.samples = sr_samples;
      spec.threads = sr_threads;
      spec.n_values.clear();
      for (int n = 2; n <= sr_nmax; ++n) spec.n_values.push_back(n);
      const auto sweep = trieig::sweep_rectangle(spec);

      trieig::Table table;
      table.header = {"aspect", "diameter2"};
      for (int n : spec.n_values) table.header.push_back("M" + std::to_string(n) + "_d2");
      for (const auto& row : sweep.rows) {
        std::vector<std::string> cells = {trieig::format_number(row.aspect),
                                          trieig::format_number(row.diameter2)};
        for (double v : row.sums) cells.push_back(trieig::format_number(v));
        table.add_row(std::move(cells));
      }
      emit_table(table, sr_csv);

      std::cerr << "square beaten for n =";
      for (int n : sweep.beaten) std::cerr << " " << n;
      std::cerr << "\n";

      if (!sr_svg.empty()) {
        trieig::LineChart chart;
        chart.title = "rectangle eigenvalue sums relative to the square";
        chart.x_label = "aspect ratio";
        chart.y_label = "M_n D^2 / M_n D^2 (square)";
        for (std::size_t c = 0; c < spec.n_values.size(); ++c) {
          trieig::Series series;
          series.label = "n = " + std::to_string(spec.n_values[c]);
          series.color = kPalette[c % 6];
          const double square = sweep.rows.front().sums[c];
          for (const auto& row : sweep.rows)
            series.points.push_back({row.aspect, row.sums[c] / square});
          chart.series.push_back(std::move(series));
        }
        emit_text(chart.render(), sr_svg);
      }
    } else if (*cmd_min) {
      const auto result = trieig::minimize_mu4(mn_lo, mn_hi, mn_levels, mn_tol);
      std::cout << "aperture " << trieig::format_number(result.aperture)
                << "\nvalue " << trieig::format_number(result.value)
                << "\nevaluations " << result.evaluations << "\n";
    } else if (*cmd_verify) {
      trieig::VerifyConfig cfg;
      if (!vf_config.empty()) cfg = trieig::load_config(vf_config);
      const auto results = trieig::verify_all(cfg, &std::cout);
      if (!vf_out.empty()) {
        trieig::Table table;
        table.header = {"check", "status", "seconds", "detail"};
        for (const auto& r : results) {
          std::string detail = r.detail;
          for (char& ch : detail)
            if (ch == ',') ch = ';';
          table.add_row({r.name, r.pass ? "pass" : "fail",
                         trieig::format_number(r.seconds), detail});
        }
        emit_table(table, vf_out);
      }
      bool all = true;
      for (const auto& r : results) all = all && r.pass;
      std::cout << (all ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
      if (!all) return kExitVerifyFailure;
    }
  } catch (const trieig::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
