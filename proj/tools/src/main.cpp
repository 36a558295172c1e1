// Command-line surface: analytic curves and matrices as CSV, root/extremum
// reports as JSON, seeded simulations, the acceptance suite, and the four
// reference figure data sets. Every run writes a manifest with content
// digests of its outputs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boolcov/analytic.hpp"
#include "boolcov/digest.hpp"
#include "boolcov/parallel.hpp"
#include "boolcov/quadrature.hpp"
#include "boolcov/simulator.hpp"
#include "boolcov/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct GlobalOpts {
  std::string out_dir = ".";
  std::uint64_t seed = 12345;
  bool seed_given = false;
  double tol = 0.0;
  int threads = 0;

  boolcov::AnalyticOptions analytic_options() const {
    boolcov::AnalyticOptions opt;
    if (tol > 0.0) {
      opt.tol_2d = tol;
      opt.tol_1d = std::min(opt.tol_1d, 0.01 * tol);
    }
    return opt;
  }
};

// Accumulates output files, then writes the manifest last (via a temp file
// rename, so a partial manifest is never visible).
class OutputSet {
public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

  fs::path write(const std::string& name, const std::string& content) {
    fs::create_directories(dir_);
    const fs::path path = dir_ / name;
    {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << content;
    }
    entries_.push_back({name, boolcov::fnv1a64(content)});
    std::cout << "wrote " << path.string() << "\n";
    return path;
  }

  void manifest(const std::string& command, const json& config,
                std::uint64_t seed) {
    json m;
    m["command"] = command;
    m["config"] = config;
    m["tool_version"] = BOOLCOV_VERSION;
    m["timestamp"] = iso_timestamp();
    m["master_seed"] = seed;
    json outputs = json::array();
    for (const auto& [name, digest] : entries_)
      outputs.push_back({{"file", name}, {"fnv1a64", boolcov::hex64(digest)}});
    m["outputs"] = outputs;

    fs::create_directories(dir_);
    const fs::path tmp = dir_ / ".manifest.json.tmp";
    const fs::path final = dir_ / "manifest.json";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << m.dump(2) << "\n";
    }
    fs::rename(tmp, final);
    std::cout << "wrote " << final.string() << "\n";
  }

private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::uint64_t>> entries_;
};

std::string csv_comment(const std::string& config_echo) {
  return "# boolcov " BOOLCOV_VERSION " config=" +
         boolcov::hex64(boolcov::fnv1a64(config_echo)) + "\n";
}

struct GammaGrid {
  double start = 0.0, stop = 0.0, step = 0.0;

  std::vector<double> values() const {
    if (!(start > 0.0) || !(step > 0.0) || !(stop >= start))
      throw std::runtime_error(
          "InvalidGrid: need 0 < start <= stop and step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
      const double g = start + i * step;
      if (g > stop + 1e-12 * step) break;
      out.push_back(g);
    }
    return out;
  }
};

// ---- analytic ------------------------------------------------------------

struct AnalyticCmd {
  std::string quantity = "sigma";
  int dim = 2;
  GammaGrid grid;
  double radius = 1.0;
  double window_side = 8.0;
};

void fill_default_grid(GammaGrid& grid, int dim) {
  if (grid.start == 0.0 && grid.stop == 0.0 && grid.step == 0.0)
    grid = dim == 2 ? GammaGrid{0.01, 2.0, 0.01} : GammaGrid{0.01, 1.2, 0.01};
}

void run_analytic(const GlobalOpts& g, AnalyticCmd cmd) {
  using namespace boolcov;
  fill_default_grid(cmd.grid, cmd.dim);
  const std::vector<double> gammas = cmd.grid.values();
  const AnalyticOptions opt = g.analytic_options();

  const json config = {{"quantity", cmd.quantity},
                       {"dim", cmd.dim},
                       {"grid", {cmd.grid.start, cmd.grid.stop, cmd.grid.step}},
                       {"radius", cmd.radius},
                       {"window_side", cmd.window_side}};
  const std::string echo = config.dump();

  std::string header;
  // One row of output values per gamma.
  std::vector<std::vector<double>> rows(gammas.size());
  auto tabulate = [&](auto&& eval) {
    parallel_for(static_cast<long>(gammas.size()), g.threads,
                 [&](long i) { rows[i] = eval(gammas[i]); });
  };

  if (cmd.quantity == "sigma") {
    if (cmd.dim == 2 && cmd.radius == 1.0) {
      header = "gamma,s00,s01,s02,s11,s12,s22,err_est";
      tabulate([&](double gamma) {
        const Matrix3 s = sigma_matrix_2d(gamma, opt);
        return std::vector<double>{s(0, 0), s(0, 1), s(0, 2),
                                   s(1, 1), s(1, 2), s(2, 2)};
      });
    } else {
      header = "gamma,sigma_vv,sigma_sv,sigma_ss,err_est";
      tabulate([&](double gamma) {
        const ModelParams m{gamma, GrainSpec::ball(cmd.dim, cmd.radius)};
        return std::vector<double>{sigma_vol_vol(m, opt), sigma_surf_vol(m, opt),
                                   sigma_surf_surf(m, opt)};
      });
    }
  } else if (cmd.quantity == "correlation") {
    if (cmd.dim == 2) {
      header = "gamma,cor01,cor02,cor12,err_est";
      tabulate([&](double gamma) {
        return std::vector<double>{correlation_2d(0, 1, gamma, opt),
                                   correlation_2d(0, 2, gamma, opt),
                                   correlation_2d(1, 2, gamma, opt)};
      });
    } else {
      header = "gamma,cor_sv,err_est";
      tabulate([&](double gamma) {
        const ModelParams m{gamma, GrainSpec::ball(cmd.dim, cmd.radius)};
        return std::vector<double>{correlation_surf_vol(m, opt)};
      });
    }
  } else if (cmd.quantity == "rho") {
    if (cmd.dim != 2)
      throw std::runtime_error("UnknownQuantity: rho is planar (dim 2) only");
    header = "gamma,r00,r01,r02,r11,r12,r22,err_est";
    tabulate([&](double gamma) {
      const Matrix3 r = rho_unit_disk(gamma, opt);
      return std::vector<double>{r(0, 0), r(0, 1), r(0, 2),
                                 r(1, 1), r(1, 2), r(2, 2)};
    });
  } else if (cmd.quantity == "mean-density") {
    header = "gamma";
    for (int i = 0; i <= cmd.dim; ++i) header += ",delta" + std::to_string(i);
    header += ",err_est";
    tabulate([&](double gamma) {
      const ModelParams m{gamma, GrainSpec::ball(cmd.dim, cmd.radius)};
      std::vector<double> row;
      for (int i = 0; i <= cmd.dim; ++i) row.push_back(mean_density(i, m));
      return row;
    });
  } else if (cmd.quantity == "finite-window") {
    if (cmd.dim != 2)
      throw std::runtime_error(
          "UnknownQuantity: finite-window is planar (dim 2) only");
    header = "gamma,c00,c01,c02,c11,c12,c22,err_est";
    const Window w = Window::cube(2, cmd.window_side);
    tabulate([&](double gamma) {
      const ModelParams m{gamma, GrainSpec::ball(2, cmd.radius)};
      const Matrix3 s = finite_window_covariance_2d(m, w, opt);
      return std::vector<double>{s(0, 0), s(0, 1), s(0, 2),
                                 s(1, 1), s(1, 2), s(2, 2)};
    });
  } else {
    throw std::runtime_error("UnknownQuantity: " + cmd.quantity);
  }

  std::string csv = csv_comment(echo) + header + "\n";
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    csv += fmt17(gammas[i]);
    double scale = 0.0;
    for (double v : rows[i]) {
      csv += ',';
      csv += fmt17(v);
      scale = std::max(scale, std::abs(v));
    }
    csv += ',';
    csv += fmt17(std::max(opt.tol_2d * scale, 1e-14));
    csv += '\n';
  }

  OutputSet out(fs::path(g.out_dir));
  const std::string name =
      cmd.quantity + "_d" + std::to_string(cmd.dim) + ".csv";
  out.write(name, csv);
  out.manifest("analytic", config, g.seed);
}

// ---- roots ---------------------------------------------------------------

struct RootsCmd {
  std::string curve = "sigma01";
  int dim = 2;
};

void run_roots(const GlobalOpts& g, const RootsCmd& cmd) {
  using namespace boolcov;
  const AnalyticOptions opt = g.analytic_options();

  std::function<double(double)> f;
  if (cmd.curve == "sigma01" && cmd.dim == 2)
    f = [opt](double x) { return sigma_2d(0, 1, x, opt); };
  else if (cmd.curve == "sigma02" && cmd.dim == 2)
    f = [opt](double x) { return sigma_2d(0, 2, x, opt); };
  else if (cmd.curve == "sigma12" && cmd.dim == 2)
    f = [opt](double x) { return sigma_2d(1, 2, x, opt); };
  else if (cmd.curve == "sigma-sv")
    f = [opt, d = cmd.dim](double x) {
      return sigma_surf_vol({x, GrainSpec::ball(d, 1.0)}, opt);
    };
  else
    throw std::runtime_error("UnknownQuantity: curve " + cmd.curve +
                             " (use sigma01|sigma02|sigma12|sigma-sv)");

  const double lo = 0.005, hi = 4.0;
  json zeros = json::array();
  for (const auto& [a, b] : bracket_roots(f, lo, hi, 400)) {
    const auto root = find_root(f, a, b, 1e-7);
    zeros.push_back({{"x", root.x},
                     {"bracket", {root.x - 5e-7, root.x + 5e-7}},
                     {"iterations", root.iterations}});
  }
  json extrema = json::array();
  for (const auto& e : find_extrema(f, lo, hi, 801, 1e-7))
    extrema.push_back(
        {{"x", e.x},
         {"value", e.value},
         {"kind", e.kind == Extremum::Kind::maximum ? "max" : "min"}});

  const json config = {{"curve", cmd.curve}, {"dim", cmd.dim}};
  json report = {{"curve", cmd.curve},
                 {"dim", cmd.dim},
                 {"scan", {lo, hi}},
                 {"zeros", zeros},
                 {"extrema", extrema}};

  OutputSet out{fs::path(g.out_dir)};
  out.write("roots_" + cmd.curve + "_d" + std::to_string(cmd.dim) + ".json",
            report.dump(2) + "\n");
  out.manifest("roots", config, g.seed);
}

// ---- simulate --------------------------------------------------------------

void run_simulate(const GlobalOpts& g, const std::string& config_path) {
  using namespace boolcov;
  std::ifstream in(config_path, std::ios::binary);
  if (!in)
    throw std::runtime_error("ConfigInvalid: cannot read " + config_path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  SimulationConfig cfg;
  try {
    cfg = config_from_json(buffer.str());
  } catch (const ConfigInvalid& e) {
    throw std::runtime_error(std::string("ConfigInvalid: ") + e.what());
  }
  if (g.seed_given) cfg.master_seed = g.seed;
  if (g.threads > 0) cfg.threads = g.threads;

  const SimulationRun run = run_simulation(cfg);

  std::ostringstream csv;
  csv << csv_comment(config_to_json(cfg));
  write_replicates_csv(run, csv);

  OutputSet out{fs::path(g.out_dir)};
  out.write("replicates.csv", csv.str());
  out.write("summary.json", run_summary_json(run) + "\n");
  out.manifest("simulate", json::parse(config_to_json(cfg)), cfg.master_seed);
}

// ---- verify ----------------------------------------------------------------

int run_verify(const GlobalOpts& g, const std::string& level) {
  using namespace boolcov;
  VerifyOptions opt;
  opt.full = level == "full";
  opt.seed = g.seed;
  opt.threads = g.threads;

  const auto results = run_acceptance(opt);
  for (const auto& r : results) std::cout << criterion_line(r) << "\n";
  const int failed = count_failures(results);
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << "\n";

  json criteria = json::array();
  for (const auto& r : results)
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
  json report = {{"level", level},
                 {"seed", opt.seed},
                 {"failures", failed},
                 {"criteria", criteria}};

  OutputSet out{fs::path(g.out_dir)};
  out.write("verify_report.json", report.dump(2) + "\n");
  out.manifest("verify", json{{"level", level}}, opt.seed);
  return failed;
}

// ---- figure ----------------------------------------------------------------

void run_figure(const GlobalOpts& g, int which) {
  using namespace boolcov;
  const AnalyticOptions opt = g.analytic_options();

  std::string header;
  std::vector<double> gammas;
  std::vector<std::vector<double>> rows;
  auto tabulate = [&](const GammaGrid& grid, auto&& eval) {
    gammas = grid.values();
    rows.assign(gammas.size(), {});
    parallel_for(static_cast<long>(gammas.size()), g.threads,
                 [&](long i) { rows[i] = eval(gammas[i]); });
  };

  switch (which) {
    case 1:
      header = "gamma,sv_d2,sv_d3,sv_d4,sv_d5,sv_d6";
      tabulate(GammaGrid{0.01, 1.2, 0.01}, [&](double gamma) {
        std::vector<double> row;
        for (int d = 2; d <= 6; ++d)
          row.push_back(sigma_surf_vol(ModelParams::make(d, gamma), opt));
        return row;
      });
      break;
    case 2:
      header = "gamma,cor_d2,cor_d3,cor_d4,cor_d5,cor_d6";
      tabulate(GammaGrid{0.01, 1.2, 0.01}, [&](double gamma) {
        std::vector<double> row;
        for (int d = 2; d <= 6; ++d)
          row.push_back(
              correlation_surf_vol(ModelParams::make(d, gamma), opt));
        return row;
      });
      break;
    case 3:
      header = "gamma,s00,s01,s02,s11,s12,s22";
      tabulate(GammaGrid{0.01, 2.0, 0.01}, [&](double gamma) {
        const Matrix3 s = sigma_matrix_2d(gamma, opt);
        return std::vector<double>{s(0, 0), s(0, 1), s(0, 2),
                                   s(1, 1), s(1, 2), s(2, 2)};
      });
      break;
    case 4:
      header = "gamma,cor01,cor02,cor12";
      tabulate(GammaGrid{0.01, 2.0, 0.01}, [&](double gamma) {
        return std::vector<double>{correlation_2d(0, 1, gamma, opt),
                                   correlation_2d(0, 2, gamma, opt),
                                   correlation_2d(1, 2, gamma, opt)};
      });
      break;
    default:
      throw std::runtime_error("UnknownQuantity: figure " +
                               std::to_string(which));
  }

  const json config = {{"figure", which}};
  std::string csv = csv_comment(config.dump()) + header + "\n";
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    csv += fmt17(gammas[i]);
    for (double v : rows[i]) {
      csv += ',';
      csv += fmt17(v);
    }
    csv += '\n';
  }

  OutputSet out{fs::path(g.out_dir)};
  out.write("figure" + std::to_string(which) + ".csv", csv);
  out.manifest("figure", config, g.seed);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean model covariance formulas, simulation and checks"};
  app.require_subcommand(1);
  // global flags are accepted on either side of the subcommand
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--out-dir", g.out_dir, "Directory for output files")
      ->capture_default_str();
  auto* seed_opt =
      app.add_option("--seed", g.seed, "Master seed for seeded commands")
          ->capture_default_str();
  app.add_option("--tol", g.tol,
                 "Relative quadrature tolerance override (0 = defaults)");
  app.add_option("--threads", g.threads,
                 "Worker threads (0 = BOOLCOV_THREADS, then hardware)");

  AnalyticCmd analytic;
  auto* cmd_analytic =
      app.add_subcommand("analytic", "Evaluate analytic quantities as CSV");
  cmd_analytic->add_option("--quantity", analytic.quantity,
                           "sigma|correlation|rho|mean-density|finite-window")
      ->capture_default_str();
  cmd_analytic->add_option("--dim", analytic.dim, "Dimension d >= 1")
      ->capture_default_str();
  cmd_analytic->add_option("--gamma-start", analytic.grid.start, "Grid start");
  cmd_analytic->add_option("--gamma-stop", analytic.grid.stop, "Grid stop");
  cmd_analytic->add_option("--gamma-step", analytic.grid.step, "Grid step");
  cmd_analytic->add_option("--radius", analytic.radius, "Grain radius")
      ->capture_default_str();
  cmd_analytic->add_option("--window-side", analytic.window_side,
                           "Box side for finite-window")
      ->capture_default_str();

  RootsCmd roots;
  auto* cmd_roots =
      app.add_subcommand("roots", "Zeros and extrema of a sigma curve");
  cmd_roots->add_option("--curve", roots.curve,
                        "sigma01|sigma02|sigma12|sigma-sv")
      ->capture_default_str();
  cmd_roots->add_option("--dim", roots.dim, "Dimension for sigma-sv")
      ->capture_default_str();

  std::string sim_config;
  auto* cmd_simulate =
      app.add_subcommand("simulate", "Run a seeded simulation from JSON");
  cmd_simulate->add_option("config", sim_config, "JSON config path")
      ->required();

  std::string verify_level;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the acceptance suite");
  cmd_verify->add_option("level", verify_level, "quick|full")
      ->required()
      ->check(CLI::IsMember({"quick", "full"}));

  int figure_id = 0;
  auto* cmd_figure =
      app.add_subcommand("figure", "Emit reference figure data as CSV");
  cmd_figure->add_option("id", figure_id, "Figure number 1..4")
      ->required()
      ->check(CLI::Range(1, 4));

  CLI11_PARSE(app, argc, argv);
  g.seed_given = seed_opt->count() > 0;

  try {
    if (*cmd_analytic) {
      run_analytic(g, analytic);
    } else if (*cmd_roots) {
      run_roots(g, roots);
    } else if (*cmd_simulate) {
      run_simulate(g, sim_config);
    } else if (*cmd_verify) {
      return run_verify(g, verify_level);
    } else if (*cmd_figure) {
      run_figure(g, figure_id);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
