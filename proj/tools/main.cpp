// disklab: command-line experiments over the disk-function toolkit.
// Every subcommand writes a JSON report (config echo, seed, metrics) and,
// where a series is produced, a CSV file. Identical config + seed give
// byte-identical metric blocks; the timestamp lives outside "metrics".

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "disklab/blaschke.hpp"
#include "disklab/circle_calculus.hpp"
#include "disklab/factorization.hpp"
#include "disklab/functions.hpp"
#include "disklab/transitivity.hpp"

using json = nlohmann::ordered_json;
using namespace disklab;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSolver = 4;

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Key-value experiment file: `key = value` lines, '#' comments. Values from
// the file override command-line flags.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

struct CommonOptions {
  int grid_log2 = 12;
  bool grid_from_env = false;
  std::string output_path;
  std::string csv_path;
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOptions& c, bool needs_seed) {
  if (const char* env = std::getenv("DISKLAB_GRID")) {
    c.grid_log2 = std::atoi(env);
    c.grid_from_env = true;
  }
  cmd->add_option("--grid", c.grid_log2, "log2 of the boundary grid size");
  cmd->add_option("--output", c.output_path, "JSON report path (default: stdout)");
  cmd->add_option("--csv", c.csv_path, "CSV series path");
  cmd->add_option("--config", c.config_path,
                  "key=value experiment file; overrides flags");
  auto* seed_opt = cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&c](std::uint64_t s) {
        c.seed = s;
        c.seed_set = true;
      },
      "random seed (echoed into output)");
  if (needs_seed) seed_opt->required();
}

void apply_common_overrides(const std::map<std::string, std::string>& kv,
                            CommonOptions& c) {
  if (auto it = kv.find("grid"); it != kv.end()) {
    c.grid_log2 = std::stoi(it->second);
    c.grid_from_env = false;
  }
  if (auto it = kv.find("seed"); it != kv.end()) {
    c.seed = std::stoull(it->second);
    c.seed_set = true;
  }
  if (auto it = kv.find("output"); it != kv.end()) c.output_path = it->second;
  if (auto it = kv.find("csv"); it != kv.end()) c.csv_path = it->second;
}

json common_config_json(const CommonOptions& c) {
  json cfg;
  cfg["grid_log2"] = c.grid_log2;
  cfg["grid_from_env"] = c.grid_from_env;
  if (c.seed_set) cfg["seed"] = c.seed;
  return cfg;
}

int emit(const std::string& command, const std::string& anchor, json config,
         json metrics, const CommonOptions& c) {
  json report;
  report["version"] = kVersion;
  report["command"] = command;
  report["anchor"] = anchor;
  report["timestamp"] = timestamp_now();
  report["config"] = std::move(config);
  report["metrics"] = std::move(metrics);
  if (!c.csv_path.empty()) report["series_csv"] = c.csv_path;
  if (c.output_path.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::ofstream out(c.output_path);
    if (!out) throw std::invalid_argument("cannot write " + c.output_path);
    out << report.dump(2) << '\n';
  }
  return kExitOk;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out.precision(17);
  return out;
}

std::vector<DiskPoint> zeros_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open zero list " + path);
  return read_zero_list(in);
}

// --- target parsing for approx / spread ------------------------------------

DiskFunction parse_target(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) {
    std::istringstream ss(spec.substr(6));
    double re = 0.0, im = 0.0;
    char comma = 0;
    ss >> re;
    if (ss >> comma >> im) {
    }
    return DiskFunction::constant({re, im});
  }
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<Complex> coeffs;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.emplace_back(std::stod(item), 0.0);
    return DiskFunction::polynomial(std::move(coeffs));
  }
  if (spec == "halfz") return DiskFunction::polynomial({0.0, 0.5}, 0.5);
  throw std::invalid_argument("unknown target spec: " + spec);
}

// --- subcommand payloads -----------------------------------------------------

struct MeanValueArgs {
  CommonOptions common;
  int polys = 20;
  int points = 20;
  int max_degree = 16;
};

int run_meanvalue(MeanValueArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("polys"); it != kv.end()) a.polys = std::stoi(it->second);
    if (auto it = kv.find("points"); it != kv.end()) a.points = std::stoi(it->second);
    if (auto it = kv.find("max_degree"); it != kv.end()) a.max_degree = std::stoi(it->second);
  }
  const BoundaryGrid grid(a.common.grid_log2);
  std::mt19937_64 rng(a.common.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.0, 0.9);

  std::ostringstream csv;
  csv.precision(17);
  csv << "poly,point,deviation\n";
  double worst = 0.0;
  for (int p = 0; p < a.polys; ++p) {
    std::vector<Complex> coeffs(a.max_degree + 1);
    for (auto& cc : coeffs) cc = {coef(rng), coef(rng)};
    DiskFunction raw = DiskFunction::polynomial(coeffs);
    const double scale = raw.bound();
    for (auto& cc : coeffs) cc /= scale;
    const DiskFunction f = DiskFunction::polynomial(coeffs, 1.0);
    for (int q = 0; q < a.points; ++q) {
      const double r = radius(rng);
      const double t = angle(rng);
      const Complex at{r * std::cos(t), r * std::sin(t)};
      const double dev = mean_value_check(f, at, grid);
      worst = std::max(worst, dev);
      csv << p << ',' << q << ',' << dev << '\n';
    }
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["polys"] = a.polys;
  cfg["points"] = a.points;
  cfg["max_degree"] = a.max_degree;
  json metrics;
  metrics["max_deviation"] = worst;
  metrics["tolerance"] = 1e-9;
  metrics["pass"] = worst <= 1e-9;
  return emit("meanvalue", "mean-value supremum identity", std::move(cfg),
              std::move(metrics), a.common);
}

struct SpreadArgs {
  CommonOptions common;
  std::string zeros_path;
  double mesh_step = 0.1;
  double max_radius = 0.95;
};

int run_spread(SpreadArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("zeros"); it != kv.end()) a.zeros_path = it->second;
    if (auto it = kv.find("mesh_step"); it != kv.end()) a.mesh_step = std::stod(it->second);
    if (auto it = kv.find("max_radius"); it != kv.end()) a.max_radius = std::stod(it->second);
  }
  const BoundaryGrid grid(a.common.grid_log2);
  std::vector<DiskPoint> zeros;
  if (a.zeros_path.empty()) {
    zeros = {DiskPoint::from_complex({0.5, 0.0}),
             DiskPoint::from_complex({-0.3, 0.4})};
  } else {
    zeros = zeros_from_file(a.zeros_path);
  }
  const BlaschkeProduct b(Complex(1.0, 0.0), zeros);
  const DiskFunction f = DiskFunction::blaschke(b);
  const auto mesh = disk_mesh(a.mesh_step, a.max_radius);
  const Step1Report rep = step1_demo(f, mesh, grid);

  std::ostringstream csv;
  csv.precision(17);
  csv << "record,a_re,a_im,value,corrector_re,corrector_im\n";
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    csv << i << ',' << r.a.real() << ',' << r.a.imag() << ',' << r.value << ','
        << r.corrector.real() << ',' << r.corrector.imag() << '\n';
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["zeros"] = a.zeros_path.empty() ? "builtin" : a.zeros_path;
  cfg["mesh_step"] = a.mesh_step;
  cfg["max_radius"] = a.max_radius;
  json metrics;
  metrics["records"] = rep.records.size();
  metrics["best_value"] = rep.best;
  metrics["deficiency"] = 1.0 - rep.best;
  metrics["argmax_re"] = rep.argmax.real();
  metrics["argmax_im"] = rep.argmax.imag();
  return emit("spread", "unit spread record search", std::move(cfg),
              std::move(metrics), a.common);
}

struct FrostmanArgs {
  CommonOptions common;
  int example = 1;
  std::string zeros_path;
  int n = 1000;
  double zeta_angle = 0.0;
};

int run_frostman(FrostmanArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("example"); it != kv.end()) a.example = std::stoi(it->second);
    if (auto it = kv.find("zeros"); it != kv.end()) a.zeros_path = it->second;
    if (auto it = kv.find("n"); it != kv.end()) a.n = std::stoi(it->second);
    if (auto it = kv.find("zeta_angle"); it != kv.end()) a.zeta_angle = std::stod(it->second);
  }
  std::vector<DiskPoint> zeros;
  std::string source;
  if (!a.zeros_path.empty()) {
    zeros = zeros_from_file(a.zeros_path);
    source = a.zeros_path;
    a.n = std::min<std::size_t>(a.n, zeros.size());
  } else if (a.example == 1) {
    zeros = example1_zeros(a.n);
    source = "example1";
  } else if (a.example == 2) {
    zeros = example2_zeros(a.n);
    source = "example2";
  } else {
    throw std::invalid_argument("frostman: --example must be 1 or 2");
  }
  const Complex zeta{std::cos(a.zeta_angle), std::sin(a.zeta_angle)};
  const auto terms = frostman_terms(zeros, zeta, a.n);

  std::ostringstream csv;
  csv.precision(17);
  csv << "n,term,partial_sum\n";
  CompensatedSum sum;
  double max_scaled_dev = 0.0;
  double last_increment = 0.0;
  for (int i = 0; i < a.n; ++i) {
    sum.add(terms[i]);
    last_increment = terms[i];
    csv << (i + 1) << ',' << terms[i] << ',' << sum.value() << '\n';
    if (source == "example1") {
      const double nn = i + 1.0;
      max_scaled_dev = std::max(max_scaled_dev,
                                std::abs(terms[i] * nn * nn - 1.0));
    }
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["source"] = source;
  cfg["n"] = a.n;
  cfg["zeta_angle"] = a.zeta_angle;
  json metrics;
  metrics["partial_sum"] = sum.value();
  metrics["last_increment"] = last_increment;
  if (source == "example1") metrics["max_scaled_term_deviation"] = max_scaled_dev;
  return emit("frostman", "angular derivative series", std::move(cfg),
              std::move(metrics), a.common);
}

struct ThinArgs {
  CommonOptions common;
  std::string zeros_path;
  int n = 6;
};

int run_thin(ThinArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("zeros"); it != kv.end()) a.zeros_path = it->second;
    if (auto it = kv.find("n"); it != kv.end()) a.n = std::stoi(it->second);
  }
  std::vector<DiskPoint> zeros = a.zeros_path.empty()
                                     ? example2_zeros(a.n)
                                     : zeros_from_file(a.zeros_path);
  const auto ratios = thin_ratio_test(zeros, a.n);
  const auto seps = separation_products(zeros, a.n);

  std::ostringstream csv;
  csv.precision(17);
  csv << "n,ratio,separation\n";
  for (int i = 0; i < a.n; ++i) {
    csv << (i + 1) << ','
        << (i + 1 < a.n ? std::to_string(ratios[i]) : std::string()) << ','
        << seps[i] << '\n';
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["zeros"] = a.zeros_path.empty() ? "example2" : a.zeros_path;
  cfg["n"] = a.n;
  json metrics;
  metrics["min_separation"] = *std::min_element(seps.begin(), seps.end());
  metrics["last_separation"] = seps.back();
  if (!ratios.empty()) metrics["last_ratio"] = ratios.back();
  return emit("thin", "thin and interpolating separation", std::move(cfg),
              std::move(metrics), a.common);
}

struct AverageArgs {
  CommonOptions common;
  std::string target = "half-indicator";
};

int run_average(AverageArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("target"); it != kv.end()) a.target = it->second;
  }
  const BoundaryGrid grid(a.common.grid_log2);
  BoundaryFunction f = BoundaryFunction::half_indicator(grid);
  if (a.target.rfind("cell:", 0) == 0) {
    std::stringstream ss(a.target.substr(5));
    std::size_t k = 0;
    int level = 0;
    char colon = 0;
    ss >> k >> colon >> level;
    f = cell_restrict(BoundaryFunction::constant(grid, {1.0, 0.0}),
                      DyadicCell{k, level});
  } else if (a.target != "half-indicator") {
    std::ifstream in(a.target);
    if (!in) throw std::invalid_argument("cannot open target " + a.target);
    f = BoundaryFunction::read_csv(in);
  }
  const auto panel = default_density_panel(f.grid());
  const BoundaryFunction limit =
      BoundaryFunction::constant(f.grid(), circle_average(f));

  std::ostringstream csv;
  csv.precision(17);
  csv << "n,panel_distance,mean_drift\n";
  std::vector<double> distances;
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= f.grid().log2_size(); ++n) {
    const BoundaryFunction t = cyclic_average(f, n);
    const double d = panel_distance(t, limit, panel);
    const double drift = std::abs(circle_average(t) - circle_average(f));
    distances.push_back(d);
    if (d > prev + 1e-12) monotone = false;
    prev = d;
    csv << n << ',' << d << ',' << drift << '\n';
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["target"] = a.target;
  json metrics;
  metrics["final_distance"] = distances.back();
  metrics["distance_at_minus2"] = distances[std::max(0, f.grid().log2_size() - 2)];
  metrics["monotone_nonincreasing"] = monotone;
  return emit("average", "cyclic averaging weak-star convergence",
              std::move(cfg), std::move(metrics), a.common);
}

struct FactorArgs {
  CommonOptions common;
  std::string measure_path;
  std::string logmod = "halfcos";
  double radius = 1.0 - 1e-4;
};

int run_factor(FactorArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("measure"); it != kv.end()) a.measure_path = it->second;
    if (auto it = kv.find("logmod"); it != kv.end()) a.logmod = it->second;
    if (auto it = kv.find("radius"); it != kv.end()) a.radius = std::stod(it->second);
  }
  const BoundaryGrid grid(a.common.grid_log2);

  SingularMeasure mu = a.measure_path.empty()
                           ? SingularMeasure({{0.0, 1.0}})
                           : [&] {
                               std::ifstream in(a.measure_path);
                               if (!in) {
                                 throw std::invalid_argument(
                                     "cannot open measure " + a.measure_path);
                               }
                               return SingularMeasure::read_csv(in);
                             }();

  BoundaryFunction logmod = BoundaryFunction::constant(grid, {0.0, 0.0});
  if (a.logmod == "halfcos") {
    logmod = BoundaryFunction::sample(
        grid, [](Complex z) { return Complex(0.5 * z.real(), 0.0); });
  } else if (a.logmod == "log2plus") {
    logmod = BoundaryFunction::sample(grid, [](Complex z) {
      return Complex(std::log(std::abs(2.0 + z)), 0.0);
    });
  } else if (a.logmod.rfind("const:", 0) == 0) {
    logmod = BoundaryFunction::constant(grid, {std::stod(a.logmod.substr(6)), 0.0});
  } else {
    throw std::invalid_argument("unknown logmod preset: " + a.logmod);
  }
  const OuterFunction outer(logmod);

  // Reconstruction error of |F| against exp(logmod) at the given radius.
  double recon = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double got = std::abs(outer(a.radius * grid.node(k)));
    recon = std::max(recon, std::abs(got - std::exp(logmod[k].real())));
  }

  // Singular factor: value at 0 against exp(-mass), radial behavior opposite
  // the first atom.
  const double s0_dev = std::abs(singular_inner_eval(mu, Complex(0.0, 0.0)) -
                                 std::polar(std::exp(-mu.total_mass()), 0.0));
  std::vector<double> radii;
  for (int i = 1; i <= 6; ++i) radii.push_back(1.0 - std::pow(10.0, -i));
  const double opposite = mu.atoms().front().angle + kPi;
  const RadialLimitResult rad =
      radial_limit(singular_inner(mu), opposite, radii);

  json cfg = common_config_json(a.common);
  cfg["measure"] = a.measure_path.empty() ? "atom(0,1)" : a.measure_path;
  cfg["logmod"] = a.logmod;
  cfg["radius"] = a.radius;
  json metrics;
  metrics["outer_reconstruction_error"] = recon;
  metrics["singular_at_zero_deviation"] = s0_dev;
  metrics["singular_radial_modulus"] = std::abs(rad.estimate);
  return emit("factor", "inner-outer factorization", std::move(cfg),
              std::move(metrics), a.common);
}

struct ApproxArgs {
  CommonOptions common;
  std::string target = "const:0.5";
  int atoms = 2;
  int degree = 0;
  int starts = 10;
  int passes = 8;
};

int run_approx(ApproxArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("target"); it != kv.end()) a.target = it->second;
    if (auto it = kv.find("atoms"); it != kv.end()) a.atoms = std::stoi(it->second);
    if (auto it = kv.find("degree"); it != kv.end()) a.degree = std::stoi(it->second);
    if (auto it = kv.find("starts"); it != kv.end()) a.starts = std::stoi(it->second);
    if (auto it = kv.find("passes"); it != kv.end()) a.passes = std::stoi(it->second);
  }
  const BoundaryGrid grid(a.common.grid_log2);
  const DiskFunction target = parse_target(a.target);
  const MarshallResult r = marshall_approximate(
      target, a.atoms, a.degree, MarshallBudget{a.starts, a.passes},
      a.common.seed, grid);

  json cfg = common_config_json(a.common);
  cfg["target"] = a.target;
  cfg["atoms"] = a.atoms;
  cfg["degree"] = a.degree;
  cfg["starts"] = a.starts;
  cfg["passes"] = a.passes;
  json metrics;
  metrics["error"] = r.error;
  metrics["starts_used"] = r.starts_used;
  metrics["budget_exhausted"] = r.budget_exhausted;
  json weights = json::array();
  for (double w : r.combination.weights()) weights.push_back(w);
  metrics["weights"] = weights;
  json atoms = json::array();
  for (const auto& atom : r.combination.atoms()) {
    json aj;
    aj["lambda_re"] = atom.unimodular_factor().real();
    aj["lambda_im"] = atom.unimodular_factor().imag();
    json zs = json::array();
    for (const auto& z : atom.zeros()) {
      zs.push_back({z.value().real(), z.value().imag()});
    }
    aj["zeros"] = zs;
    atoms.push_back(aj);
  }
  metrics["atoms"] = atoms;
  return emit("approx", "convex hull of Blaschke products", std::move(cfg),
              std::move(metrics), a.common);
}

struct OrbitArgs {
  CommonOptions common;
  int rotations = 256;
};

int run_orbit(OrbitArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("rotations"); it != kv.end()) a.rotations = std::stoi(it->second);
  }
  const BoundaryGrid grid(a.common.grid_log2);
  if (a.rotations < 1 ||
      static_cast<std::size_t>(a.rotations) > grid.size() ||
      (a.rotations & (a.rotations - 1)) != 0) {
    throw std::invalid_argument(
        "orbit: rotations must be a power of two within the grid");
  }
  std::mt19937_64 rng(a.common.seed);
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<Complex> v(grid.size());
  for (auto& x : v) x = std::polar(mag(rng), ang(rng));
  const BoundaryFunction f(grid, v);

  std::vector<BoundaryFunction> samples;
  samples.reserve(a.rotations);
  const std::size_t stride = grid.size() / a.rotations;
  for (int j = 0; j < a.rotations; ++j) samples.push_back(f.rotated(j * stride));

  const auto panel = default_density_panel(grid);
  const BoundaryFunction target =
      BoundaryFunction::constant(grid, circle_average(f));
  const HullDistanceResult r = hull_distance(target, samples, panel);

  json cfg = common_config_json(a.common);
  cfg["rotations"] = a.rotations;
  json metrics;
  metrics["distance"] = r.distance;
  metrics["uniform_bound"] = r.uniform_bound;
  metrics["lp_bound"] = r.lp_bound;
  metrics["within_uniform_bound"] = r.distance <= r.uniform_bound + 1e-15;
  const int code = emit("orbit", "isometry orbit hull membership",
                        std::move(cfg), std::move(metrics), a.common);
  return r.converged ? code : kExitSolver;
}

struct NevanlinnaArgs {
  CommonOptions common;
  int degree = 8;
  std::vector<double> radii;
};

int run_nevanlinna(NevanlinnaArgs& a) {
  if (!a.common.config_path.empty()) {
    const auto kv = read_config_file(a.common.config_path);
    apply_common_overrides(kv, a.common);
    if (auto it = kv.find("degree"); it != kv.end()) a.degree = std::stoi(it->second);
  }
  if (a.radii.empty()) {
    for (int i = 1; i <= 9; ++i) a.radii.push_back(0.1 * i);
  }
  const BoundaryGrid grid(a.common.grid_log2);
  std::mt19937_64 rng(a.common.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<Complex> coeffs(a.degree + 1);
  for (auto& c : coeffs) c = {coef(rng), coef(rng)};
  const DiskFunction f = DiskFunction::polynomial(coeffs);

  std::ostringstream csv;
  csv.precision(17);
  csv << "r,characteristic\n";
  bool monotone = true;
  double prev = -std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (double r : a.radii) {
    last = nevanlinna_characteristic(f, r, grid);
    if (last < prev - 1e-10) monotone = false;
    prev = last;
    csv << r << ',' << last << '\n';
  }
  if (!a.common.csv_path.empty()) open_csv(a.common.csv_path) << csv.str();

  json cfg = common_config_json(a.common);
  cfg["degree"] = a.degree;
  cfg["radii"] = a.radii;
  json metrics;
  metrics["monotone_nondecreasing"] = monotone;
  metrics["final_characteristic"] = last;
  return emit("nevanlinna", "bounded characteristic monotonicity",
              std::move(cfg), std::move(metrics), a.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disklab: boundary function theory experiments on the unit disk"};
  app.require_subcommand(1);

  MeanValueArgs mv;
  auto* c_mv = app.add_subcommand("meanvalue", "mean-value identity sweep");
  add_common(c_mv, mv.common, true);
  c_mv->add_option("--polys", mv.polys, "number of random polynomials");
  c_mv->add_option("--points", mv.points, "number of random centers");
  c_mv->add_option("--max-degree", mv.max_degree, "polynomial degree cap");

  SpreadArgs sp;
  auto* c_sp = app.add_subcommand("spread", "unit spread record search");
  add_common(c_sp, sp.common, false);
  c_sp->add_option("--zeros", sp.zeros_path, "zero list CSV for the target");
  c_sp->add_option("--mesh-step", sp.mesh_step, "candidate lattice step");
  c_sp->add_option("--max-radius", sp.max_radius, "candidate lattice radius");

  FrostmanArgs fr;
  auto* c_fr = app.add_subcommand("frostman", "angular derivative series");
  add_common(c_fr, fr.common, false);
  c_fr->add_option("--example", fr.example, "builtin zero sequence (1 or 2)");
  c_fr->add_option("--zeros", fr.zeros_path, "zero list CSV");
  c_fr->add_option("--n", fr.n, "number of terms");
  c_fr->add_option("--zeta-angle", fr.zeta_angle, "boundary point angle");

  ThinArgs th;
  auto* c_th = app.add_subcommand("thin", "thinness and separation evidence");
  add_common(c_th, th.common, false);
  c_th->add_option("--zeros", th.zeros_path, "zero list CSV");
  c_th->add_option("--n", th.n, "number of zeros");

  AverageArgs av;
  auto* c_av = app.add_subcommand("average", "cyclic averaging convergence");
  add_common(c_av, av.common, false);
  c_av->add_option("--target", av.target,
                   "half-indicator | cell:k:n | boundary CSV path");

  FactorArgs fa;
  auto* c_fa = app.add_subcommand("factor", "singular/outer construction report");
  add_common(c_fa, fa.common, false);
  c_fa->add_option("--measure", fa.measure_path, "atomic measure CSV");
  c_fa->add_option("--logmod", fa.logmod,
                   "halfcos | log2plus | const:<value>");
  c_fa->add_option("--radius", fa.radius, "reconstruction radius");

  ApproxArgs ap;
  auto* c_ap = app.add_subcommand("approx", "convex Blaschke approximation");
  add_common(c_ap, ap.common, true);
  c_ap->add_option("--target", ap.target, "const:<re>[,<im>] | poly:<c0,c1,...> | halfz");
  c_ap->add_option("--atoms", ap.atoms, "number of atoms");
  c_ap->add_option("--degree", ap.degree, "max atom degree");
  c_ap->add_option("--starts", ap.starts, "multistart budget");
  c_ap->add_option("--passes", ap.passes, "descent passes per start");

  OrbitArgs orb;
  auto* c_orb = app.add_subcommand("orbit", "rotation orbit hull membership");
  add_common(c_orb, orb.common, true);
  c_orb->add_option("--rotations", orb.rotations, "orbit size (power of two)");

  NevanlinnaArgs nv;
  auto* c_nv = app.add_subcommand("nevanlinna", "characteristic monotonicity");
  add_common(c_nv, nv.common, true);
  c_nv->add_option("--degree", nv.degree, "random polynomial degree");
  c_nv->add_option("--radii", nv.radii, "radii list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*c_mv) return run_meanvalue(mv);
    if (*c_sp) return run_spread(sp);
    if (*c_fr) return run_frostman(fr);
    if (*c_th) return run_thin(th);
    if (*c_av) return run_average(av);
    if (*c_fa) return run_factor(fa);
    if (*c_ap) return run_approx(ap);
    if (*c_orb) return run_orbit(orb);
    if (*c_nv) return run_nevanlinna(nv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violation: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violation: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}
