#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "altexp/alt_functions.hpp"
#include "altexp/errors.hpp"
#include "altexp/interpolation.hpp"
#include "altexp/io.hpp"
#include "altexp/kernels.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/reference.hpp"
#include "altexp/transform.hpp"
#include "altexp/verify.hpp"

namespace {

using namespace altexp;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  double a = 0.0;
  double b = 0.0;
  double T = 1.0;
  std::optional<int> N;
  std::string input;
  std::string output = "-";

  std::string function = "const:1";
  bool cube = false;
  BumpParams bump;
  std::string center = "0.75,0.75,0.25";

  bool naive = false;
  std::string kind = "alt";
  std::string slice;
  int res = 101;
  std::string slice_output;

  bool c3_only = false;
  std::uint64_t seed = 42;
  int instances = 100;
  bool inject_fault = false;
  std::vector<std::string> tolerances;

  std::vector<int> table_N{7, 15};
  int quad_n = 128;
  bool long_run = false;
};

// Output goes to stdout for "-", otherwise to a file opened up front so a bad
// path fails before any work is done.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw IoError(path, "cannot open for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError(path_, "write failed");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  if (path.empty()) throw UsageError("an input file is required (-i)");
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  return in;
}

std::vector<double> split_numbers(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(what + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != count) throw UsageError(what + " needs " + std::to_string(count) + " comma-separated values");
  return out;
}

GridSpec grid_from(const Config& cfg, bool alternating) {
  if (!cfg.N) throw UsageError("--N is required");
  GridSpec grid{cfg.a, cfg.b, *cfg.N, cfg.T};
  // Alternating grids are sampled at period 1 after scaling by T.
  if (alternating) grid = {cfg.a / cfg.T, cfg.b, *cfg.N, 1.0};
  grid.validate();
  return grid;
}

void resolve_bump(Config& cfg) {
  const auto c = split_numbers(cfg.center, 3, "--center");
  cfg.bump.center = {c[0], c[1], c[2]};
  cfg.bump.validate();
}

// const:<v>, E:<k,l,m> or bump; the point is in physical units.
std::function<Complex(const Point3&)> sample_function(Config& cfg) {
  const std::string& f = cfg.function;
  if (f.rfind("const:", 0) == 0) {
    const double v = split_numbers(f.substr(6), 1, "const value")[0];
    return [v](const Point3&) { return Complex{v}; };
  }
  if (f.rfind("E:", 0) == 0) {
    const auto parts = split_numbers(f.substr(2), 3, "E label");
    const LabelTriple t{parts[0], parts[1], parts[2]};
    const double T = cfg.T;
    return [t, T](const Point3& p) { return eval_E(t, p / T); };
  }
  if (f == "bump") {
    resolve_bump(cfg);
    const BumpParams params = cfg.bump;
    const double T = cfg.T;
    return [params, T](const Point3& p) { return Complex{bump(params, p / T)}; };
  }
  throw UsageError("unknown function '" + f + "' (use const:<v>, E:<k,l,m> or bump)");
}

int cmd_grid(const Config& cfg) {
  Output out(cfg.output);
  io::write_grid_csv(out.stream(), grid_from(cfg, false));
  out.close();
  return kOk;
}

int cmd_sample(Config& cfg) {
  const auto fn = sample_function(cfg);
  Output out(cfg.output);
  if (cfg.cube) {
    io::write_cube_samples_csv(out.stream(), CubeSampleSet::from_function(grid_from(cfg, false), fn));
  } else {
    // Sample at physical points, store against the period-1 grid.
    const GridSpec physical = grid_from(cfg, false);
    SampleSet samples{grid_from(cfg, true), {}};
    for (const auto& gp : grid_points(physical)) samples.values.emplace(gp.index, fn(gp.point));
    io::write_samples_csv(out.stream(), samples);
  }
  out.close();
  return kOk;
}

SampleSet load_samples(const Config& cfg) {
  auto in = open_input(cfg.input);
  return io::read_samples_csv(in, cfg.input, GridSpec{cfg.a / cfg.T, cfg.b, 1, 1.0}, cfg.N);
}

int cmd_transform(const Config& cfg) {
  if (cfg.T != 1.0) throw UsageError("the alternating transform is defined on the unit period; omit --T");
  const auto samples = load_samples(cfg);
  Output out(cfg.output);
  io::write_coefficients_json(out.stream(), cfg.naive ? reference::adft_forward(samples) : adft_forward(samples));
  out.close();
  return kOk;
}

int cmd_inverse(const Config& cfg) {
  auto in = open_input(cfg.input);
  const auto beta = io::read_coefficients_json(in, cfg.input);
  if (beta.role != CoefficientRole::beta) throw UsageError(cfg.input + ": inverse expects role \"beta\"");
  Output out(cfg.output);
  io::write_samples_csv(out.stream(), cfg.naive ? reference::adft_inverse(beta) : adft_inverse(beta));
  out.close();
  return kOk;
}

double parse_slice_z(const std::string& spec) {
  if (spec.rfind("z=", 0) != 0) throw UsageError("--slice expects z=<value>");
  return split_numbers(spec.substr(2), 1, "--slice")[0];
}

std::vector<double> slice_axis(int res, double period) {
  if (res < 2) throw UsageError("--res must be at least 2");
  std::vector<double> out(static_cast<std::size_t>(res));
  for (int i = 0; i < res; ++i) out[static_cast<std::size_t>(i)] = period * i / (res - 1);
  return out;
}

int cmd_interpolate(const Config& cfg) {
  std::optional<double> slice_z;
  if (!cfg.slice.empty()) {
    slice_z = parse_slice_z(cfg.slice);
    if (cfg.slice_output.empty()) throw UsageError("--slice needs --slice-out <path>");
  }
  Output out(cfg.output);
  std::optional<Output> slice_out;
  if (slice_z) slice_out.emplace(cfg.slice_output);

  if (cfg.kind == "alt") {
    const auto interp = rescale_to_period(alt_interpolate_direct(load_samples(cfg)), cfg.T);
    io::write_coefficients_json(out.stream(), to_coefficient_set(interp));
    if (slice_z) {
      const auto axis = slice_axis(cfg.res, cfg.T);
      const double zs[1] = {*slice_z};
      io::write_slice_csv(slice_out->stream(), axis, axis, eval_psi_alt_tensor(interp, axis, axis, zs));
    }
  } else if (cfg.kind == "std") {
    auto in = open_input(cfg.input);
    const auto samples = io::read_cube_samples_csv(in, cfg.input, GridSpec{cfg.a, cfg.b, 1, cfg.T}, cfg.N);
    const auto interp = std_interpolate(samples);
    io::write_coefficients_json(out.stream(), to_coefficient_set(interp));
    if (slice_z) {
      const auto axis = slice_axis(cfg.res, cfg.T);
      std::vector<Complex> values;
      values.reserve(axis.size() * axis.size());
      for (const double x : axis)
        for (const double y : axis) values.push_back(eval_psi_std(interp, {x, y, *slice_z}));
      io::write_slice_csv(slice_out->stream(), axis, axis, values);
    }
  } else {
    throw UsageError("--kind must be alt or std");
  }
  out.close();
  if (slice_out) slice_out->close();
  return kOk;
}

void apply_tolerances(verify::Report& report, const std::vector<std::string>& overrides) {
  for (const auto& spec : overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value");
    const std::string name = spec.substr(0, eq);
    const double tol = split_numbers(spec.substr(eq + 1), 1, "--tol " + name)[0];
    bool found = false;
    for (auto& c : report.checks)
      if (c.name == name) {
        c.tolerance = tol;
        c.passed = c.max_residual < tol;
        found = true;
      }
    if (!found) throw UsageError("--tol: no check named '" + name + "'");
  }
}

int cmd_verify(const Config& cfg) {
  verify::Options options;
  options.seed = cfg.seed;
  options.instances = cfg.instances;
  options.inject_remap_fault = cfg.inject_fault;
  auto report = cfg.c3_only ? verify::run_c3_suite(options) : verify::run_identity_suite(options);
  apply_tolerances(report, cfg.tolerances);
  Output out(cfg.output);
  io::write_report_json(out.stream(), report, cfg.seed);
  out.close();
  for (const auto& c : report.checks)
    if (!c.passed)
      std::cerr << "FAIL " << c.name << ": residual " << io::format_double(c.max_residual) << " >= tolerance "
                << io::format_double(c.tolerance) << '\n';
  return report.all_passed() ? kOk : kVerifyFailed;
}

int cmd_error_table(Config& cfg) {
  resolve_bump(cfg);
  for (const int N : cfg.table_N) {
    if (N < 1 || N % 2 == 0) throw UsageError("error-table needs odd N, got " + std::to_string(N));
    if (N > 31 && !cfg.long_run) throw UsageError("N = " + std::to_string(N) + " runs for a long time; pass --long");
  }
  Output out(cfg.output);
  out.stream() << "N,error\n";
  for (const int N : cfg.table_N) {
    const auto row = bump_interpolation_error(N, cfg.bump, QuadratureSpec{cfg.quad_n}, cfg.a, cfg.b);
    out.stream() << row.N << ',' << io::format_double(row.error) << '\n';
    out.stream().flush();
  }
  out.close();
  return kOk;
}

void add_grid_options(CLI::App* cmd, Config& cfg, bool with_T) {
  cmd->add_option("--N", cfg.N, "Grid size N")->check(CLI::PositiveNumber);
  cmd->add_option("--a", cfg.a, "Grid origin a");
  cmd->add_option("--b", cfg.b, "Grid offset b in [0,1]");
  if (with_T) cmd->add_option("--T", cfg.T, "Period T > 0");
}

void add_bump_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--alpha", cfg.bump.alpha, "Bump inner radius");
  cmd->add_option("--beta", cfg.bump.beta, "Bump outer radius");
  cmd->add_option("--center", cfg.center, "Bump centre x,y,z");
}

int run(int argc, char** argv) {
  if (const char* env = std::getenv("ALTF_THREADS")) {
    try {
      kernels::set_thread_limit(std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "altf: ignoring ALTF_THREADS='" << env << "'\n";
    }
  }

  Config cfg;
  CLI::App app{"Alternating exponential functions of A_3: sampling, transforms, interpolation, verification"};
  app.require_subcommand(1);

  auto* grid = app.add_subcommand("grid", "Export the grid points of L_{a,b,N,T} as CSV");
  add_grid_options(grid, cfg, true);
  grid->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* sample = app.add_subcommand("sample", "Sample a built-in function on the grid");
  add_grid_options(sample, cfg, true);
  sample->add_option("--f", cfg.function, "const:<v>, E:<k,l,m> or bump");
  sample->add_flag("--cube", cfg.cube, "Sample the full N^3 cube (input of --kind std)");
  add_bump_options(sample, cfg);
  sample->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* transform = app.add_subcommand("transform", "Alternating DFT of a sample CSV");
  add_grid_options(transform, cfg, true);
  transform->add_option("-i,--input", cfg.input, "Sample CSV")->required();
  transform->add_flag("--naive", cfg.naive, "Use the serial direct-sum implementation");
  transform->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* inverse = app.add_subcommand("inverse", "Inverse transform of beta coefficients");
  inverse->add_option("-i,--input", cfg.input, "Coefficient JSON")->required();
  inverse->add_flag("--naive", cfg.naive, "Use the serial direct-sum implementation");
  inverse->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* interpolate = app.add_subcommand("interpolate", "Interpolate samples (alt: sample CSV, std: cube CSV)");
  add_grid_options(interpolate, cfg, true);
  interpolate->add_option("-i,--input", cfg.input, "Sample CSV")->required();
  interpolate->add_option("--kind", cfg.kind, "alt or std")->check(CLI::IsMember({"alt", "std"}));
  interpolate->add_option("--slice", cfg.slice, "Export a plane, e.g. z=0.25");
  interpolate->add_option("--res", cfg.res, "Slice resolution per axis");
  interpolate->add_option("--slice-out", cfg.slice_output, "Slice CSV path");
  interpolate->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check the identities; 'verify c3' runs only the C_3 group");
  std::string suite;
  verify_cmd->add_option("suite", suite, "c3 to run only the C_3 checks")->check(CLI::IsMember({"c3"}));
  verify_cmd->add_option("--seed", cfg.seed, "RNG seed");
  verify_cmd->add_option("--instances", cfg.instances, "Random instances per check")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one remap entry (the remap check must fail)");
  verify_cmd->add_option("--tol", cfg.tolerances, "Override a tolerance, name=value (repeatable)");
  verify_cmd->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* table = app.add_subcommand("error-table", "L2 interpolation error of the bump over F");
  table->add_option("--N", cfg.table_N, "Comma-separated odd N values")->delimiter(',');
  table->add_option("--quad-n", cfg.quad_n, "Midpoint cells per axis")->check(CLI::PositiveNumber);
  table->add_flag("--long", cfg.long_run, "Allow N > 31");
  table->add_option("--a", cfg.a, "Grid origin a");
  table->add_option("--b", cfg.b, "Grid offset b (default 0.5)");
  add_bump_options(table, cfg);
  table->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.c3_only = suite == "c3";
  if (*table && table->count("--b") == 0) cfg.b = 0.5;

  try {
    if (*grid) return cmd_grid(cfg);
    if (*sample) return cmd_sample(cfg);
    if (*transform) return cmd_transform(cfg);
    if (*inverse) return cmd_inverse(cfg);
    if (*interpolate) return cmd_interpolate(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*table) return cmd_error_table(cfg);
  } catch (const IoError& e) {
    std::cerr << "altf: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "altf: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "altf: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
