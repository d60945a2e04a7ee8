#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cdent/entanglement.hpp"
#include "cdent/errors.hpp"
#include "cdent/galilean.hpp"
#include "cdent/json_writer.hpp"
#include "cdent/reduced_density.hpp"
#include "cdent/scenarios.hpp"
#include "cdent/state_io.hpp"

namespace cdent::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value))
    throw UsageError(std::string(what) + ": cannot parse number \"" + std::string(text) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// "re" or "re,im".
Complex parse_complex(const std::string& text, std::string_view what) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0], what), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0], what), parse_double(parts[1], what)};
  throw UsageError(std::string(what) + ": expected re or re,im");
}

std::vector<double> parse_list(const std::string& text, std::string_view what) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_double(part, what));
  return out;
}

Vec3 parse_vec3(const std::string& text, std::string_view what) {
  const auto v = parse_list(text, what);
  if (v.size() != 3) throw UsageError(std::string(what) + ": expected x,y,z");
  return {v[0], v[1], v[2]};
}

MultiIndex parse_modes(const std::string& text, std::string_view what) {
  MultiIndex out;
  for (auto part : split(text, ',')) {
    std::size_t m = 0;
    const auto* end = part.data() + part.size();
    const auto res = std::from_chars(part.data(), end, m);
    if (res.ec != std::errc() || res.ptr != end)
      throw UsageError(std::string(what) + ": expected comma-separated mode numbers");
    out.push_back(m);
  }
  return out;
}

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 1;
};

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid: expected lo:hi:steps");
  Grid g{parse_double(parts[0], "--grid"), parse_double(parts[1], "--grid"), 0};
  const auto* end = parts[2].data() + parts[2].size();
  const auto res = std::from_chars(parts[2].data(), end, g.steps);
  if (res.ec != std::errc() || res.ptr != end || g.steps == 0)
    throw UsageError("--grid: steps must be a positive integer");
  return g;
}

// Writes to --out when given, otherwise to the command's stdout.
template <class Body>
void emit(const std::string& out_path, std::ostream& out, Body&& body) {
  if (out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + out_path);
  body(file);
  if (!file) throw UsageError("failed writing " + out_path);
}

void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    w.begin_array();
    for (std::size_t c = 0; c < m.cols(); ++c) w.value(m(r, c));
    w.end_array();
  }
  w.end_array();
}

void write_element(JsonWriter& w, const GalileanElement& g) {
  w.begin_object();
  w.key("b").value(g.time_shift);
  w.key("a").value(std::vector<double>(g.translation.begin(), g.translation.end()));
  w.key("v").value(std::vector<double>(g.boost.begin(), g.boost.end()));
  w.key("rotation").value(std::vector<double>{g.rotation.w, g.rotation.x, g.rotation.y, g.rotation.z});
  w.end_object();
}

void write_sweep_csv(std::ostream& os, const Sweep& sweep) {
  os << sweep.parameter_name << ",abs_x,lambda_plus,lambda_minus,entropy_bits,purity\n";
  for (const auto& row : sweep.rows)
    os << format_double(row.parameter) << ',' << format_double(row.abs_x) << ','
       << format_double(row.lambda_plus) << ',' << format_double(row.lambda_minus) << ','
       << format_double(row.entropy_bits) << ',' << format_double(row.purity) << '\n';
}

struct Options {
  std::string state_path;
  std::string out_path;
  double tolerance = kClassificationTolerance;

  std::string c0 = "0.70710678118654757";
  std::string c1 = "0.70710678118654757";
  double sigma = 1.0;
  double start = 0.0;
  std::optional<double> stop;
  std::size_t steps = 1;

  std::size_t samples = 50;
  std::uint64_t seed = 0;
  double mass = 1.0;

  std::size_t axis = 0;
  std::string grid;

  std::string k0 = "0,0,0";
  std::string k1 = "0,0,0";
  double s0 = 1.0;
  double s1 = 1.0;
  std::string m0;
  std::string m1;
  std::string origin = "0,0,0";
};

void run_analyze(const Options& o, std::ostream& out) {
  const HybridState state = read_state_file(o.state_path);
  const OverlapMatrix rho = reduced_spin_density(state);
  const EntanglementReport report = entanglement_report(rho, o.tolerance);
  emit(o.out_path, out, [&](std::ostream& os) {
    JsonWriter w(os);
    w.begin_object();
    w.key("n").value(state.discrete_dim());
    w.key("d").value(state.momentum_dim());
    w.key("spectrum").value(report.spectrum.values());
    w.key("entropy_bits").value(report.entropy_bits);
    w.key("purity").value(report.purity);
    w.key("schmidt_rank").value(report.schmidt_rank);
    w.key("classification").value(to_string(report.classification));
    w.key("h");
    write_matrix(w, rho.matrix());
    w.end_object();
    w.finish();
  });
}

void run_sweep_q(const Options& o, std::ostream& out) {
  const auto qs = linspace(o.start, o.stop.value_or(o.start), o.steps);
  const Sweep sweep = sweep_q(parse_complex(o.c0, "--c0"), parse_complex(o.c1, "--c1"), o.sigma, qs);
  emit(o.out_path, out, [&](std::ostream& os) { write_sweep_csv(os, sweep); });
}

void run_sweep_width(const Options& o, std::ostream& out) {
  const auto ratios = linspace(o.start, o.stop.value_or(o.start), o.steps);
  const Sweep sweep =
      sweep_width_ratio(parse_complex(o.c0, "--c0"), parse_complex(o.c1, "--c1"), o.sigma, ratios);
  emit(o.out_path, out, [&](std::ostream& os) { write_sweep_csv(os, sweep); });
}

void run_galilean_check(const Options& o, std::ostream& out) {
  const HybridState state = read_state_file(o.state_path);
  const InvarianceReport r = invariance_report(state, o.samples, o.seed, PhysicalParams{o.mass});
  emit(o.out_path, out, [&](std::ostream& os) {
    JsonWriter w(os);
    w.begin_object();
    w.key("samples").value(r.samples);
    w.key("seed").value(static_cast<std::size_t>(o.seed));
    w.key("mass").value(o.mass);
    w.key("max_spectrum_deviation").value(r.max_spectrum_deviation);
    w.key("max_conjugation_deviation").value(r.max_conjugation_deviation);
    w.key("worst_spectrum");
    w.begin_object();
    w.key("sample").value(r.worst_spectrum_sample);
    w.key("element");
    write_element(w, r.worst_spectrum_element);
    w.end_object();
    w.key("worst_conjugation");
    w.begin_object();
    w.key("sample").value(r.worst_conjugation_sample);
    w.key("element");
    write_element(w, r.worst_conjugation_element);
    w.end_object();
    w.end_object();
    w.finish();
  });
}

void run_kernel(const Options& o, std::ostream& out) {
  const HybridState state = read_state_file(o.state_path);
  if (o.axis >= state.momentum_dim())
    throw UsageError("--axis must be below d = " + std::to_string(state.momentum_dim()));
  const Grid grid = parse_grid(o.grid);
  const auto points = linspace(grid.lo, grid.hi, grid.steps);
  emit(o.out_path, out, [&](std::ostream& os) {
    os << "p,p_prime,re_f,im_f\n";
    std::vector<double> p(state.momentum_dim(), 0.0), q(state.momentum_dim(), 0.0);
    for (double a : points)
      for (double b : points) {
        p[o.axis] = a;
        q[o.axis] = b;
        const Complex f = kernel_eval(state, p, q);
        os << format_double(a) << ',' << format_double(b) << ',' << format_double(f.real()) << ','
           << format_double(f.imag()) << '\n';
      }
  });
}

void run_make_beam(const Options& o, std::ostream& out) {
  const HybridState state = beam_pair(parse_complex(o.c0, "--c0"), parse_complex(o.c1, "--c1"),
                                      parse_vec3(o.k0, "--k0"), parse_vec3(o.k1, "--k1"), o.s0, o.s1);
  emit(o.out_path, out, [&](std::ostream& os) { write_state(os, state); });
}

void run_make_shape(const Options& o, std::ostream& out) {
  const auto origin = parse_list(o.origin, "--origin");
  const HybridState state =
      shape_pair(parse_complex(o.c0, "--c0"), parse_complex(o.c1, "--c1"), parse_modes(o.m0, "--m0"),
                 parse_modes(o.m1, "--m1"), o.sigma, origin);
  emit(o.out_path, out, [&](std::ostream& os) { write_state(os, state); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-discrete entanglement of hybrid spin-momentum states", "cdent"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Entanglement report of a state file (JSON)");
  analyze->add_option("state", o.state_path, "State file")->required();
  analyze->add_option("--tol", o.tolerance, "Classification tolerance");
  analyze->add_option("--out", o.out_path, "Write to file instead of stdout");

  auto* sweep_q_cmd = app.add_subcommand("sweep-q", "Equal-width Gaussian pair vs center separation (CSV)");
  auto* sweep_w_cmd = app.add_subcommand("sweep-width", "Co-centered Gaussian pair vs width ratio (CSV)");
  for (auto* cmd : {sweep_q_cmd, sweep_w_cmd}) {
    cmd->add_option("--c0", o.c0, "Amplitude of component 0 (re or re,im)");
    cmd->add_option("--c1", o.c1, "Amplitude of component 1 (re or re,im)");
    cmd->add_option("--out", o.out_path, "Write CSV to file instead of stdout");
  }
  sweep_q_cmd->add_option("--sigma", o.sigma, "Common width");
  sweep_q_cmd->add_option("--q-start", o.start, "First separation");
  sweep_q_cmd->add_option("--q-stop", o.stop, "Last separation (default: q-start)");
  sweep_q_cmd->add_option("--q-steps", o.steps, "Number of rows")->check(CLI::PositiveNumber);
  sweep_w_cmd->add_option("--sigma0", o.sigma, "Width of component 0");
  sweep_w_cmd->add_option("--r-start", o.start, "First width ratio");
  sweep_w_cmd->add_option("--r-stop", o.stop, "Last width ratio (default: r-start)");
  sweep_w_cmd->add_option("--r-steps", o.steps, "Number of rows")->check(CLI::PositiveNumber);

  auto* galilean = app.add_subcommand("galilean-check", "Invariance of rho^s under sampled Galilean elements (JSON)");
  galilean->add_option("state", o.state_path, "State file")->required();
  galilean->add_option("--samples", o.samples, "Number of group elements")->check(CLI::PositiveNumber);
  galilean->add_option("--seed", o.seed, "Sampler seed");
  galilean->add_option("--mass", o.mass, "Particle mass (natural units)");
  galilean->add_option("--out", o.out_path, "Write to file instead of stdout");

  auto* kernel = app.add_subcommand("kernel", "Sample f(p, p') along one momentum axis (CSV)");
  kernel->add_option("state", o.state_path, "State file")->required();
  kernel->add_option("--axis", o.axis, "Momentum axis, 0-based");
  kernel->add_option("--grid", o.grid, "lo:hi:steps")->required();
  kernel->add_option("--out", o.out_path, "Write CSV to file instead of stdout");

  auto* make_state = app.add_subcommand("make-state", "Write a scenario state file (JSON)");
  make_state->require_subcommand(1);
  auto* beam = make_state->add_subcommand("beam", "Two Gaussian packets (n = 2, d = 3)");
  beam->add_option("--c0", o.c0, "Amplitude of component 0 (re or re,im)");
  beam->add_option("--c1", o.c1, "Amplitude of component 1 (re or re,im)");
  beam->add_option("--k0", o.k0, "Center of component 0 (x,y,z)");
  beam->add_option("--k1", o.k1, "Center of component 1 (x,y,z)");
  beam->add_option("--s0", o.s0, "Width of component 0");
  beam->add_option("--s1", o.s1, "Width of component 1");
  beam->add_option("--out", o.out_path, "Write to file instead of stdout");
  auto* shape = make_state->add_subcommand("shape", "Two Hermite modes on one frame");
  shape->add_option("--c0", o.c0, "Amplitude of component 0 (re or re,im)");
  shape->add_option("--c1", o.c1, "Amplitude of component 1 (re or re,im)");
  shape->add_option("--m0", o.m0, "Mode multi-index of component 0 (e.g. 0,0,0)")->required();
  shape->add_option("--m1", o.m1, "Mode multi-index of component 1 (e.g. 1,0,0)")->required();
  shape->add_option("--scale", o.sigma, "Frame width");
  shape->add_option("--origin", o.origin, "Frame origin (comma-separated, sets d)");
  shape->add_option("--out", o.out_path, "Write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "cdent: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) run_analyze(o, out);
    else if (sweep_q_cmd->parsed()) run_sweep_q(o, out);
    else if (sweep_w_cmd->parsed()) run_sweep_width(o, out);
    else if (galilean->parsed()) run_galilean_check(o, out);
    else if (kernel->parsed()) run_kernel(o, out);
    else if (beam->parsed()) run_make_beam(o, out);
    else if (shape->parsed()) run_make_shape(o, out);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "cdent: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "cdent: invalid state: " << e.what() << "\n";
    return kInvalidState;
  } catch (const Error& e) {
    err << "cdent: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace cdent::cli
