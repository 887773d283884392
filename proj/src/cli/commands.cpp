#include "swcwt/cli/commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "swcwt/cli/io.hpp"
#include "swcwt/kernel.hpp"
#include "swcwt/wigner.hpp"

namespace swcwt::cli {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot write " + path.string());
  return os;
}

std::ifstream open_input(const std::filesystem::path& path) {
  if (path.empty()) throw std::invalid_argument("missing input path (--in)");
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read " + path.string());
  return is;
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw std::invalid_argument("cannot create output directory " + dir.string());
}

WaveletFamily make_family(const RunConfig& c, int spin, int lmax) {
  const WaveletFamily base = example_family(c.family, spin, lmax);
  return c.family_gain == 1.0 ? base : base.scaled(c.family_gain);
}

SO3Grid make_so3(const RunConfig& c, int lmax) {
  if (c.so3_grid) return {(*c.so3_grid)[0], (*c.so3_grid)[1], (*c.so3_grid)[2]};
  return SO3Grid::for_band_limit(lmax);
}

double relative_l2_error(const SpinField& approx, const SpinField& exact) {
  double num = 0.0;
  for (int l = exact.lmin(); l <= exact.lmax(); ++l)
    for (int m = -l; m <= l; ++m) {
      const Complex a = l <= approx.lmax() ? approx(l, m) : Complex{};
      num += std::norm(a - exact(l, m));
    }
  return std::sqrt(num / exact.norm_squared());
}

}  // namespace

void validate(const RunConfig& c) {
  const int spin = c.spin.value_or(kDefaultSpin);
  if (c.lmax && (*c.lmax < std::abs(spin) || *c.lmax > kMaxDegree))
    throw std::invalid_argument(fmt::format("lmax must satisfy |spin| <= lmax <= {}", kMaxDegree));
  if (!(c.family.a > 0.0 && c.family.b > 0.0 && c.family.c > 0.0))
    throw std::invalid_argument("family parameters a, b, c must be positive");
  if (!(c.scale_cutoff > 0.0 && c.scale_cutoff < 1.0)) throw std::invalid_argument("scale-cutoff must lie in (0, 1)");
  if (c.n_scales < 2) throw std::invalid_argument("n-scales must be at least 2");
  if (c.so3_grid)
    for (int n : *c.so3_grid)
      if (n < 1) throw std::invalid_argument("so3-grid node counts must be positive");
  if (!(c.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (c.kernel_samples < 1 || c.isometry_pairs < 1) throw std::invalid_argument("sample counts must be positive");
}

int cmd_synth(const RunConfig& c, std::ostream& log) {
  validate(c);
  const int spin = c.spin.value_or(kDefaultSpin);
  const int lmax = c.lmax.value_or(std::max(kDefaultLmax, std::abs(spin)));
  const SpinField field = random_field(spin, lmax, c.seed);
  const GridField samples = synthesize(field, SphereGrid::for_band_limit(lmax));
  prepare_out_dir(c.out);
  {
    auto os = open_output(c.out / "coeffs.json");
    write_coefficients(os, field);
  }
  {
    auto os = open_output(c.out / "grid.csv");
    write_grid_csv(os, samples);
  }
  fmt::print(log, "synth: spin={} lmax={} seed={} -> {}\n", spin, lmax, c.seed, c.out.string());
  return kSuccess;
}

int cmd_analyze(const RunConfig& c, std::ostream& log) {
  validate(c);
  auto is = open_input(c.input);
  const SpinField field = read_coefficients(is);
  if (c.spin && *c.spin != field.spin())
    throw std::invalid_argument(fmt::format("spin mismatch: config {} vs input {}", *c.spin, field.spin()));
  const int lmax = c.lmax.value_or(field.lmax());
  if (lmax < field.lmax()) throw std::invalid_argument("lmax below the band limit of the input");
  const WaveletFamily family = make_family(c, field.spin(), lmax);
  const ScaleGrid scales(family, c.scale_cutoff, c.n_scales);
  const WaveletCoefficients w = cwt_forward(field, family, scales, make_so3(c, lmax));
  prepare_out_dir(c.out);
  auto os = open_output(c.out / "wavelet.csv");
  write_wavelet_csv(os, w);
  fmt::print(log, "analyze: {} rows ({} scales x {} rotations) -> {}\n", w.values.size(), scales.size(),
             w.rotations.size(), (c.out / "wavelet.csv").string());
  return kSuccess;
}

int cmd_reconstruct(const RunConfig& c, std::ostream& log) {
  validate(c);
  if (!c.spin || !c.lmax) throw std::invalid_argument("reconstruct needs --spin and --lmax");
  const int spin = *c.spin;
  const int lmax = *c.lmax;
  const WaveletFamily family = make_family(c, spin, lmax);
  const ScaleGrid scales(family, c.scale_cutoff, c.n_scales);
  const SO3Grid rotations = make_so3(c, lmax);
  auto is = open_input(c.input);
  const WaveletCoefficients w = to_coefficients(read_wavelet_csv(is), spin, lmax, scales, rotations);
  const SpinField rec = cwt_inverse(w, family, lmax);
  const AdmissibilityReport adm = admissibility_check(family, c.scale_cutoff, c.n_scales, c.tolerance);

  prepare_out_dir(c.out);
  {
    auto os = open_output(c.out / "reconstructed.json");
    write_coefficients(os, rec);
  }
  auto os = open_output(c.out / "reconstruct_report.txt");
  fmt::print(os, "spin = {}\nlmax = {}\nscale_cutoff = {:.6g}\nn_scales = {}\n", spin, lmax, c.scale_cutoff, c.n_scales);
  fmt::print(os, "admissibility = {}\nmax_admissibility_deviation = {:.6e}\n", adm.pass ? "pass" : "FAIL (inadmissible family)",
             adm.max_deviation);
  if (!c.reference.empty()) {
    auto ref_in = open_input(c.reference);
    const SpinField ref = read_coefficients(ref_in);
    if (ref.spin() != spin) throw std::invalid_argument("reference spin does not match");
    const double err = relative_l2_error(rec, ref);
    fmt::print(os, "relative_l2_error = {:.6e}\n", err);
    fmt::print(log, "reconstruct: relative L2 error {:.3e}\n", err);
  }
  if (!adm.pass) fmt::print(log, "reconstruct: warning, family is not admissible (deviation {:.3e})\n", adm.max_deviation);
  return kSuccess;
}

int cmd_report(const RunConfig& c, std::ostream& log) {
  validate(c);
  const int spin = c.spin.value_or(kDefaultSpin);
  const int lmax = c.lmax.value_or(std::max(kDefaultLmax, std::abs(spin)));
  const WaveletFamily family = make_family(c, spin, lmax);
  prepare_out_dir(c.out);

  const AdmissibilityReport adm = admissibility_check(family, c.scale_cutoff, c.n_scales, c.tolerance);
  {
    auto os = open_output(c.out / "admissibility.csv");
    os << "l,integral,target,rel_deviation\n";
    for (std::size_t i = 0; i < adm.degrees.size(); ++i)
      fmt::print(os, "{},{:.17g},{:.17g},{:.17g}\n", adm.degrees[i], adm.integrals[i], adm.targets[i],
                 adm.rel_deviation[i]);
  }

  const KernelBoundReport bound = kernel_bound_scan(spin, lmax, c.kernel_samples, c.seed);
  {
    auto os = open_output(c.out / "kernel_bound.csv");
    os << "l,max_abs,ratio\n";
    for (std::size_t i = 0; i < bound.degrees.size(); ++i)
      fmt::print(os, "{},{:.17g},{:.17g}\n", bound.degrees[i], bound.max_abs[i], bound.ratio[i]);
  }

  const ScaleGrid scales(family, c.scale_cutoff, c.n_scales);
  const SO3Grid rotations = make_so3(c, lmax);
  double worst_isometry = 0.0;
  {
    auto os = open_output(c.out / "isometry.csv");
    os << "pair,lhs_re,lhs_im,rhs_re,rhs_im,rel_error\n";
    for (int p = 0; p < c.isometry_pairs; ++p) {
      const SpinField f = random_field(spin, lmax, c.seed + 2 * p);
      const SpinField g = random_field(spin, lmax, c.seed + 2 * p + 1);
      const Complex lhs = phase_space_inner(cwt_forward(f, family, scales, rotations),
                                            cwt_forward(g, family, scales, rotations));
      const Complex rhs = inner_product(f, g);
      const double err = std::abs(lhs - rhs) / std::sqrt(f.norm_squared() * g.norm_squared());
      worst_isometry = std::max(worst_isometry, err);
      fmt::print(os, "{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", p, lhs.real(), lhs.imag(), rhs.real(), rhs.imag(),
                 err);
    }
  }
  const bool isometry_ok = worst_isometry < kIsometryTolerance;

  auto os = open_output(c.out / "report.txt");
  fmt::print(os, "spin = {}\nlmax = {}\n", spin, lmax);
  fmt::print(os, "admissibility = {} (max relative deviation {:.6e}, tolerance {:.1e})\n", adm.pass ? "pass" : "FAIL",
             adm.max_deviation, adm.tolerance);
  fmt::print(os, "kernel_bound = {} (tail growth {:.6e}, limit {:.2f})\n", bound.bounded ? "pass" : "FAIL",
             bound.tail_growth, kKernelTailGrowthTolerance);
  fmt::print(os, "isometry = {} (worst relative error {:.6e}, tolerance {:.1e})\n", isometry_ok ? "pass" : "FAIL",
             worst_isometry, kIsometryTolerance);
  const bool ok = adm.pass && bound.bounded && isometry_ok;
  fmt::print(log, "report: admissibility {} / kernel bound {} / isometry {}\n", adm.pass ? "pass" : "FAIL",
             bound.bounded ? "pass" : "FAIL", isometry_ok ? "pass" : "FAIL");
  return ok ? kSuccess : kVerdictFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous wavelet transform for spin-weighted functions on the sphere"};
  app.set_config("--config", "", "Key-value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  RunConfig config;
  int spin = 0, lmax = 0;
  std::vector<double> family, q;
  std::vector<int> so3;
  std::uint64_t seed = config.seed;
  std::string out_dir = ".", input, reference;

  auto* spin_opt = app.add_option("--spin", spin, "Spin weight s");
  auto* lmax_opt = app.add_option("--lmax", lmax, "Band limit");
  auto* family_opt =
      app.add_option("--family", family, "Example family parameters a,b,c")->delimiter(',')->expected(3);
  auto* q_opt = app.add_option("--q", q, "Polynomial q, ascending coefficients c0,c1,...")->delimiter(',');
  app.add_option("--family-gain", config.family_gain, "Multiply every wavelet coefficient by this factor");
  app.add_option("--scale-cutoff", config.scale_cutoff, "Scale cutoff R; scales span [R, 1/R]");
  app.add_option("--n-scales", config.n_scales, "Number of log-spaced scales");
  auto* so3_opt = app.add_option("--so3-grid", so3, "SO(3) grid sizes NA,NB,NG")->delimiter(',')->expected(3);
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--in", input, "Input file");
  app.add_option("--reference", reference, "Reference coefficient file (reconstruct)");
  app.add_option("--tolerance", config.tolerance, "Relative admissibility tolerance");
  app.add_option("--kernel-samples", config.kernel_samples, "Point pairs for the kernel bound scan");
  app.add_option("--isometry-pairs", config.isometry_pairs, "Random field pairs for the isometry check");

  auto* synth = app.add_subcommand("synth", "Random band-limited field: coefficients JSON and grid CSV");
  auto* analyze_cmd = app.add_subcommand("analyze", "Wavelet transform of a coefficient file");
  auto* reconstruct = app.add_subcommand("reconstruct", "Inverse transform of a wavelet CSV");
  auto* report = app.add_subcommand("report", "Admissibility, kernel bound and isometry reports");
  for (auto* sub : {synth, analyze_cmd, reconstruct, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }

  try {
    if (*spin_opt) config.spin = spin;
    if (*lmax_opt) config.lmax = lmax;
    if (*family_opt) {
      config.family.a = family[0];
      config.family.b = family[1];
      config.family.c = family[2];
    }
    if (*q_opt) config.family.q = q;
    if (*so3_opt) config.so3_grid = std::array<int, 3>{so3[0], so3[1], so3[2]};
    config.seed = seed;
    config.out = out_dir;
    config.input = input;
    config.reference = reference;

    if (synth->parsed()) return cmd_synth(config, out);
    if (analyze_cmd->parsed()) return cmd_analyze(config, out);
    if (reconstruct->parsed()) return cmd_reconstruct(config, out);
    return cmd_report(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
}

}  // namespace swcwt::cli
