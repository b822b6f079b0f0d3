#include "zmc/rational.hpp"
#include "zmc_cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace zmc::cli {

namespace {

// Decimal, exponent or p/q text to double.
double parse_real(const std::string& text) {
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (!text.empty() && end == text.c_str() + text.size()) return x;
  return parse_rational(text).get_d();
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// A real-valued option that also takes p/q.
CLI::Option* add_real(CLI::App* app, const std::string& name, double& target, const std::string& help) {
  return app->add_option_function<std::string>(
      name, [&target](const std::string& s) { target = parse_real(s); }, help)
      ->type_name("REAL")
      ->default_str(short_number(target))
      ->check([](const std::string& s) {
        try {
          parse_real(s);
          return std::string();
        } catch (const std::exception&) {
          return "not a number: " + s;
        }
      });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact and numerical checks for algebraic zero-mean-curvature hypersurfaces", "zmc");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::function<Report()> action;

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Exact identity and zero-mean-curvature checks");
  v->alias("verify-identities");
  v->add_option("--class", verify.cls, "A, B or C")->required();
  v->add_option("--D", verify.D, "Spacetime dimension")->required();
  v->add_option("--n", verify.n, "Exponent (p/q accepted); default: the nontrivial admissible root");
  v->callback([&] { action = [&] { return cmd_verify(verify); }; });

  SampleOptions sample;
  double t_max = 0.0;
  auto* s = app.add_subcommand("sample", "Seeded point cloud on a solution surface");
  s->add_option("--class", sample.cls, "A, B or C")->required();
  s->add_option("--D", sample.D, "Spacetime dimension")->required();
  add_real(s, "--C", sample.C, "Level constant (C for class A, C' for B and C)");
  add_real(s, "--t", sample.t, "Time (lower end of the range with --t-max)");
  auto* t_max_opt = add_real(s, "--t-max", t_max, "Upper end of a uniform time range");
  s->add_option("--count", sample.count, "Number of points")->capture_default_str();
  s->add_option("--seed", sample.seed, "Random seed")->capture_default_str();
  s->add_option("--out", sample.out, "CSV output path");
  s->callback([&] {
    if (t_max_opt->count() > 0) sample.t_max = t_max;
    action = [&] { return cmd_sample(sample); };
  });

  SliceOptions slice;
  auto* sl = app.add_subcommand("slice", "Constant-t slice profile of the class A surface");
  add_real(sl, "--C", slice.C, "Level constant, > 0");
  sl->add_option("--M", slice.M, "Transverse dimension")->capture_default_str();
  add_real(sl, "--t", slice.t, "Time");
  sl->add_option("--num", slice.num, "Number of samples")->capture_default_str();
  sl->add_option("--out", slice.out, "CSV output path");
  sl->callback([&] { action = [&] { return cmd_slice(slice); }; });

  OngOptions ong;
  auto* og = app.add_subcommand("ong", "Orthogonal-gauge trajectory family");
  add_real(og, "--C", ong.C, "Level constant, > 0");
  og->add_option("--M", ong.M, "Transverse dimension")->capture_default_str();
  add_real(og, "--t0", ong.t0, "Initial time, > 0");
  add_real(og, "--t1", ong.t1, "Final time");
  og->add_option("--labels", ong.labels, "Number of trajectories")->capture_default_str();
  add_real(og, "--step", ong.step, "RK4 step");
  add_real(og, "--band-lo", ong.band_lo, "Lowest label as a fraction of kappa_max(t0)");
  add_real(og, "--band-hi", ong.band_hi, "Highest label as a fraction of kappa_max(t0)");
  og->add_option("--out", ong.out, "CSV output path");
  og->callback([&] { action = [&] { return cmd_ong(ong); }; });

  HydroOptions hydro;
  auto* h = app.add_subcommand("hydro", "Similarity solutions of the hydrodynamic equation");
  h->add_option("--M", hydro.M, "Transverse dimension")->capture_default_str();
  h->add_option("--branch", hydro.branch, "minus or plus")->capture_default_str();
  add_real(h, "--alpha", hydro.alpha, "alpha for the numeric cross-check");
  h->callback([&] { action = [&] { return cmd_hydro(hydro); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const std::exception& e) {
    err << "zmc: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Report report = action();
    out << report.dump();
    return report.pass() ? kPass : kFail;
  } catch (const std::exception& e) {
    err << "zmc: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zmc::cli
