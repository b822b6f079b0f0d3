#include "zmc_cli/commands.hpp"

#include "zmc/hydro.hpp"
#include "zmc/metric.hpp"
#include "zmc/ong.hpp"
#include "zmc/slices.hpp"
#include "zmc/surfaces.hpp"
#include "zmc/symalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace zmc::cli {

namespace {

std::string str(const Rational& q) { return zmc::to_string(q); }

class CsvFile {
 public:
  explicit CsvFile(const std::optional<std::string>& path) {
    if (!path) return;
    file_.open(*path, std::ios::out | std::ios::trunc);
    if (!file_) throw UsageError("cannot open '" + *path + "' for writing");
  }
  bool enabled() const { return file_.is_open(); }
  void row(std::initializer_list<std::string> cells) { row(std::vector<std::string>(cells)); }
  void row(const std::vector<std::string>& cells) {
    if (!enabled()) return;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) file_ << ',';
      file_ << cells[i];
    }
    file_ << '\n';
  }
  void close(const std::optional<std::string>& path) {
    if (!enabled()) return;
    file_.close();
    if (!file_) throw UsageError("failed writing '" + *path + "'");
  }

 private:
  std::ofstream file_;
};

DiagonalMetric partner_metric(ClassTag tag, int D, const DiagonalMetric& eta) {
  switch (tag) {
    case ClassTag::A:
      return eta;
    case ClassTag::B:
      return partner_metric_for_class_b(D, eta);
    case ClassTag::C:
      if (D < 4) throw std::invalid_argument("class C needs D >= 4 (M >= 2)");
      return class_c_metric(D - 2);
  }
  throw std::invalid_argument("unknown class");
}

}  // namespace

Report cmd_verify(const VerifyOptions& o) {
  const ClassTag tag = parse_class_tag(o.cls);
  const DiagonalMetric eta = DiagonalMetric::minkowski(o.D);
  const DiagonalMetric g = partner_metric(tag, o.D, eta);
  const auto lambda = lambda_decompose(eta, g);
  if (!lambda) throw std::invalid_argument("metric pair has no lambda decomposition");
  const Rational gam = gamma(eta, g);
  const auto roots = admissible_exponents(tag, o.D, gam, *lambda);

  Rational n = -1;
  if (o.n) {
    n = parse_rational(*o.n);
  } else {
    for (const auto& root : roots)
      if (root != -1) n = root;
  }
  if (!is_integer(n) && tag != ClassTag::C)
    throw std::invalid_argument("fractional n needs class C");

  Report report("verify");
  report.params() = {{"class", to_string(tag)}, {"D", o.D}, {"n", str(n)}};

  report.add_flag("lambda_decompose", true, str(*lambda));
  if (tag == ClassTag::C) report.add_flag("gamma_plus_lambda_is_one", gam + *lambda == 1, str(gam + *lambda));
  report.add_flag("identity_box", symalg::verify_identity_eq4(n, eta, g));
  report.add_flag("identity_gradient_square", symalg::verify_identity_eq13(n, eta, g, *lambda));
  report.add_flag("identity_cubic_term", symalg::verify_identity_eq14(n, eta, g, *lambda));

  const bool admissible = std::find(roots.begin(), roots.end(), n) != roots.end();
  report.add_flag("admissible_exponent", admissible, str(n));

  const FieldExpr numerator = symalg::mc_numerator(symalg::chi_ansatz(n, g), eta);
  report.add_flag("zero_mean_curvature", numerator.is_zero(), numerator.to_string());

  Json admissible_list = Json::array();
  for (const auto& r : roots) admissible_list.push_back(str(r));
  report.extras()["eta"] = eta.to_string();
  report.extras()["g"] = g.to_string();
  report.extras()["gamma"] = str(gam);
  report.extras()["lambda"] = str(*lambda);
  report.extras()["admissible"] = std::move(admissible_list);
  return report;
}

Report cmd_sample(const SampleOptions& o) {
  const ClassTag tag = parse_class_tag(o.cls);
  const auto fam = surfaces::SolutionFamily::make(tag, o.D, o.C);
  surfaces::CloudOptions opts;
  opts.count = o.count;
  opts.seed = o.seed;
  opts.t_min = o.t;
  opts.t_max = o.t_max.value_or(o.t);
  if (!std::isfinite(opts.t_min) || !std::isfinite(opts.t_max))
    throw std::invalid_argument("t must be finite");
  const auto points = surfaces::sample_cloud(fam, opts);

  Report report("sample");
  report.params() = {{"class", to_string(tag)}, {"D", o.D},       {"C", o.C},
                     {"t", o.t},                {"t_max", opts.t_max}, {"count", o.count},
                     {"seed", o.seed}};

  CsvFile csv(o.out);
  std::vector<std::string> header{"t"};
  const int m = fam.transverse_dim();
  for (int a = 1; a <= m; ++a) header.push_back("x" + std::to_string(a));
  header.insert(header.end(), {"z", "residual", "causal"});
  csv.row(header);

  double worst = 0.0;
  std::size_t tally[3] = {0, 0, 0};
  for (const auto& p : points) {
    worst = std::max(worst, p.residual_mc);
    ++tally[static_cast<int>(p.causal)];
    std::vector<std::string> cells;
    for (double c : p.coords) cells.push_back(format_number(c));
    cells.push_back(format_number(p.residual_mc));
    cells.push_back(surfaces::to_string(p.causal));
    csv.row(cells);
  }
  csv.close(o.out);

  report.add_below("max_residual", worst, 1e-9);
  const std::size_t total = points.size();
  const auto timelike = tally[static_cast<int>(surfaces::Causal::timelike)];
  const auto spacelike = tally[static_cast<int>(surfaces::Causal::spacelike)];
  if (tag == ClassTag::A && o.C > 0.0)
    report.add_flag("causal_all_timelike", timelike == total, timelike);
  else if (tag == ClassTag::A && o.C < 0.0)
    report.add_flag("causal_all_spacelike", spacelike == total, spacelike);
  else if (tag == ClassTag::B && o.C < 0.0)
    report.add_flag("causal_all_timelike", timelike == total, timelike);

  report.extras()["n"] = str(fam.n);
  report.extras()["rows"] = total;
  report.extras()["empty_slice"] = total == 0;
  report.extras()["causal_tally"] = {{"timelike", timelike},
                                     {"spacelike", spacelike},
                                     {"null", tally[static_cast<int>(surfaces::Causal::null)]}};
  return report;
}

Report cmd_slice(const SliceOptions& o) {
  const slices::SliceParams params{slices::Profile{o.M, o.C}, o.t};
  params.profile.validate();
  if (!std::isfinite(o.t)) throw std::invalid_argument("t must be finite");
  const auto profile = slices::slice_profile(params, o.num);

  Report report("slice");
  report.params() = {{"C", o.C}, {"M", o.M}, {"t", o.t}, {"num", o.num}};

  CsvFile csv(o.out);
  csv.row({"kappa", "r", "z"});
  for (const auto& s : profile) csv.row({format_number(s.kappa), format_number(s.r), format_number(s.z)});
  csv.close(o.out);

  const double tabs = std::abs(o.t);
  const double kmax = params.profile.kappa_max(tabs);
  const double root_error = std::abs(params.profile.f(kmax) - 2.0 * tabs) / std::max(1.0, 2.0 * tabs);
  report.add_below("kappa_max_root", root_error, 1e-12);
  const bool ends_zero = profile.front().r == 0.0 && profile.back().r == 0.0;
  report.add_flag("endpoints_r_zero", ends_zero);
  if (o.t == 0.0)
    report.add_flag("convex", true, "point slice");
  else
    report.add_flag("convex", slices::convexity_check(params, std::max(o.num, 16)));

  report.extras()["kappa_max"] = std::copysign(kmax, o.t) + 0.0;
  return report;
}

Report cmd_ong(const OngOptions& o) {
  const slices::Profile profile{o.M, o.C};
  profile.validate();
  const auto labels = ong::interior_labels(profile, o.t0, o.labels, o.band_lo, o.band_hi);
  const auto family = ong::integrate_family(labels, o.t0, o.t1, profile, o.step);

  Report report("ong");
  report.params() = {{"C", o.C},           {"M", o.M},         {"t0", o.t0},
                     {"t1", o.t1},         {"labels", o.labels}, {"step", o.step},
                     {"band_lo", o.band_lo}, {"band_hi", o.band_hi}};

  CsvFile csv(o.out);
  csv.row({"label_kappa0", "t", "kappa", "r", "z"});
  double excess = -std::numeric_limits<double>::infinity();
  double min_rate = std::numeric_limits<double>::infinity();
  std::size_t clamped = 0;
  for (const auto& traj : family) {
    clamped += traj.clamped_steps;
    const std::string label = format_number(traj.label);
    for (const auto& s : traj.samples) {
      excess = std::max(excess, (profile.f(s.kappa) - 2.0 * s.t) / (2.0 * s.t));
      min_rate = std::min(min_rate, s.rate);
      const double r = std::sqrt(std::max(0.0, s.kappa * (2.0 * s.t - profile.f(s.kappa))));
      csv.row({label, format_number(s.t), format_number(s.kappa), format_number(r),
               format_number(s.kappa - s.t)});
    }
  }
  csv.close(o.out);

  report.add_below("orthogonality_residual", ong::orthogonality_residual(family, o.t1), 1e-4);
  report.add_below("confinement_excess", excess, 1e-12);
  report.add({"rate_nonnegative", min_rate >= 0.0, min_rate, 0.0});

  const auto rho = ong::rho_diagnostic(family, o.t1);
  std::size_t defined = 0;
  double rho_min = std::numeric_limits<double>::infinity();
  double rho_max = -std::numeric_limits<double>::infinity();
  for (const auto& v : rho) {
    if (!v) continue;
    ++defined;
    rho_min = std::min(rho_min, *v);
    rho_max = std::max(rho_max, *v);
  }
  report.extras()["kappa_max_t0"] = profile.kappa_max(o.t0);
  report.extras()["kappa_max_t1"] = profile.kappa_max(o.t1);
  report.extras()["clamped_steps"] = clamped;
  report.extras()["rho"] = {{"defined", defined},
                            {"min", defined ? Json(rho_min) : Json(nullptr)},
                            {"max", defined ? Json(rho_max) : Json(nullptr)}};
  return report;
}

Report cmd_hydro(const HydroOptions& o) {
  const auto fam = hydro::SimilarityFamily::make(o.M, hydro::parse_branch(o.branch));
  if (!std::isfinite(o.alpha)) throw std::invalid_argument("alpha must be finite");
  const hydro::TRExpr p = hydro::p_solution(fam);
  const hydro::TRExpr residual = hydro::eq18_residual(p, o.M);
  const bool symbolic_zero = residual.is_zero();
  const bool reduced_zero = hydro::reduced_ode_residual(fam.a(), o.M, fam.beta()).is_zero();
  const bool weight = hydro::uniform_similarity_weight(hydro::eq18_summands(p, o.M), fam.c(), fam.a() - 2);
  const double numeric = hydro::eq18_residual_numeric(p, o.M, hydro::Grid{}, o.alpha);

  Report report("hydro");
  report.params() = {{"M", o.M}, {"branch", hydro::to_string(fam.branch)}, {"alpha", o.alpha}};
  report.add_flag("symbolic_zero", symbolic_zero, residual.to_string());
  report.add_flag("reduced_ode_zero", reduced_zero);
  report.add_flag("uniform_similarity_weight", weight, str(fam.a() - 2));
  report.add_below("numeric_max_residual", numeric, 1e-12);

  report.extras()["branch"] = hydro::to_string(fam.branch);
  report.extras()["M"] = o.M;
  report.extras()["a"] = str(fam.a());
  report.extras()["c"] = str(fam.c());
  report.extras()["beta"] = str(fam.beta());
  report.extras()["p"] = p.to_string();
  report.extras()["symbolic_zero"] = symbolic_zero;
  report.extras()["numeric_max_residual"] = numeric;
  return report;
}

}  // namespace zmc::cli
