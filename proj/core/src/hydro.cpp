#include "zmc/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zmc::hydro {

AlphaPoly::AlphaPoly(const Rational& c) { accumulate(0, c); }

AlphaPoly AlphaPoly::alpha() {
  AlphaPoly p;
  p.accumulate(1, 1);
  return p;
}

void AlphaPoly::accumulate(unsigned degree, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) coeffs_.erase(it);
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  for (const auto& [d, c] : o.coeffs_) accumulate(d, c);
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  for (const auto& [d, c] : o.coeffs_) accumulate(d, -c);
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.accumulate(da + db, ca * cb);
  return out;
}

double AlphaPoly::eval(double alpha) const {
  double sum = 0.0;
  for (const auto& [d, c] : coeffs_) sum += c.get_d() * std::pow(alpha, static_cast<int>(d));
  return sum;
}

std::string AlphaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += zmc::to_string(c);
    if (d == 1) out += "*alpha";
    if (d > 1) out += "*alpha^" + std::to_string(d);
  }
  return out;
}

bool TRKeyLess::operator()(const TRKey& a, const TRKey& b) const {
  if (int c = cmp(a.tau_exp, b.tau_exp); c != 0) return c < 0;
  return cmp(a.r_exp, b.r_exp) < 0;
}

void TRExpr::accumulate(const TRKey& key, const AlphaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TRExpr TRExpr::term(const AlphaPoly& c, const Rational& tau_exp, const Rational& r_exp) {
  TRExpr e;
  e.accumulate(TRKey{tau_exp, r_exp}, c);
  return e;
}

TRExpr& TRExpr::operator+=(const TRExpr& o) {
  for (const auto& [k, c] : o.terms_) accumulate(k, c);
  return *this;
}

TRExpr& TRExpr::operator-=(const TRExpr& o) {
  for (const auto& [k, c] : o.terms_) accumulate(k, AlphaPoly() - c);
  return *this;
}

TRExpr operator*(const TRExpr& a, const TRExpr& b) {
  TRExpr out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.accumulate(TRKey{ka.tau_exp + kb.tau_exp, ka.r_exp + kb.r_exp}, ca * cb);
  return out;
}

TRExpr operator*(const AlphaPoly& c, const TRExpr& a) {
  TRExpr out;
  for (const auto& [k, coeff] : a.terms_) out.accumulate(k, c * coeff);
  return out;
}

TRExpr TRExpr::d_tau() const {
  TRExpr out;
  for (const auto& [k, c] : terms_) {
    if (sgn(k.tau_exp) == 0) continue;
    out.accumulate(TRKey{k.tau_exp - 1, k.r_exp}, AlphaPoly(k.tau_exp) * c);
  }
  return out;
}

TRExpr TRExpr::d_r() const {
  TRExpr out;
  for (const auto& [k, c] : terms_) {
    if (sgn(k.r_exp) == 0) continue;
    out.accumulate(TRKey{k.tau_exp, k.r_exp - 1}, AlphaPoly(k.r_exp) * c);
  }
  return out;
}

TRExpr TRExpr::shift_r(const Rational& k) const {
  TRExpr out;
  for (const auto& [key, c] : terms_) out.accumulate(TRKey{key.tau_exp, key.r_exp + k}, c);
  return out;
}

double TRExpr::eval(double tau, double r, double alpha) const {
  if (!(tau > 0.0) || !(r > 0.0)) throw std::domain_error("TRExpr evaluation needs tau > 0, r > 0");
  double sum = 0.0;
  for (const auto& [k, c] : terms_)
    sum += c.eval(alpha) * std::pow(tau, k.tau_exp.get_d()) * std::pow(r, k.r_exp.get_d());
  return sum;
}

std::string TRExpr::to_string(const std::string& tau_name, const std::string& r_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (sgn(k.tau_exp) != 0) out += " * " + tau_name + "^" + zmc::to_string(k.tau_exp);
    if (sgn(k.r_exp) != 0) out += " * " + r_name + "^" + zmc::to_string(k.r_exp);
  }
  return out;
}

std::string to_string(Branch b) { return b == Branch::minus ? "minus" : "plus"; }

Branch parse_branch(std::string_view text) {
  if (text == "minus") return Branch::minus;
  if (text == "plus") return Branch::plus;
  throw std::invalid_argument("branch must be 'minus' or 'plus', got '" + std::string(text) + "'");
}

SimilarityFamily SimilarityFamily::make(int M, Branch branch) {
  if (M < 2) throw std::invalid_argument("similarity family needs M >= 2");
  return SimilarityFamily{M, branch};
}

Rational SimilarityFamily::a() const {
  if (branch == Branch::plus) return Rational(2 * M + 1);
  Rational a(-(M + 1), M - 1);
  a.canonicalize();
  return a;
}

Rational SimilarityFamily::c() const { return -(a() + 1) / 2; }

Rational SimilarityFamily::beta() const {
  if (branch == Branch::plus) return Rational(1);
  Rational b(-1, M - 1);
  b.canonicalize();
  return b;
}

TRExpr p_from_parameters(const Rational& a, const Rational& c, const Rational& beta) {
  return TRExpr::term(AlphaPoly::alpha(), a, 0) + TRExpr::term(AlphaPoly(beta / 2), a + 2 * c, 2);
}

TRExpr p_solution(const SimilarityFamily& fam) {
  if (fam.M < 2) throw std::invalid_argument("similarity family needs M >= 2");
  return p_from_parameters(fam.a(), fam.c(), fam.beta());
}

std::vector<TRExpr> eq18_summands(const TRExpr& p, int M) {
  const TRExpr pt = p.d_tau();
  const TRExpr pr = p.d_r();
  const AlphaPoly two(Rational(2));
  const AlphaPoly m1(Rational(M - 1));
  return {
      pt.d_tau(),
      two * (pr * pr.d_tau()),
      AlphaPoly(Rational(-2)) * (pt * pr.d_r()),
      AlphaPoly(Rational(-2 * (M - 1))) * (pt * pr).shift_r(-1),
      AlphaPoly(Rational(-(M - 1))) * (pr * pr * pr).shift_r(-1),
  };
}

TRExpr eq18_residual(const TRExpr& p, int M) {
  TRExpr out;
  for (const auto& s : eq18_summands(p, M)) out += s;
  return out;
}

bool uniform_similarity_weight(const std::vector<TRExpr>& summands, const Rational& c,
                               const Rational& expected) {
  for (const auto& s : summands)
    for (const auto& [k, coeff] : s.terms())
      if (k.tau_exp - c * k.r_exp != expected) return false;
  return true;
}

TRExpr reduced_ode_residual(const Rational& a, int M, const Rational& beta) {
  const TRExpr P = p_from_parameters(0, 0, beta);  // alpha + beta w^2 / 2 in the r slot
  const TRExpr P1 = P.d_r();
  const TRExpr P2 = P1.d_r();
  auto k = [](const Rational& q) { return AlphaPoly(q); };
  const Rational m = M;

  TRExpr lhs = k(a * (a - 1)) * P;
  lhs += k(Rational(-3, 4) * (a * a - 1)) * P1.shift_r(1);
  lhs += k((a + 1) * (a + 1) / 4) * P2.shift_r(2);
  lhs += k(m * a + m - 2) * (P1 * P1);

  TRExpr rhs = k(m - 1) * (P1 * P1 * P1).shift_r(-1);
  rhs += k(2 * a) * (P * P2 + k(m - 1) * (P * P1).shift_r(-1));
  return lhs - rhs;
}

double eq18_residual_numeric(const TRExpr& p, int M, const Grid& grid, double alpha) {
  if (!(grid.tau_lo > 0.0) || !(grid.r_lo > 0.0))
    throw std::domain_error("numeric check needs tau > 0 and r > 0");
  if (grid.n_tau < 1 || grid.n_r < 1) throw std::invalid_argument("empty grid");
  const TRExpr pt = p.d_tau();
  const TRExpr pr = p.d_r();
  const TRExpr ptt = pt.d_tau();
  const TRExpr prr = pr.d_r();
  const TRExpr ptr = pr.d_tau();

  auto axis = [](double lo, double hi, int n, int i) {
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };

  double worst = 0.0;
  for (int i = 0; i < grid.n_tau; ++i) {
    const double tau = axis(grid.tau_lo, grid.tau_hi, grid.n_tau, i);
    for (int j = 0; j < grid.n_r; ++j) {
      const double r = axis(grid.r_lo, grid.r_hi, grid.n_r, j);
      const double vt = pt.eval(tau, r, alpha);
      const double vr = pr.eval(tau, r, alpha);
      const double lhs = ptt.eval(tau, r, alpha) +
                         2.0 * (vr * ptr.eval(tau, r, alpha) - vt * prr.eval(tau, r, alpha));
      const double rhs = (M - 1) / r * (2.0 * vt * vr + vr * vr * vr);
      worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300));
    }
  }
  return worst;
}

}  // namespace zmc::hydro
