#include "zmc/field_expr.hpp"

#include <cmath>
#include <stdexcept>

namespace zmc {

bool MonomialKeyLess::operator()(const MonomialKey& a, const MonomialKey& b) const {
  if (int c = cmp(a.u_exp, b.u_exp); c != 0) return c < 0;
  if (a.v_exp != b.v_exp) return a.v_exp < b.v_exp;
  return a.x_exp < b.x_exp;
}

namespace {

void require_dim(int a, int b) {
  if (a != b)
    throw std::invalid_argument("expression dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

MonomialKey unit_key(int dim) {
  return MonomialKey{Rational(0), 0, std::vector<unsigned>(static_cast<std::size_t>(dim - 2), 0)};
}

double int_pow(double x, long k) {
  if (k < 0) return 1.0 / int_pow(x, -k);
  double r = 1.0;
  double b = x;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace

FieldExpr::FieldExpr(int dim) : dim_(dim) {
  if (dim < 3) throw std::invalid_argument("expression dimension must be at least 3");
}

FieldExpr FieldExpr::constant(int dim, const Rational& c) {
  return monomial(dim, c, unit_key(dim));
}

FieldExpr FieldExpr::monomial(int dim, const Rational& c, MonomialKey key) {
  FieldExpr e(dim);
  if (key.x_exp.size() != static_cast<std::size_t>(dim - 2))
    throw std::invalid_argument("monomial has wrong number of transverse exponents");
  e.accumulate(key, c);
  return e;
}

FieldExpr FieldExpr::u_power(int dim, const Rational& p) {
  MonomialKey key = unit_key(dim);
  key.u_exp = p;
  return monomial(dim, 1, std::move(key));
}

FieldExpr FieldExpr::v_power(int dim, unsigned q) {
  MonomialKey key = unit_key(dim);
  key.v_exp = q;
  return monomial(dim, 1, std::move(key));
}

FieldExpr FieldExpr::coordinate(int dim, int a) {
  if (a < 0 || a >= dim - 2) throw std::out_of_range("transverse index out of range");
  MonomialKey key = unit_key(dim);
  key.x_exp[static_cast<std::size_t>(a)] = 1;
  return monomial(dim, 1, std::move(key));
}

Rational FieldExpr::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool FieldExpr::has_integer_exponents() const {
  for (const auto& [key, c] : terms_)
    if (!is_integer(key.u_exp)) return false;
  return true;
}

void FieldExpr::accumulate(const MonomialKey& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [key, c] : other.terms_) accumulate(key, -c);
  return *this;
}

FieldExpr& FieldExpr::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
  require_dim(a.dim_, b.dim_);
  FieldExpr out(a.dim_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      MonomialKey key{ka.u_exp + kb.u_exp, ka.v_exp + kb.v_exp, ka.x_exp};
      for (std::size_t i = 0; i < key.x_exp.size(); ++i) key.x_exp[i] += kb.x_exp[i];
      out.accumulate(key, ca * cb);
    }
  }
  return out;
}

FieldExpr add(const FieldExpr& a, const FieldExpr& b) { return a + b; }
FieldExpr mul(const FieldExpr& a, const FieldExpr& b) { return a * b; }
FieldExpr scale(const FieldExpr& a, const Rational& c) { return a * c; }

double FieldExpr::eval(std::span<const double> point) const { return compile().eval(point); }

Rational FieldExpr::eval_exact(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("point has wrong dimension");
  if (!has_integer_exponents())
    throw std::domain_error("exact evaluation needs integer exponents of u");
  const Rational u = point.front() + point.back();
  const Rational v = point.front() - point.back();
  Rational sum = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c * pow(u, key.u_exp.get_num().get_si()) * pow(v, key.v_exp);
    for (std::size_t a = 0; a < key.x_exp.size(); ++a)
      term *= pow(point[a + 1], static_cast<long>(key.x_exp[a]));
    sum += term;
  }
  return sum;
}

CompiledExpr FieldExpr::compile() const {
  CompiledExpr out;
  out.dim_ = dim_;
  out.terms_.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    CompiledExpr::Term term;
    term.coeff = c.get_d();
    term.u_exp = key.u_exp.get_d();
    term.u_integer = is_integer(key.u_exp);
    term.u_int_exp = term.u_integer ? key.u_exp.get_num().get_si() : 0;
    term.v_exp = key.v_exp;
    term.x_exp = key.x_exp;
    out.fractional_ = out.fractional_ || !term.u_integer;
    out.terms_.push_back(std::move(term));
  }
  return out;
}

double CompiledExpr::eval(std::span<const double> point) const {
  if (point.size() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("point has wrong dimension");
  const double u = point.front() + point.back();
  const double v = point.front() - point.back();
  if (fractional_ && !(u > 0.0))
    throw std::domain_error("fractional power of u = t + z needs u > 0");
  double sum = 0.0;
  for (const auto& term : terms_) {
    if (term.u_integer && term.u_int_exp < 0 && u == 0.0)
      throw std::domain_error("negative power of u = t + z at u = 0");
    double value = term.coeff;
    value *= term.u_integer ? int_pow(u, term.u_int_exp) : std::pow(u, term.u_exp);
    value *= int_pow(v, term.v_exp);
    for (std::size_t a = 0; a < term.x_exp.size(); ++a)
      if (term.x_exp[a]) value *= int_pow(point[a + 1], term.x_exp[a]);
    sum += value;
  }
  return sum;
}

std::string FieldExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += zmc::to_string(c);
    if (sgn(key.u_exp) != 0) out += " * u^" + zmc::to_string(key.u_exp);
    if (key.v_exp) out += " * v^" + std::to_string(key.v_exp);
    for (std::size_t a = 0; a < key.x_exp.size(); ++a)
      if (key.x_exp[a]) out += " * x" + std::to_string(a + 1) + "^" + std::to_string(key.x_exp[a]);
  }
  return out;
}

}  // namespace zmc
