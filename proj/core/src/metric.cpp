#include "zmc/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace zmc {

DiagonalMetric::DiagonalMetric(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3)
    throw std::invalid_argument("metric dimension must be at least 3");
  if (entries_.front() != 1) throw std::invalid_argument("metric entry for t must be 1");
  if (entries_.back() != -1) throw std::invalid_argument("metric entry for z must be -1");
  for (const auto& e : entries_)
    if (sgn(e) == 0) throw std::invalid_argument("metric entries must be nonzero");
}

DiagonalMetric DiagonalMetric::with_transverse(std::span<const Rational> transverse) {
  std::vector<Rational> entries;
  entries.reserve(transverse.size() + 2);
  entries.emplace_back(1);
  entries.insert(entries.end(), transverse.begin(), transverse.end());
  entries.emplace_back(-1);
  return DiagonalMetric(std::move(entries));
}

DiagonalMetric DiagonalMetric::minkowski(int dim) {
  if (dim < 3) throw std::invalid_argument("metric dimension must be at least 3");
  std::vector<Rational> transverse(static_cast<std::size_t>(dim - 2), Rational(-1));
  return with_transverse(transverse);
}

bool DiagonalMetric::is_unimodular() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& e) { return e == 1 || e == -1; });
}

std::string DiagonalMetric::to_string() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += zmc::to_string(entries_[i]);
  }
  return out + ")";
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::A: return "A";
    case ClassTag::B: return "B";
    case ClassTag::C: return "C";
  }
  return "?";
}

ClassTag parse_class_tag(std::string_view text) {
  if (text == "A" || text == "a") return ClassTag::A;
  if (text == "B" || text == "b") return ClassTag::B;
  if (text == "C" || text == "c") return ClassTag::C;
  throw std::invalid_argument("unknown solution class '" + std::string(text) + "'");
}

namespace {

void require_same_dim(const DiagonalMetric& eta, const DiagonalMetric& g) {
  if (eta.dim() != g.dim())
    throw std::invalid_argument("metric dimension mismatch: " + std::to_string(eta.dim()) +
                                " vs " + std::to_string(g.dim()));
}

}  // namespace

Rational gamma(const DiagonalMetric& eta, const DiagonalMetric& g) {
  require_same_dim(eta, g);
  Rational sum = 0;
  for (int mu = 0; mu < eta.dim(); ++mu) sum += g[mu] / eta[mu];
  return sum;
}

std::optional<Rational> lambda_decompose(const DiagonalMetric& eta, const DiagonalMetric& g) {
  require_same_dim(eta, g);
  // Per slot: g^2/eta - g = lambda (eta - g). Slots with g == eta impose
  // nothing; every other slot pins lambda = -g/eta.
  std::optional<Rational> lambda;
  for (int mu = 0; mu < eta.dim(); ++mu) {
    if (g[mu] == eta[mu]) continue;
    Rational candidate = -g[mu] / eta[mu];
    if (lambda && *lambda != candidate) return std::nullopt;
    lambda = candidate;
  }
  if (!lambda) return Rational(1);
  return lambda;
}

std::vector<Rational> rational_quadratic_roots(const Rational& b, const Rational& c) {
  Rational disc = b * b - 4 * c;
  auto root = exact_sqrt(disc);
  if (!root) return {};
  Rational hi = (-b + *root) / 2;
  Rational lo = (-b - *root) / 2;
  if (hi == lo) return {hi};
  return {hi, lo};
}

std::vector<Rational> admissible_exponents(ClassTag tag, int dim, const Rational& gamma,
                                           const Rational& lambda) {
  switch (tag) {
    case ClassTag::A:
      // g == eta: n^2 + (2 gamma - 1) n + 2 (gamma - 1) with gamma = D.
      if (gamma != dim)
        throw std::invalid_argument("class A requires g == eta, i.e. gamma == D");
      return rational_quadratic_roots(2 * gamma - 1, 2 * (gamma - 1));
    case ClassTag::B:
      if (gamma != 0) throw std::invalid_argument("class B requires gamma == 0");
      return rational_quadratic_roots(-1, -2);
    case ClassTag::C:
      if (gamma + lambda != 1)
        throw std::invalid_argument("class C requires gamma + lambda == 1");
      // (n - 2 lambda)(n + 1)
      return rational_quadratic_roots(1 - 2 * lambda, -2 * lambda);
  }
  throw std::invalid_argument("unknown class");
}

DiagonalMetric partner_metric_for_class_b(int dim, const DiagonalMetric& eta) {
  if (dim != eta.dim()) throw std::invalid_argument("metric dimension mismatch");
  if (dim % 2 != 0)
    throw std::invalid_argument(
        "class B needs D even: gamma = 0 forces two more flipped than agreeing transverse "
        "signs, got D = " +
        std::to_string(dim));
  if (!eta.is_unimodular()) throw std::invalid_argument("class B needs eta entries in {+1,-1}");
  const int flipped = dim / 2;
  std::vector<Rational> transverse;
  for (int a = 0; a < eta.transverse_dim(); ++a)
    transverse.push_back(a < flipped ? Rational(-eta.transverse(a)) : eta.transverse(a));
  return DiagonalMetric::with_transverse(transverse);
}

DiagonalMetric class_c_metric(int transverse_dim) {
  if (transverse_dim < 2) throw std::invalid_argument("class C needs M >= 2");
  Rational lambda(1, transverse_dim - 1);
  lambda.canonicalize();
  std::vector<Rational> transverse(static_cast<std::size_t>(transverse_dim), lambda);
  return DiagonalMetric::with_transverse(transverse);
}

}  // namespace zmc
