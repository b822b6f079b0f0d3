#pragma once

// Diagonal pseudo-metrics diag(1, e_1, ..., e_M, -1) on R^D and the scalar
// invariants that decide which exponent n makes (alpha.x)^n (x o x) a
// zero-mean-curvature field.
//
// Slot convention: index 0 is t, index D-1 is z, indices 1..M = D-2 are the
// transverse coordinates x^a. The null covector alpha = (1, 0, ..., 0, 1)
// pairs with this convention, so alpha.x = t + z.

#include "zmc/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zmc {

class DiagonalMetric {
 public:
  /// Validates D >= 3, entries[0] == 1, entries[D-1] == -1, all nonzero.
  /// Throws std::invalid_argument otherwise.
  explicit DiagonalMetric(std::vector<Rational> entries);

  /// diag(1, transverse..., -1).
  static DiagonalMetric with_transverse(std::span<const Rational> transverse);

  /// Mostly-minus Minkowski metric diag(1, -1, ..., -1) of dimension D.
  static DiagonalMetric minkowski(int dim);

  int dim() const { return static_cast<int>(entries_.size()); }
  int transverse_dim() const { return dim() - 2; }
  const Rational& operator[](int mu) const { return entries_[static_cast<std::size_t>(mu)]; }
  const Rational& transverse(int a) const { return entries_[static_cast<std::size_t>(a + 1)]; }
  std::span<const Rational> entries() const { return entries_; }

  /// True when every entry is +1 or -1.
  bool is_unimodular() const;

  std::string to_string() const;

  friend bool operator==(const DiagonalMetric&, const DiagonalMetric&) = default;

 private:
  std::vector<Rational> entries_;
};

enum class ClassTag { A, B, C };

std::string to_string(ClassTag tag);
ClassTag parse_class_tag(std::string_view text);

/// gamma = eta^{mu nu} g_{mu nu} = sum_mu g[mu] / eta[mu].
Rational gamma(const DiagonalMetric& eta, const DiagonalMetric& g);

/// The unique lambda with g eta^{-1} g = lambda eta + (1 - lambda) g, entrywise.
/// Returns 1 when g == eta (every lambda works there).
std::optional<Rational> lambda_decompose(const DiagonalMetric& eta, const DiagonalMetric& g);

/// Exact roots of the admissibility quadratic for the given class, sorted
/// descending. Class A needs gamma == D, class B needs gamma == 0, class C
/// needs gamma + lambda == 1. Throws std::invalid_argument on mismatch.
std::vector<Rational> admissible_exponents(ClassTag tag, int dim, const Rational& gamma,
                                           const Rational& lambda);

/// A +-1 metric g with gamma(eta, g) == 0: the first q = D/2 transverse
/// slots flip sign relative to eta, the rest agree. Requires D even.
DiagonalMetric partner_metric_for_class_b(int dim, const DiagonalMetric& eta);

/// diag(1, lambda, ..., lambda, -1) with lambda = 1/(M-1).
DiagonalMetric class_c_metric(int transverse_dim);

/// Exact rational roots of n^2 + b n + c, descending; empty when irrational
/// or complex. A double root is reported once.
std::vector<Rational> rational_quadratic_roots(const Rational& b, const Rational& c);

}  // namespace zmc
