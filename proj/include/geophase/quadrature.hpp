#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "geophase/errors.hpp"

namespace geophase {

// Nodes and weights for  int_-inf^inf e^{-x^2} f(x) dx ~= sum w_i f(x_i).
// Nodes are sorted ascending and exactly antisymmetric: x_i = -x_{n-1-i}.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

namespace detail {

// Newton iteration on the orthonormal Hermite recurrence (stable for large n,
// unlike evaluating H_n directly).
inline HermiteRule hermite_rule_compute(int n) {
  if (n < 1) throw Error("hermite_rule: need at least one node");
  HermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  const double pim4 = 0.7511255444649425; // pi^{-1/4}
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    // initial guesses (Stroud & Secrest)
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[n - 1];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[n - 2];
    else
      z = 2.0 * z - rule.nodes[n - i + 1];

    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[n - 1 - i] = 2.0 / (pp * pp);
    rule.weights[i] = rule.weights[n - 1 - i];
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

} // namespace detail

// Memoized access; rules are immutable once built and safe to share.
inline const HermiteRule& hermite_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<HermiteRule>(detail::hermite_rule_compute(n))).first;
  return *it->second;
}

struct QuadratureConfig {
  enum class Method { GaussHermite, MonteCarlo } method = Method::GaussHermite;
  int n = 64;              // Gauss-Hermite starting node count or MC sample count
  std::uint64_t seed = 0;  // MonteCarlo only

  void validate() const {
    if (method == Method::GaussHermite && n < 4)
      throw Error("QuadratureConfig: Gauss-Hermite needs n >= 4");
    if (method == Method::MonteCarlo && n < 1)
      throw Error("QuadratureConfig: Monte Carlo needs n >= 1");
  }
};

} // namespace geophase
