#include "critline/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace critline::quadrature {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Roots of P_n by Newton iteration from the Chebyshev-like initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

LineQuadrature LineQuadrature::make(double T, int nodes_per_unit) {
  if (!(T > 0) || nodes_per_unit < 2)
    throw Error(ErrKind::domain, "LineQuadrature: need T > 0 and >= 2 nodes per panel");
  int half_panels = static_cast<int>(std::ceil(T - 1e-12));
  const GaussRule& g = gauss_legendre(nodes_per_unit);

  LineQuadrature q;
  q.truncation = half_panels;  // panels have unit width; T is rounded up
  q.scheme = "composite-gauss-legendre-" + std::to_string(nodes_per_unit) + "x1";
  q.nodes.reserve(2 * half_panels * nodes_per_unit);
  q.weights.reserve(2 * half_panels * nodes_per_unit);
  for (int p = -half_panels; p < half_panels; ++p) {
    double lo = p, hi = p + 1;
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int k = 0; k < nodes_per_unit; ++k) {
      q.nodes.push_back(mid + half * g.nodes[k]);
      q.weights.push_back(half * g.weights[k]);
    }
  }
  return q;
}

}  // namespace critline::quadrature
