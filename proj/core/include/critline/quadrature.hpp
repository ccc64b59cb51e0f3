#pragma once

#include <string>
#include <vector>

#include "critline/types.hpp"

namespace critline::quadrature {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], increasing
  std::vector<double> weights;  // positive, sum 2
};

// n-point Gauss-Legendre rule; cached per n.
const GaussRule& gauss_legendre(int n);

// Truncated quadrature rule on the critical line: composite Gauss-Legendre
// panels of width 1 covering [-T, T], symmetric about 0.
struct LineQuadrature {
  double truncation = 0;              // T
  std::vector<double> nodes;          // t_j, strictly increasing
  std::vector<double> weights;        // matching weights, sum = 2T
  std::string scheme;

  static LineQuadrature make(double T, int nodes_per_unit = 16);
};

}  // namespace critline::quadrature
