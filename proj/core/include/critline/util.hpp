#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "critline/types.hpp"

namespace critline::util {

// Runs fn(i) for i in [0, n) across a small thread pool. Each index writes
// only its own output slot, so results are schedule-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Fixed-order pairwise (tree) summation; deterministic regardless of how the
// terms were produced.
double pairwise_sum(std::span<const double> xs);
cplx pairwise_sum(std::span<const cplx> xs);

// Shortest-printing round-trip formatting for doubles ("%.17g" fallback),
// used everywhere persistent output must be byte-stable.
std::string format_double(double x);
std::string format_complex(cplx z);  // "a+bi" / "a-bi"

// Principal-value argument difference unwrapped into (-pi, pi].
double arg_increment(cplx from, cplx to);

}  // namespace critline::util
