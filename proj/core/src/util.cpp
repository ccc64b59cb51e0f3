#include "critline/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace critline::util {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
  if (workers <= 1 || n < 32) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

namespace {
template <class T>
T pairwise_impl(std::span<const T> xs) {
  if (xs.size() <= 8) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_impl(xs.first(half)) + pairwise_impl(xs.subspan(half));
}
}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise_impl(xs); }
cplx pairwise_sum(std::span<const cplx> xs) { return pairwise_impl(xs); }

std::string format_double(double x) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  std::string out = format_double(z.real());
  out += (std::signbit(z.imag()) ? "-" : "+");
  out += format_double(std::abs(z.imag()));
  out += "i";
  return out;
}

double arg_increment(cplx from, cplx to) { return std::arg(to / from); }

}  // namespace critline::util
