#include "hlf/timing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hlf {

double runtime_ratio(const TimingParams& p) {
  if (p.n < 2) {
    throw std::domain_error("runtime ratio needs n >= 2");
  }
  if (p.r < 1 || p.d < 1) {
    throw std::domain_error("runtime ratio needs r >= 1 and d >= 1");
  }
  if (!(p.c1 > 0.0 && p.c2 > 0.0 && p.c3 > 0.0)) {
    throw std::domain_error("device coefficients must be positive");
  }
  const double log_n = std::log2(static_cast<double>(p.n));
  const double r = static_cast<double>(p.r);
  const double scaled = std::ldexp(r * static_cast<double>(p.d), static_cast<int>(p.r));  // r 2^r d
  return p.c1 * log_n * log_n / (p.c3 * scaled) + p.c2 / (p.c3 * r);
}

std::size_t r0_bound(double n) {
  if (!(n >= 4.0)) {
    throw std::domain_error("r0 bound needs n >= 4");
  }
  // r >= 2 log2(log2 n)  <=>  2^r >= (log2 n)^2, which stays exact at powers of two
  const double log_n = std::log2(n);
  const double target = log_n * log_n;
  std::size_t r = 0;
  while (std::ldexp(1.0, static_cast<int>(r)) < target) {
    ++r;
  }
  return r;
}

double fpga_time_model(double dt_seconds, double tau_cycles, std::size_t r) {
  if (!(dt_seconds > 0.0)) {
    throw std::domain_error("clock period must be positive");
  }
  if (!(tau_cycles >= 0.0)) {
    throw std::domain_error("pipeline delay must be non-negative");
  }
  if (r > 62) {
    throw std::domain_error("2^r overflows for r = " + std::to_string(r));
  }
  return dt_seconds * (tau_cycles + static_cast<double>(std::uint64_t{1} << r));
}

}  // namespace hlf
