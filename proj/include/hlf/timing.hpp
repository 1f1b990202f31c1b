#pragma once

#include <cstddef>
#include <cstdint>

namespace hlf {

/// Device coefficients (seconds per unit) and instance shape for the
/// classical-vs-quantum runtime comparison. Logarithms are base 2.
struct TimingParams {
  double c1 = 1.0;  // linear-algebra stage, per log^2 n
  double c2 = 1.0;  // enumeration circuit, per solution
  double c3 = 1.0;  // quantum device, per r 2^r repetition unit
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t d = 1;  // circuit depth
};

/// c1 log2(n)^2 / (c3 r 2^r d) + c2 / (c3 r).
/// Throws std::domain_error for n < 2, r < 1, d < 1 or non-positive coefficients.
double runtime_ratio(const TimingParams& p);

/// Smallest integer r with r >= 2 log2(log2 n). Throws std::domain_error for n < 4.
std::size_t r0_bound(double n);

/// Pipelined enumeration time dt (tau + 2^r). Throws std::domain_error for
/// dt <= 0, tau < 0 or r > 62.
double fpga_time_model(double dt_seconds, double tau_cycles, std::size_t r);

}  // namespace hlf
