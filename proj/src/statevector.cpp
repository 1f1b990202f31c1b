#include "hlf/statevector.hpp"

#include <cmath>
#include <string>

#include "hlf/error.hpp"

namespace hlf {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_norm(const StateVector& s, const char* layer) {
  const double deviation = std::abs(s.norm() - 1.0);
  if (deviation > kNormTolerance) {
    throw ConsistencyError(std::string("state norm drifted by ") + std::to_string(deviation) + " after " + layer);
  }
}

}  // namespace

StateVector::StateVector(std::size_t qubits) : qubits_(qubits) {
  if (qubits > kStatevectorQubitCap) {
    throw ResourceCapError("statevector limited to " + std::to_string(kStatevectorQubitCap) + " qubits, asked for " +
                           std::to_string(qubits));
  }
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::apply_h(std::size_t q) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::uint64_t m = mask_of(q);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & m) {
      continue;
    }
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | m];
    amps_[i] = (a0 + a1) * inv_sqrt2;
    amps_[i | m] = (a0 - a1) * inv_sqrt2;
  }
}

void StateVector::apply_s(std::size_t q) {
  const std::uint64_t m = mask_of(q);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & m) {
      amps_[i] *= Amplitude{0.0, 1.0};
    }
  }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
  const std::uint64_t both = mask_of(a) | mask_of(b);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & both) == both) {
      amps_[i] = -amps_[i];
    }
  }
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

std::uint64_t StateVector::index_of(const BitVector& z) const {
  if (z.size() != qubits_) {
    throw ValidationError("basis string length does not match qubit count");
  }
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < qubits_; ++q) {
    if (z.test(q)) {
      index |= mask_of(q);
    }
  }
  return index;
}

BitVector StateVector::basis_string(std::uint64_t index) const {
  BitVector z(qubits_);
  for (std::size_t q = 0; q < qubits_; ++q) {
    if (index & mask_of(q)) {
      z.set(q);
    }
  }
  return z;
}

StateVector statevector_run(const HlfInstance& inst) {
  const std::size_t n = inst.size();
  StateVector state(n);
  for (std::size_t q = 0; q < n; ++q) {
    state.apply_h(q);
  }
  check_norm(state, "first Hadamard layer");
  for (const auto& [i, j] : inst.edges()) {
    state.apply_cz(i, j);
  }
  check_norm(state, "CZ layers");
  for (std::size_t q = 0; q < n; ++q) {
    if (inst.diagonal().test(q)) {
      state.apply_s(q);
    }
  }
  check_norm(state, "S layer");
  for (std::size_t q = 0; q < n; ++q) {
    state.apply_h(q);
  }
  check_norm(state, "final Hadamard layer");
  return state;
}

SupportReport support_of(const StateVector& state, double tol) {
  SupportReport report;
  double total = 0.0;
  std::vector<double> magnitudes;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double mag = std::abs(amps[i]);
    if (mag > tol) {
      report.support.insert(state.basis_string(i));
      magnitudes.push_back(mag);
      total += mag;
    }
  }
  if (magnitudes.empty()) {
    return report;
  }
  report.amp_magnitude = total / static_cast<double>(magnitudes.size());
  for (const double mag : magnitudes) {
    report.max_deviation = std::max(report.max_deviation, std::abs(mag - report.amp_magnitude));
  }
  return report;
}

std::uint64_t shots_to_observe_all(const StateVector& state, double tol, std::mt19937_64& rng,
                                   std::uint64_t max_shots) {
  const auto amps = state.amplitudes();
  std::vector<double> probabilities;
  probabilities.reserve(amps.size());
  std::size_t outstanding = 0;
  for (const auto& a : amps) {
    probabilities.push_back(std::norm(a));
    if (std::abs(a) > tol) {
      ++outstanding;
    }
  }
  std::discrete_distribution<std::uint64_t> measure(probabilities.begin(), probabilities.end());
  std::vector<bool> seen(amps.size(), false);
  std::uint64_t shots = 0;
  while (outstanding > 0 && shots < max_shots) {
    const auto outcome = measure(rng);
    ++shots;
    if (!seen[outcome] && std::abs(amps[outcome]) > tol) {
      seen[outcome] = true;
      --outstanding;
    }
  }
  return shots;
}

}  // namespace hlf
