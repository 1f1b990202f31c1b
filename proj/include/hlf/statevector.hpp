#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "hlf/bit_vector.hpp"
#include "hlf/instance.hpp"

namespace hlf {

inline constexpr std::size_t kStatevectorQubitCap = 20;

/// Dense 2^n amplitude vector. Basis string position 1 (BitVector index 0)
/// is the most significant bit of the amplitude index.
///
/// Gates: H = [[1,1],[1,-1]]/sqrt2, S = diag(1, i), CZ = diag(1,1,1,-1).
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  /// |0...0> on `qubits` qubits.
  explicit StateVector(std::size_t qubits);

  std::size_t qubits() const { return qubits_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(const BitVector& z) const { return amps_[index_of(z)]; }

  void apply_h(std::size_t q);
  void apply_s(std::size_t q);
  void apply_cz(std::size_t a, std::size_t b);

  double norm() const;

  std::uint64_t index_of(const BitVector& z) const;
  BitVector basis_string(std::uint64_t index) const;

 private:
  std::uint64_t mask_of(std::size_t q) const { return std::uint64_t{1} << (qubits_ - 1 - q); }

  std::size_t qubits_;
  std::vector<Amplitude> amps_;
};

/// H on all qubits, CZ on every edge, S on each i with b_i = 1, H on all
/// qubits. Norm is checked after each layer. Throws ResourceCapError above
/// kStatevectorQubitCap qubits.
StateVector statevector_run(const HlfInstance& inst);

struct SupportReport {
  std::set<BitVector> support;
  /// Mean |amplitude| over the support (0 when empty).
  double amp_magnitude = 0.0;
  /// Largest | |amplitude| - amp_magnitude | over the support.
  double max_deviation = 0.0;
};

/// Basis strings with |amplitude| > tol.
SupportReport support_of(const StateVector& state, double tol);

/// Repeated measurement in the computational basis until every string in
/// the support has been observed; returns the number of shots taken, or
/// `max_shots` if that limit is hit first.
std::uint64_t shots_to_observe_all(const StateVector& state, double tol, std::mt19937_64& rng,
                                   std::uint64_t max_shots);

}  // namespace hlf
