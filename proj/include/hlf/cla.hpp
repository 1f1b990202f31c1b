#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hlf/bit_vector.hpp"
#include "hlf/instance.hpp"

namespace hlf {

/// Linear-algebra summary of an instance: everything the enumeration circuit
/// needs, computable ahead of time.
struct ClaSummary {
  std::size_t n = 0;
  std::size_t rank = 0;
  /// Pivot columns of A, increasing, 0-based.
  std::vector<std::size_t> pivots;
  /// Basis of Ker(A), n - rank vectors.
  std::vector<BitVector> kernel;
  /// q(v) for each kernel basis vector; always 0 or 2.
  std::vector<unsigned> q_basis;
  /// One particular solution: 2 (z_a . v) == q(v) mod 4 on the kernel.
  BitVector z_a;

  friend bool operator==(const ClaSummary&, const ClaSummary&) = default;
};

/// Rank, pivots, kernel basis, q on the basis and a particular solution.
/// Throws ConsistencyError if some q(v) is odd or the z_a system is
/// inconsistent; neither can happen for a symmetric A.
ClaSummary run_cla(const HlfInstance& inst);

/// True iff q(v) is in {0, 2} for each basis vector and
/// q(u ^ v) == q(u) + q(v) mod 4 for every pair of basis vectors.
bool verify_q_linearity(const HlfInstance& inst, std::span<const BitVector> kernel);

/// {"n", "r", "P", "kernel", "q_basis", "z_a"}, pivots 1-based.
std::string cla_to_json(const ClaSummary& cla);
ClaSummary cla_from_json(std::string_view text);

}  // namespace hlf
