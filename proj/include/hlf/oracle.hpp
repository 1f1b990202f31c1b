#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "hlf/bit_matrix.hpp"
#include "hlf/bit_vector.hpp"
#include "hlf/cla.hpp"
#include "hlf/instance.hpp"

namespace hlf {

inline constexpr std::size_t kKernelSpanCap = 24;
inline constexpr std::size_t kBruteForceCap = 20;

/// True iff 2 (z . x) == q(x) mod 4 for every x in Ker(A).
///
/// When dim Ker(A) <= kKernelSpanCap the whole kernel span is walked.
/// Above that the check falls back to the basis, which is only sound once
/// verify_q_linearity has passed; if it fails, ResourceCapError is thrown.
bool check_solution(const HlfInstance& inst, const ClaSummary& cla, const BitVector& z);
bool check_solution(const HlfInstance& inst, const BitVector& z);

/// Every z in {0,1}^n that solves the instance, found by trying all 2^n
/// candidates against a kernel that is itself found by trying all 2^n
/// vectors. Uses no elimination. Throws ResourceCapError for n > kBruteForceCap.
std::set<BitVector> brute_force_solutions(const HlfInstance& inst);

/// Rank by inserting columns one at a time into a leading-bit XOR basis.
/// Shares no code with gf2::rank_and_pivots.
std::size_t greedy_column_rank(const BitMatrix& m);

/// Strict dependence of vertex set V (0-based) through the graph: collect the
/// vertices C adjacent to V (self-loops from b count), then require
/// deg_V(l) even for every l in C. Equals xor_rows(A, V) == 0.
bool strict_dependence(const HlfInstance& inst, std::span<const std::size_t> vertices);

struct RankBoundReport {
  std::size_t rank = 0;
  /// n - N
  std::size_t lower = 0;
  /// lower <= rank <= n
  bool within = false;
  /// rows 1..n-N of A are linearly independent
  bool first_rows_independent = false;
  /// for b = 0 the rank must be exactly n - N; true for other b
  bool exact_when_b_zero = false;

  bool ok() const { return within && first_rows_independent && exact_when_b_zero; }
};

/// Rank interval checks on the N x N grid with diagonal b. Requires N >= 2.
RankBoundReport rank_bound_check(std::size_t side, const BitVector& b);

struct VerificationReport {
  bool agrees = false;
  std::size_t set_size = 0;
  std::size_t rank = 0;
  /// Statevector fields are absent when n exceeds the qubit cap.
  std::optional<double> amp_magnitude;
  std::optional<double> max_deviation;
  bool brute_force_checked = false;
  bool statevector_checked = false;
  std::string detail;

  std::string to_json() const;
};

/// Enumerated set vs brute-force set vs statevector support (within caps),
/// plus uniform magnitude 2^{-r/2} on the support and |set| == 2^r. Above
/// the caps, every enumerated solution is checked with check_solution.
VerificationReport verify_instance(const HlfInstance& inst, double tol = 1e-9);

}  // namespace hlf
