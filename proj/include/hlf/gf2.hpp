#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hlf/bit_matrix.hpp"
#include "hlf/bit_vector.hpp"

namespace hlf::gf2 {

struct EliminationResult {
  std::size_t rank = 0;
  /// Pivot columns in increasing order (0-based), one per rank.
  std::vector<std::size_t> pivots;
  /// Reduced row-echelon form; row k carries the pivot of pivots[k], rows >= rank are zero.
  BitMatrix rref;
};

/// Forward elimination over columns left to right, taking the first remaining
/// row with a 1 as pivot, then full back-reduction. Pivots are the leftmost
/// maximal independent column set of M.
EliminationResult rank_and_pivots(const BitMatrix& m);

/// Rank of an arbitrary list of equal-length rows (echelon form only, no
/// back-reduction).
std::size_t rank_of_rows(std::span<const BitVector> rows);

/// Canonical free-variable basis of Ker(M): one vector per non-pivot column f,
/// with coordinate f set and pivot coordinates back-substituted.
std::vector<BitVector> kernel_basis(const EliminationResult& elim);
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Some z with rows[j] . z == rhs[j] for every j, free variables fixed to 0.
/// Empty optional if the system is inconsistent. `width` is the length of z
/// and of every row.
std::optional<BitVector> solve_affine(std::span<const BitVector> rows, const BitVector& rhs,
                                      std::size_t width);

BitVector mat_vec(const BitMatrix& m, const BitVector& v);

/// x^T M x mod 4 with 0/1 entries lifted to the integers.
unsigned quad_form_mod4(const BitMatrix& m, const BitVector& x);

/// XOR of the rows indexed by `indices` (0-based). Repeated indices cancel.
BitVector xor_rows(const BitMatrix& m, std::span<const std::size_t> indices);

}  // namespace hlf::gf2
