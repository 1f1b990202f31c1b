#include "hlf/gf2.hpp"

#include <string>
#include <utility>

#include "hlf/error.hpp"

namespace hlf::gf2 {

namespace {

using Word = BitVector::Word;

// dst ^= src over words [first, end). Callers guarantee src is zero below `first`.
inline void xor_tail(BitVector& dst, const BitVector& src, std::size_t first) {
  Word* d = dst.data();
  const Word* s = src.data();
  const std::size_t end = dst.word_count();
  for (std::size_t w = first; w < end; ++w) {
    d[w] ^= s[w];
  }
}

// Row-reduces `rows` in place over the first `columns` columns. Returns pivot
// columns. With `reduce`, entries above each pivot are cleared too.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t columns, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].test(col)) {
      ++found;
    }
    if (found == rows.size()) {
      continue;
    }
    if (found != next) {
      std::swap(rows[found], rows[next]);
    }
    const std::size_t first_word = col / BitVector::kWordBits;
    const BitVector& pivot_row = rows[next];
    for (std::size_t i = reduce ? 0 : next + 1; i < rows.size(); ++i) {
      if (i != next && rows[i].test(col)) {
        xor_tail(rows[i], pivot_row, first_word);
      }
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

EliminationResult rank_and_pivots(const BitMatrix& m) {
  std::vector<BitVector> rows(m.rows().begin(), m.rows().end());
  auto pivots = eliminate(rows, m.size(), /*reduce=*/true);
  EliminationResult result;
  result.rank = pivots.size();
  result.pivots = std::move(pivots);
  result.rref = BitMatrix::from_rows(std::move(rows));
  return result;
}

std::size_t rank_of_rows(std::span<const BitVector> rows) {
  if (rows.empty()) {
    return 0;
  }
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) {
      throw ValidationError("rank_of_rows: rows of unequal length");
    }
  }
  std::vector<BitVector> work(rows.begin(), rows.end());
  return eliminate(work, width, /*reduce=*/false).size();
}

std::vector<BitVector> kernel_basis(const EliminationResult& elim) {
  const std::size_t n = elim.rref.size();
  std::vector<bool> is_pivot(n, false);
  for (const std::size_t p : elim.pivots) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  basis.reserve(n - elim.rank);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector v(n);
    v.set(f);
    // pivot row k reads x_{p_k} + sum_{free g} rref[k][g] x_g = 0
    for (std::size_t k = 0; k < elim.rank; ++k) {
      if (elim.rref.get(k, f)) {
        v.set(elim.pivots[k]);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) { return kernel_basis(rank_and_pivots(m)); }

std::optional<BitVector> solve_affine(std::span<const BitVector> rows, const BitVector& rhs,
                                      std::size_t width) {
  if (rhs.size() != rows.size()) {
    throw ValidationError("solve_affine: rhs has " + std::to_string(rhs.size()) + " bits for " +
                          std::to_string(rows.size()) + " equations");
  }
  // Augment each row with its right-hand side in column `width`.
  std::vector<BitVector> aug;
  aug.reserve(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != width) {
      throw ValidationError("solve_affine: row length differs from system width");
    }
    BitVector a(width + 1);
    for (std::size_t w = 0; w < rows[j].word_count(); ++w) {
      a.data()[w] = rows[j].data()[w];
    }
    a.set(width, rhs.test(j));
    aug.push_back(std::move(a));
  }
  const auto pivots = eliminate(aug, width, /*reduce=*/true);
  for (std::size_t k = pivots.size(); k < aug.size(); ++k) {
    if (aug[k].test(width)) {
      return std::nullopt;  // 0...0 | 1
    }
  }
  BitVector z(width);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    z.set(pivots[k], aug[k].test(width));
  }
  return z;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.size()) {
    throw ValidationError("mat_vec: vector length " + std::to_string(v.size()) + " for " +
                          std::to_string(m.size()) + "x" + std::to_string(m.size()) + " matrix");
  }
  BitVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.row(i).dot(v)) {
      out.set(i);
    }
  }
  return out;
}

unsigned quad_form_mod4(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.size()) {
    throw ValidationError("quad_form_mod4: vector length does not match matrix size");
  }
  // sum_{i: x_i} |row_i AND x| counts the diagonal once and every off-diagonal pair twice
  std::size_t total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x.test(i)) {
      total += m.row(i).and_count(x);
    }
  }
  return static_cast<unsigned>(total & 3u);
}

BitVector xor_rows(const BitMatrix& m, std::span<const std::size_t> indices) {
  BitVector acc(m.size());
  for (const std::size_t i : indices) {
    if (i >= m.size()) {
      throw ValidationError("xor_rows: row index " + std::to_string(i + 1) + " out of range [1, " +
                            std::to_string(m.size()) + "]");
    }
    acc ^= m.row(i);
  }
  return acc;
}

}  // namespace hlf::gf2
