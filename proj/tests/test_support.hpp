#pragma once

// Test-only helpers. The naive_* functions are deliberately written with
// plain loops over get()/test() so they share nothing with the packed
// implementations they check.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hlf/bit_matrix.hpp"
#include "hlf/bit_vector.hpp"

namespace hlf::testing {

inline BitVector bv(const std::string& s) { return BitVector::parse(s); }

inline BitMatrix mat(std::initializer_list<const char*> rows) {
  std::vector<BitVector> out;
  for (const char* r : rows) {
    out.push_back(BitVector::parse(r));
  }
  return BitMatrix::from_rows(std::move(out));
}

inline std::set<std::string> strings(const std::set<BitVector>& s) {
  std::set<std::string> out;
  for (const auto& v : s) {
    out.insert(v.to_string());
  }
  return out;
}

template <class Range>
std::set<std::string> strings_of(const Range& range) {
  std::set<std::string> out;
  for (const auto& v : range) {
    out.insert(v.to_string());
  }
  return out;
}

inline BitVector naive_mat_vec(const BitMatrix& m, const BitVector& v) {
  BitVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      acc += (m.get(i, j) && v.test(j)) ? 1 : 0;
    }
    out.set(i, acc % 2 == 1);
  }
  return out;
}

inline unsigned naive_q(const BitMatrix& m, const BitVector& x) {
  long total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      total += (m.get(i, j) && x.test(i) && x.test(j)) ? 1 : 0;
    }
  }
  return static_cast<unsigned>(total % 4);
}

/// Ker(M) by trying all 2^n vectors (n <= 20).
inline std::set<std::string> naive_kernel(const BitMatrix& m) {
  std::set<std::string> out;
  const std::size_t n = m.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const BitVector v = BitVector::from_uint(n, x);
    if (naive_mat_vec(m, v).none()) {
      out.insert(v.to_string());
    }
  }
  return out;
}

/// Span of a list of vectors, enumerated by all subsets (small lists only).
inline std::set<std::string> naive_span(const std::vector<BitVector>& vectors, std::size_t n) {
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vectors.size()); ++mask) {
    BitVector acc(n);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if ((mask >> k) & 1u) {
        acc ^= vectors[k];
      }
    }
    out.insert(acc.to_string());
  }
  return out;
}

/// Rank over GF(2) of small row sets (<= 20 rows) as log2 of the span size.
inline std::size_t naive_rank(const std::vector<BitVector>& rows, std::size_t n) {
  const std::size_t size = naive_span(rows, n).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < size) {
    ++r;
  }
  return r;
}

inline BitMatrix random_matrix(std::size_t n, std::mt19937_64& rng, bool symmetric) {
  BitMatrix m(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      const bool bit = coin(rng);
      if (symmetric) {
        m.set_symmetric(i, j, bit);
      } else {
        m.set(i, j, bit);
      }
    }
  }
  return m;
}

}  // namespace hlf::testing
