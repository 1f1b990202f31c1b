#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlf/bit_vector.hpp"

namespace hlf {

/// Square n x n matrix over GF(2), stored as n packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, BitVector(n)) {}

  static BitMatrix identity(std::size_t n);
  /// Rows must all have length rows.size().
  static BitMatrix from_rows(std::vector<BitVector> rows);
  /// n lines of n '0'/'1' characters; blank lines and surrounding whitespace ignored.
  static BitMatrix parse(std::string_view text);

  std::size_t size() const { return rows_.size(); }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  std::span<const BitVector> rows() const { return rows_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }
  /// Sets both (i, j) and (j, i).
  void set_symmetric(std::size_t i, std::size_t j, bool value = true) {
    rows_[i].set(j, value);
    rows_[j].set(i, value);
  }

  BitVector column(std::size_t j) const;
  BitVector diagonal() const;
  bool is_symmetric() const;

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
};

}  // namespace hlf
