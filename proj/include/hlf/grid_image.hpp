#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlf/bit_vector.hpp"

namespace hlf {

inline constexpr std::size_t kImageBitCap = 28;

/// Occupancy image of a set of n-bit strings: the first ceil(n/2) bits (bit 1
/// most significant) select the column, the last floor(n/2) bits the row.
/// Row 0 is the top line of the bitmap.
struct GridImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<bool> cells;  // row-major

  bool at(std::size_t col, std::size_t row) const { return cells[row * width + col]; }
  friend bool operator==(const GridImage&, const GridImage&) = default;
};

/// Throws ValidationError on mixed lengths, ResourceCapError for n > kImageBitCap.
GridImage render_distribution_grid(std::span<const BitVector> solutions, std::size_t n);
GridImage render_distribution_grid(const std::set<BitVector>& solutions, std::size_t n);

/// Inverse of render_distribution_grid for strings of length n.
std::set<BitVector> image_solutions(const GridImage& image, std::size_t n);

/// Portable bitmap: "P1" plain text when `plain`, otherwise packed "P4".
std::string write_pbm(const GridImage& image, bool plain);
/// Reads either P1 or P4.
GridImage parse_pbm(std::string_view data);

}  // namespace hlf
