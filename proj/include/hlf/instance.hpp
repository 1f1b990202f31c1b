#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlf/bit_matrix.hpp"
#include "hlf/bit_vector.hpp"

namespace hlf {

/// Undirected edge between distinct vertices, stored with first < second (0-based).
using Edge = std::pair<std::size_t, std::size_t>;

/// An HLF problem instance: symmetric A whose diagonal is b.
///
/// Grid instances remember the side length N; vertex v sits at row v / N,
/// column v % N (row-major, vertex 0 top-left).
class HlfInstance {
 public:
  std::size_t size() const { return a_.size(); }
  const BitMatrix& matrix() const { return a_; }
  const BitVector& diagonal() const { return b_; }
  std::optional<std::size_t> grid_side() const { return grid_side_; }
  bool is_grid() const { return grid_side_.has_value(); }

  /// Off-diagonal support of A as (i < j) pairs in row-major order.
  std::vector<Edge> edges() const;
  std::size_t max_degree() const;

  friend bool operator==(const HlfInstance&, const HlfInstance&) = default;

 private:
  friend HlfInstance build_grid_instance(std::size_t side, const BitVector& b);
  friend HlfInstance build_general_instance(const BitMatrix& a);

  BitMatrix a_;
  BitVector b_;
  std::optional<std::size_t> grid_side_;
};

/// All-connected N x N grid with nearest-neighbour edges and diagonal b.
HlfInstance build_grid_instance(std::size_t side, const BitVector& b);
/// Any symmetric 0/1 matrix; throws ValidationError if not symmetric.
HlfInstance build_general_instance(const BitMatrix& a);

/// Nearest-neighbour edges of the N x N grid.
std::vector<Edge> grid_edges(std::size_t side);

/// Random symmetric instance: each off-diagonal pair present with probability
/// `edge_probability`, each diagonal bit uniform.
HlfInstance random_general_instance(std::size_t n, double edge_probability, std::mt19937_64& rng);
HlfInstance random_grid_instance(std::size_t side, std::mt19937_64& rng);

struct EdgeColoring {
  /// Each layer is a matching; layers are non-empty.
  std::vector<std::vector<Edge>> layers;
};

/// Grid instances: canonical colouring (horizontal edges from odd columns,
/// horizontal from even columns, vertical from odd rows, vertical from even
/// rows, 1-based). General instances: first-fit greedy over edges(), at most
/// 2*max_degree - 1 layers.
EdgeColoring edge_coloring(const HlfInstance& inst);

/// JSON document {"n", "N"?, "b", "edges": [[i, j], ...]} with 1-based vertices.
std::string serialize_instance(const HlfInstance& inst);

/// Accepts the JSON document above (an "A" array of row strings may replace
/// "edges") or the inline shorthand "grid:N:b".
HlfInstance parse_instance(std::string_view text);

/// `spec` is either the "grid:N:b" shorthand or a path to a JSON document.
HlfInstance load_instance(const std::string& spec);

}  // namespace hlf
