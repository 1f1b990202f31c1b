#include "hlf/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hlf/error.hpp"

namespace hlf {

using nlohmann::json;

std::vector<Edge> HlfInstance::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (a_.get(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t HlfInstance::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const std::size_t deg = a_.row(i).count() - (b_.test(i) ? 1 : 0);
    best = std::max(best, deg);
  }
  return best;
}

std::vector<Edge> grid_edges(std::size_t side) {
  std::vector<Edge> out;
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      const std::size_t v = row * side + col;
      if (col + 1 < side) {
        out.emplace_back(v, v + 1);
      }
      if (row + 1 < side) {
        out.emplace_back(v, v + side);
      }
    }
  }
  return out;
}

HlfInstance build_grid_instance(std::size_t side, const BitVector& b) {
  if (side == 0) {
    throw ValidationError("grid side length must be at least 1");
  }
  const std::size_t n = side * side;
  if (b.size() != n) {
    throw ValidationError("grid " + std::to_string(side) + "x" + std::to_string(side) + " needs b of length " +
                          std::to_string(n) + ", got " + std::to_string(b.size()));
  }
  HlfInstance inst;
  inst.a_ = BitMatrix(n);
  for (const auto& [i, j] : grid_edges(side)) {
    inst.a_.set_symmetric(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    inst.a_.set(i, i, b.test(i));
  }
  inst.b_ = b;
  inst.grid_side_ = side;
  return inst;
}

HlfInstance build_general_instance(const BitMatrix& a) {
  if (a.size() == 0) {
    throw ValidationError("instance matrix must be non-empty");
  }
  if (!a.is_symmetric()) {
    throw ValidationError("instance matrix is not symmetric");
  }
  HlfInstance inst;
  inst.a_ = a;
  inst.b_ = a.diagonal();
  return inst;
}

HlfInstance random_general_instance(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(edge_probability);
  std::bernoulli_distribution coin(0.5);
  BitMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, i, coin(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        a.set_symmetric(i, j);
      }
    }
  }
  return build_general_instance(a);
}

HlfInstance random_grid_instance(std::size_t side, std::mt19937_64& rng) {
  return build_grid_instance(side, BitVector::random(side * side, rng));
}

namespace {

EdgeColoring grid_coloring(std::size_t side) {
  EdgeColoring coloring;
  coloring.layers.resize(4);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      const std::size_t v = row * side + col;
      // col/row are 0-based here, so "odd 1-based" means even 0-based
      if (col + 1 < side) {
        coloring.layers[col % 2 == 0 ? 0 : 1].emplace_back(v, v + 1);
      }
      if (row + 1 < side) {
        coloring.layers[row % 2 == 0 ? 2 : 3].emplace_back(v, v + side);
      }
    }
  }
  std::erase_if(coloring.layers, [](const auto& layer) { return layer.empty(); });
  return coloring;
}

EdgeColoring greedy_coloring(const HlfInstance& inst) {
  EdgeColoring coloring;
  // used[c] marks the vertices already matched in layer c
  std::vector<std::vector<bool>> used;
  for (const auto& edge : inst.edges()) {
    std::size_t c = 0;
    while (c < used.size() && (used[c][edge.first] || used[c][edge.second])) {
      ++c;
    }
    if (c == used.size()) {
      used.emplace_back(inst.size(), false);
      coloring.layers.emplace_back();
    }
    used[c][edge.first] = used[c][edge.second] = true;
    coloring.layers[c].push_back(edge);
  }
  return coloring;
}

std::size_t vertex_index(const json& value, std::size_t n) {
  if (!value.is_number_integer()) {
    throw ValidationError("edge endpoint must be an integer");
  }
  const auto v = value.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > n) {
    throw ValidationError("edge endpoint " + std::to_string(v) + " out of range [1, " + std::to_string(n) + "]");
  }
  return static_cast<std::size_t>(v - 1);
}

std::size_t parse_count(std::string_view text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 9) {
    throw ValidationError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(std::stoul(std::string(text)));
}

HlfInstance parse_grid_shorthand(std::string_view text) {
  // grid:N:b
  const auto rest = text.substr(5);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("grid shorthand must look like grid:N:b");
  }
  const std::size_t side = parse_count(rest.substr(0, colon), "grid side length");
  return build_grid_instance(side, BitVector::parse(rest.substr(colon + 1)));
}

HlfInstance parse_json_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("instance document must be a JSON object");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ValidationError("instance document needs a positive integer \"n\"");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  if (!doc.contains("b") || !doc["b"].is_string()) {
    throw ValidationError("instance document needs a bitstring \"b\"");
  }
  const BitVector b = BitVector::parse(doc["b"].get<std::string>());
  if (b.size() != n) {
    throw ValidationError("\"b\" has length " + std::to_string(b.size()) + " but n = " + std::to_string(n));
  }

  const bool has_edges = doc.contains("edges");
  const bool has_matrix = doc.contains("A");
  if (has_edges == has_matrix) {
    throw ValidationError("instance document needs exactly one of \"edges\" or \"A\"");
  }

  BitMatrix a(n);
  if (has_edges) {
    if (!doc["edges"].is_array()) {
      throw ValidationError("\"edges\" must be an array of [i, j] pairs");
    }
    std::set<Edge> seen;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("each edge must be a [i, j] pair");
      }
      std::size_t i = vertex_index(e[0], n);
      std::size_t j = vertex_index(e[1], n);
      if (i == j) {
        throw ValidationError("self-loop edge [" + std::to_string(i + 1) + ", " + std::to_string(i + 1) +
                              "]; diagonal entries come from \"b\"");
      }
      if (i > j) {
        std::swap(i, j);
      }
      if (!seen.insert({i, j}).second) {
        throw ValidationError("duplicate edge [" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "]");
      }
      a.set_symmetric(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, i, b.test(i));
    }
  } else {
    if (!doc["A"].is_array() || doc["A"].size() != n) {
      throw ValidationError("\"A\" must be an array of n row bitstrings");
    }
    std::vector<BitVector> rows;
    for (const auto& r : doc["A"]) {
      if (!r.is_string()) {
        throw ValidationError("\"A\" rows must be bitstrings");
      }
      rows.push_back(BitVector::parse(r.get<std::string>()));
    }
    a = BitMatrix::from_rows(std::move(rows));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a.get(i, j) != a.get(j, i)) {
          throw ValidationError("symmetry violation: A[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "] != A[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]");
        }
      }
    }
    if (a.diagonal() != b) {
      throw ValidationError("diagonal of \"A\" does not match \"b\"");
    }
  }

  if (doc.contains("N") && !doc["N"].is_null()) {
    if (!doc["N"].is_number_integer() || doc["N"].get<long long>() < 1) {
      throw ValidationError("\"N\" must be a positive integer");
    }
    const auto side = static_cast<std::size_t>(doc["N"].get<long long>());
    if (side * side != n) {
      throw ValidationError("N^2 = " + std::to_string(side * side) + " does not equal n = " + std::to_string(n));
    }
    HlfInstance grid = build_grid_instance(side, b);
    if (grid.matrix() != a) {
      throw ValidationError("edges do not match the all-connected " + std::to_string(side) + "x" +
                            std::to_string(side) + " grid");
    }
    return grid;
  }
  return build_general_instance(a);
}

}  // namespace

EdgeColoring edge_coloring(const HlfInstance& inst) {
  if (const auto side = inst.grid_side()) {
    return grid_coloring(*side);
  }
  return greedy_coloring(inst);
}

std::string serialize_instance(const HlfInstance& inst) {
  json doc;
  doc["n"] = inst.size();
  if (const auto side = inst.grid_side()) {
    doc["N"] = *side;
  }
  doc["b"] = inst.diagonal().to_string();
  json edges = json::array();
  for (const auto& [i, j] : inst.edges()) {
    edges.push_back({i + 1, j + 1});
  }
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

HlfInstance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw ValidationError("empty instance document");
  }
  text = text.substr(first);
  const auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(0, last + 1);
  if (text.starts_with("grid:")) {
    return parse_grid_shorthand(text);
  }
  return parse_json_instance(text);
}

HlfInstance load_instance(const std::string& spec) {
  if (spec.starts_with("grid:")) {
    return parse_grid_shorthand(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw ValidationError("cannot open instance file '" + spec + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace hlf
