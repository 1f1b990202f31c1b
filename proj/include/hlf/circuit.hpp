#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hlf/bit_vector.hpp"
#include "hlf/cla.hpp"
#include "hlf/instance.hpp"

namespace hlf {

/// Gate-level netlist of the constant-depth classical circuit.
///
/// Wire group i carries (R_i, y_i, b_i). Each ROU gate on (i, j) does
/// y_i ^= R_j, y_j ^= R_i; the Toffoli layer does y_i ^= b_i R_i; the final
/// CNOT layer emits z = y ^ z_a.
struct LayeredCircuit {
  std::size_t n = 0;
  std::vector<std::vector<Edge>> rou_layers;
  BitVector toffoli_controls;
  BitVector final_controls;

  /// ROU layers + Toffoli layer + final CNOT layer.
  std::size_t depth() const { return rou_layers.size() + 2; }
  /// Layers before the final CNOT layer (ROU layers + Toffoli layer).
  std::size_t pipeline_layers() const { return rou_layers.size() + 1; }
  std::size_t gate_count() const;
};

struct WireState {
  BitVector r;
  BitVector y;
  BitVector b;
};

struct CircuitOutput {
  /// Red wires after the Toffoli layer; equals A R.
  BitVector y;
  /// Output after the final CNOT layer; equals y ^ z_a.
  BitVector z;
};

/// ROU layers from edge_coloring(inst), Toffoli controls b, final controls z_a.
LayeredCircuit compile_cpc(const HlfInstance& inst, const ClaSummary& cla);

WireState initial_wires(const LayeredCircuit& c, const BitVector& r);
void apply_rou(WireState& s, std::size_t i, std::size_t j);
void apply_toffoli_layer(WireState& s);

/// Evaluates the netlist gate by gate.
CircuitOutput eval_circuit(const LayeredCircuit& c, const BitVector& r);

/// True iff for `trials` uniform random R the gate-level y equals A R.
/// Instances with n <= 16 and trials >= 2^n are checked exhaustively instead.
bool check_circuit_matvec(const LayeredCircuit& c, const HlfInstance& inst, std::size_t trials,
                          std::uint64_t seed = 0x5eed);
bool check_circuit_matvec(const HlfInstance& inst, std::size_t trials, std::uint64_t seed = 0x5eed);

}  // namespace hlf
