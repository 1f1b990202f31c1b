#include "hlf/circuit.hpp"

#include <random>
#include <string>

#include "hlf/error.hpp"
#include "hlf/gf2.hpp"

namespace hlf {

std::size_t LayeredCircuit::gate_count() const {
  std::size_t gates = 0;
  for (const auto& layer : rou_layers) {
    gates += layer.size();
  }
  return gates + 2 * n;
}

LayeredCircuit compile_cpc(const HlfInstance& inst, const ClaSummary& cla) {
  if (cla.n != inst.size() || cla.z_a.size() != inst.size()) {
    throw ValidationError("summary is for n = " + std::to_string(cla.n) + " but instance has n = " +
                          std::to_string(inst.size()));
  }
  LayeredCircuit c;
  c.n = inst.size();
  c.rou_layers = edge_coloring(inst).layers;
  c.toffoli_controls = inst.diagonal();
  c.final_controls = cla.z_a;
  return c;
}

WireState initial_wires(const LayeredCircuit& c, const BitVector& r) {
  if (r.size() != c.n) {
    throw ValidationError("input R has length " + std::to_string(r.size()) + " for a circuit on " +
                          std::to_string(c.n) + " wire groups");
  }
  return WireState{r, BitVector(c.n), c.toffoli_controls};
}

void apply_rou(WireState& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.r.size();
  if (i >= n || j >= n || i == j) {
    throw ValidationError("ROU gate on invalid wire pair (" + std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
  }
  const bool ri = s.r.test(i);
  const bool rj = s.r.test(j);
  if (rj) {
    s.y.flip(i);
  }
  if (ri) {
    s.y.flip(j);
  }
}

void apply_toffoli_layer(WireState& s) { s.y ^= s.b & s.r; }

CircuitOutput eval_circuit(const LayeredCircuit& c, const BitVector& r) {
  WireState s = initial_wires(c, r);
  for (const auto& layer : c.rou_layers) {
    for (const auto& [i, j] : layer) {
      apply_rou(s, i, j);
    }
  }
  apply_toffoli_layer(s);
  BitVector z = s.y ^ c.final_controls;
  return CircuitOutput{std::move(s.y), std::move(z)};
}

bool check_circuit_matvec(const LayeredCircuit& c, const HlfInstance& inst, std::size_t trials,
                          std::uint64_t seed) {
  const std::size_t n = inst.size();
  const auto agrees = [&](const BitVector& r) { return eval_circuit(c, r).y == gf2::mat_vec(inst.matrix(), r); };
  if (n <= 16 && trials >= (std::size_t{1} << n)) {
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << n); ++value) {
      if (!agrees(BitVector::from_uint(n, value))) {
        return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    if (!agrees(BitVector::random(n, rng))) {
      return false;
    }
  }
  return true;
}

bool check_circuit_matvec(const HlfInstance& inst, std::size_t trials, std::uint64_t seed) {
  return check_circuit_matvec(compile_cpc(inst, run_cla(inst)), inst, trials, seed);
}

}  // namespace hlf
