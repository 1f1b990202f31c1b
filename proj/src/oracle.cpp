#include "hlf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hlf/enumerate.hpp"
#include "hlf/error.hpp"
#include "hlf/gf2.hpp"
#include "hlf/statevector.hpp"

namespace hlf {

namespace {

struct KernelElement {
  BitVector x;
  unsigned q;
};

// Every element of span(basis) paired with q(x), walked in Gray order.
std::vector<KernelElement> kernel_span(const BitMatrix& a, std::span<const BitVector> basis) {
  std::vector<KernelElement> out;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  out.reserve(static_cast<std::size_t>(total));
  BitVector x(a.size());
  out.push_back({x, 0});
  for (std::uint64_t t = 1; t < total; ++t) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
    out.push_back({x, gf2::quad_form_mod4(a, x)});
  }
  return out;
}

bool satisfies(const BitVector& z, std::span<const KernelElement> elements) {
  return std::all_of(elements.begin(), elements.end(),
                     [&](const KernelElement& e) { return (z.dot(e.x) ? 2u : 0u) == e.q; });
}

std::vector<KernelElement> checked_elements(const HlfInstance& inst, const ClaSummary& cla) {
  if (cla.kernel.size() <= kKernelSpanCap) {
    return kernel_span(inst.matrix(), cla.kernel);
  }
  if (!verify_q_linearity(inst, cla.kernel)) {
    throw ResourceCapError("kernel dimension " + std::to_string(cla.kernel.size()) +
                           " too large to walk and q is not linear on the basis");
  }
  std::vector<KernelElement> basis_only;
  for (const auto& v : cla.kernel) {
    basis_only.push_back({v, gf2::quad_form_mod4(inst.matrix(), v)});
  }
  return basis_only;
}

}  // namespace

bool check_solution(const HlfInstance& inst, const ClaSummary& cla, const BitVector& z) {
  if (z.size() != inst.size()) {
    throw ValidationError("candidate has length " + std::to_string(z.size()) + " for n = " +
                          std::to_string(inst.size()));
  }
  return satisfies(z, checked_elements(inst, cla));
}

bool check_solution(const HlfInstance& inst, const BitVector& z) { return check_solution(inst, run_cla(inst), z); }

std::set<BitVector> brute_force_solutions(const HlfInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kBruteForceCap) {
    throw ResourceCapError("brute force limited to n <= " + std::to_string(kBruteForceCap) + ", got n = " +
                           std::to_string(n));
  }
  // Plain integer masks: candidate bit k <-> vertex k.
  std::vector<std::uint32_t> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.matrix().get(i, j)) {
        rows[i] |= std::uint32_t{1} << j;
      }
    }
  }
  const std::uint32_t limit = std::uint32_t{1} << n;

  std::vector<std::pair<std::uint32_t, unsigned>> kernel;
  for (std::uint32_t x = 0; x < limit; ++x) {
    bool in_kernel = true;
    unsigned q = 0;
    for (std::size_t i = 0; i < n && in_kernel; ++i) {
      const int overlap = std::popcount(rows[i] & x);
      in_kernel = (overlap % 2) == 0;
      if ((x >> i) & 1u) {
        q += static_cast<unsigned>(overlap);
      }
    }
    if (in_kernel) {
      kernel.emplace_back(x, q % 4);
    }
  }

  std::set<BitVector> solutions;
  for (std::uint32_t z = 0; z < limit; ++z) {
    const bool ok = std::all_of(kernel.begin(), kernel.end(), [z](const auto& e) {
      return static_cast<unsigned>(2 * (std::popcount(z & e.first) % 2)) == e.second;
    });
    if (ok) {
      solutions.insert(BitVector::from_uint(n, z));
    }
  }
  return solutions;
}

std::size_t greedy_column_rank(const BitMatrix& m) {
  // basis keyed by highest set index; each insertion reduces by existing keys
  std::map<std::size_t, BitVector, std::greater<>> basis;
  for (std::size_t j = 0; j < m.size(); ++j) {
    BitVector col = m.column(j);
    for (const auto& [lead, vec] : basis) {
      if (col.test(lead)) {
        col ^= vec;
      }
    }
    if (col.none()) {
      continue;
    }
    std::size_t lead = m.size() - 1;
    while (!col.test(lead)) {
      --lead;
    }
    basis.emplace(lead, std::move(col));
  }
  return basis.size();
}

bool strict_dependence(const HlfInstance& inst, std::span<const std::size_t> vertices) {
  const std::size_t n = inst.size();
  std::vector<bool> in_v(n, false);
  for (const auto v : vertices) {
    if (v >= n) {
      throw ValidationError("vertex " + std::to_string(v + 1) + " out of range [1, " + std::to_string(n) + "]");
    }
    in_v[v] = true;
  }
  // adjacency lists; a b_j = 1 self-loop puts j in its own list
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (const auto& [i, j] : inst.edges()) {
    adjacent[i].push_back(j);
    adjacent[j].push_back(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (inst.diagonal().test(j)) {
      adjacent[j].push_back(j);
    }
  }
  std::vector<std::size_t> degree(n, 0);
  std::set<std::size_t> connected;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_v[v]) {
      continue;
    }
    for (const auto l : adjacent[v]) {
      connected.insert(l);
      ++degree[l];
    }
  }
  return std::all_of(connected.begin(), connected.end(), [&](std::size_t l) { return degree[l] % 2 == 0; });
}

RankBoundReport rank_bound_check(std::size_t side, const BitVector& b) {
  if (side < 2) {
    throw ValidationError("rank bound check needs N >= 2");
  }
  const HlfInstance inst = build_grid_instance(side, b);
  const std::size_t n = inst.size();
  RankBoundReport report;
  report.rank = gf2::rank_of_rows(inst.matrix().rows());
  report.lower = n - side;
  report.within = report.lower <= report.rank && report.rank <= n;
  report.first_rows_independent =
      gf2::rank_of_rows(inst.matrix().rows().first(report.lower)) == report.lower;
  report.exact_when_b_zero = !b.none() || report.rank == report.lower;
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["agrees"] = agrees;
  doc["set_size"] = set_size;
  doc["r"] = rank;
  doc["amp_magnitude"] = amp_magnitude ? nlohmann::json(*amp_magnitude) : nlohmann::json(nullptr);
  doc["max_deviation"] = max_deviation ? nlohmann::json(*max_deviation) : nlohmann::json(nullptr);
  doc["brute_force_checked"] = brute_force_checked;
  doc["statevector_checked"] = statevector_checked;
  if (!detail.empty()) {
    doc["detail"] = detail;
  }
  return doc.dump();
}

VerificationReport verify_instance(const HlfInstance& inst, double tol) {
  VerificationReport report;
  const ClaSummary cla = run_cla(inst);
  report.rank = cla.rank;

  const SolutionEnumerator enumerator(inst, cla);
  const auto listed = enumerator.collect();
  const std::set<BitVector> enumerated(listed.begin(), listed.end());
  report.set_size = enumerated.size();

  const auto fail = [&](std::string why) {
    report.agrees = false;
    report.detail = std::move(why);
    return report;
  };

  if (listed.size() != enumerator.solution_count() || enumerated.size() != listed.size()) {
    return fail("enumeration produced duplicates or a count other than 2^r");
  }
  if (!verify_q_linearity(inst, cla.kernel)) {
    return fail("q is not linear on the kernel basis");
  }

  if (inst.size() <= kBruteForceCap) {
    report.brute_force_checked = true;
    if (brute_force_solutions(inst) != enumerated) {
      return fail("enumerated set differs from brute-force set");
    }
  } else {
    const auto elements = checked_elements(inst, cla);
    for (const auto& z : listed) {
      if (!satisfies(z, elements)) {
        return fail("enumerated string " + z.to_string() + " fails the solution condition");
      }
    }
  }

  if (inst.size() <= kStatevectorQubitCap) {
    report.statevector_checked = true;
    const StateVector state = statevector_run(inst);
    const auto support = support_of(state, tol);
    report.amp_magnitude = support.amp_magnitude;
    report.max_deviation = support.max_deviation;
    if (support.support != enumerated) {
      return fail("statevector support differs from enumerated set");
    }
    const double expected = std::pow(2.0, -static_cast<double>(cla.rank) / 2.0);
    for (const auto& z : support.support) {
      if (std::abs(std::abs(state.amplitude(z)) - expected) > tol) {
        return fail("amplitude of " + z.to_string() + " is not 2^{-r/2}");
      }
    }
  }

  report.agrees = true;
  return report;
}

}  // namespace hlf
