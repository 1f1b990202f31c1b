#include "hlf/cla.hpp"

#include <json.hpp>

#include "hlf/error.hpp"
#include "hlf/gf2.hpp"

namespace hlf {

using nlohmann::json;

ClaSummary run_cla(const HlfInstance& inst) {
  const BitMatrix& a = inst.matrix();
  auto elim = gf2::rank_and_pivots(a);

  ClaSummary cla;
  cla.n = inst.size();
  cla.rank = elim.rank;
  cla.kernel = gf2::kernel_basis(elim);
  cla.pivots = std::move(elim.pivots);

  BitVector half_q(cla.kernel.size());
  cla.q_basis.reserve(cla.kernel.size());
  for (std::size_t k = 0; k < cla.kernel.size(); ++k) {
    const unsigned q = gf2::quad_form_mod4(a, cla.kernel[k]);
    if (q % 2 != 0) {
      throw ConsistencyError("q(x) is odd on kernel basis vector " + cla.kernel[k].to_string() +
                             "; the instance matrix is corrupted");
    }
    cla.q_basis.push_back(q);
    half_q.set(k, q == 2);
  }

  auto z = gf2::solve_affine(cla.kernel, half_q, cla.n);
  if (!z) {
    throw ConsistencyError("no particular solution: kernel basis system is inconsistent");
  }
  cla.z_a = std::move(*z);
  return cla;
}

bool verify_q_linearity(const HlfInstance& inst, std::span<const BitVector> kernel) {
  const BitMatrix& a = inst.matrix();
  std::vector<unsigned> q;
  q.reserve(kernel.size());
  for (const auto& v : kernel) {
    q.push_back(gf2::quad_form_mod4(a, v));
    if (q.back() % 2 != 0) {
      return false;
    }
  }
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = i + 1; j < kernel.size(); ++j) {
      if (gf2::quad_form_mod4(a, kernel[i] ^ kernel[j]) != (q[i] + q[j]) % 4) {
        return false;
      }
    }
  }
  return true;
}

std::string cla_to_json(const ClaSummary& cla) {
  json doc;
  doc["n"] = cla.n;
  doc["r"] = cla.rank;
  json pivots = json::array();
  for (const auto p : cla.pivots) {
    pivots.push_back(p + 1);
  }
  doc["P"] = std::move(pivots);
  json kernel = json::array();
  for (const auto& v : cla.kernel) {
    kernel.push_back(v.to_string());
  }
  doc["kernel"] = std::move(kernel);
  doc["q_basis"] = cla.q_basis;
  doc["z_a"] = cla.z_a.to_string();
  return doc.dump();
}

ClaSummary cla_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ClaSummary cla;
    cla.n = doc.at("n").get<std::size_t>();
    cla.rank = doc.at("r").get<std::size_t>();
    for (const auto& p : doc.at("P")) {
      const auto one_based = p.get<std::size_t>();
      if (one_based < 1 || one_based > cla.n) {
        throw ValidationError("pivot out of range");
      }
      cla.pivots.push_back(one_based - 1);
    }
    for (const auto& v : doc.at("kernel")) {
      cla.kernel.push_back(BitVector::parse(v.get<std::string>()));
    }
    if (doc.contains("q_basis")) {
      cla.q_basis = doc["q_basis"].get<std::vector<unsigned>>();
    }
    cla.z_a = BitVector::parse(doc.at("z_a").get<std::string>());
    if (cla.pivots.size() != cla.rank || cla.kernel.size() + cla.rank != cla.n || cla.z_a.size() != cla.n) {
      throw ValidationError("summary fields have inconsistent sizes");
    }
    return cla;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed summary document: ") + e.what());
  }
}

}  // namespace hlf
