#include "hlf/enumerate.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace hlf {

std::size_t rank_cap_from_env() {
  if (const char* env = std::getenv("HLF_MAX_R")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value <= 63) {
      return value;
    }
  }
  return kDefaultRankCap;
}

std::string SolutionDigest::hex() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(sum),
                static_cast<unsigned long long>(xor_fold));
  return buf;
}

SolutionEnumerator::SolutionEnumerator(const HlfInstance& inst, const ClaSummary& cla, std::size_t rank_cap)
    : z_a_(cla.z_a) {
  if (cla.n != inst.size() || cla.z_a.size() != inst.size() || cla.pivots.size() != cla.rank) {
    throw ValidationError("summary does not match the instance");
  }
  if (cla.rank > rank_cap || cla.rank > 63) {
    throw ResourceCapError("rank r = " + std::to_string(cla.rank) + " exceeds the enumeration cap of " +
                           std::to_string(std::min<std::size_t>(rank_cap, 63)) +
                           " (2^r solutions); raise it with --cap or HLF_MAX_R (at most 63)");
  }
  columns_.reserve(cla.rank);
  for (const auto p : cla.pivots) {
    // A is symmetric, so column p is row p
    columns_.push_back(inst.matrix().row(p));
  }
  if (z_a_.word_count() == 1) {
    for (const auto& col : columns_) {
      single_word_columns_.push_back(col.words()[0]);
    }
  }
}

void SolutionEnumerator::check_range(std::uint64_t start, std::uint64_t count) const {
  const std::uint64_t total = solution_count();
  if (start > total || count > total - start) {
    throw ValidationError("solution range [" + std::to_string(start) + ", " + std::to_string(start) + "+" +
                          std::to_string(count) + ") outside [0, " + std::to_string(total) + ")");
  }
}

BitVector SolutionEnumerator::at(std::uint64_t t) const {
  BitVector z = z_a_;
  const std::uint64_t g = gray_code(t);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if ((g >> i) & 1u) {
      z ^= columns_[i];
    }
  }
  return z;
}

std::vector<BitVector> SolutionEnumerator::collect(std::uint64_t start, std::uint64_t count) const {
  check_range(start, count);
  std::vector<BitVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each(start, count, [&](std::uint64_t, const BitVector& z) { out.push_back(z); });
  return out;
}

SolutionDigest SolutionEnumerator::digest(std::uint64_t start, std::uint64_t count) const {
  SolutionDigest d;
  if (width() <= BitVector::kWordBits) {
    for_each(start, count, [&](std::uint64_t, const BitVector& z) {
      d.add_hash(SolutionDigest::mix_word(z.words().empty() ? 0 : z.words()[0]));
    });
  } else {
    for_each(start, count, [&](std::uint64_t, const BitVector& z) { d.add(z); });
  }
  return d;
}

SolutionDigest SolutionEnumerator::parallel_digest(std::size_t chunks) const {
  const auto ranges = partition_range(solution_count(), chunks);
  if (ranges.size() <= 1) {
    return digest();
  }
  std::vector<SolutionDigest> partial(ranges.size());
  {
    std::vector<std::jthread> workers;
    workers.reserve(ranges.size());
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      workers.emplace_back([this, &partial, &ranges, k] { partial[k] = digest(ranges[k].first, ranges[k].second); });
    }
  }
  SolutionDigest total;
  for (const auto& d : partial) {
    total += d;
  }
  return total;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t total, std::size_t chunks) {
  if (chunks == 0) {
    throw ValidationError("chunk count must be at least 1");
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  const std::uint64_t base = total / chunks;
  const std::uint64_t extra = total % chunks;
  std::uint64_t start = 0;
  for (std::size_t k = 0; k < chunks; ++k) {
    const std::uint64_t count = base + (k < extra ? 1 : 0);
    if (count == 0) {
      continue;
    }
    ranges.emplace_back(start, count);
    start += count;
  }
  return ranges;
}

std::vector<BitVector> enumerate_solutions(const HlfInstance& inst, const ClaSummary& cla, std::size_t rank_cap) {
  return SolutionEnumerator(inst, cla, rank_cap).collect();
}

std::vector<BitVector> enumerate_chunk(const HlfInstance& inst, const ClaSummary& cla, std::uint64_t start,
                                       std::uint64_t count, std::size_t rank_cap) {
  return SolutionEnumerator(inst, cla, rank_cap).collect(start, count);
}

}  // namespace hlf
