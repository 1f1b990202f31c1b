#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hlf/bit_vector.hpp"
#include "hlf/cla.hpp"
#include "hlf/error.hpp"
#include "hlf/instance.hpp"

namespace hlf {

inline constexpr std::size_t kDefaultRankCap = 34;

/// HLF_MAX_R from the environment if set and valid, otherwise kDefaultRankCap.
std::size_t rank_cap_from_env();

inline std::uint64_t gray_code(std::uint64_t t) { return t ^ (t >> 1); }

/// Order-independent digest of a solution multiset: element count plus the
/// wrapping sum and the XOR of a 64-bit mix of every element. Combining is
/// associative and commutative, so chunk results merge in any order.
struct SolutionDigest {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  std::uint64_t xor_fold = 0;

  void add(const BitVector& z) { add_hash(mix(z)); }
  void add_hash(std::uint64_t h) {
    ++count;
    sum += h;
    xor_fold ^= h;
  }
  SolutionDigest& operator+=(const SolutionDigest& other) {
    count += other.count;
    sum += other.sum;
    xor_fold ^= other.xor_fold;
    return *this;
  }
  std::string hex() const;

  static std::uint64_t mix_word(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  static std::uint64_t mix(const BitVector& z) {
    std::uint64_t h = 0;
    for (const auto w : z.words()) {
      h = mix_word(h ^ w);
    }
    return h;
  }

  friend bool operator==(const SolutionDigest&, const SolutionDigest&) = default;
};

/// Streams all 2^r solutions z(t) = z_a ^ sum_{bit i of gray(t)} column_{p_i}(A).
///
/// Successive solutions differ by one pivot column, so each step costs one
/// row-length XOR. Index t in [0, 2^r) is the position in Gray order; any
/// range [start, start + count) can be produced independently, which is how
/// work is split across threads.
class SolutionEnumerator {
 public:
  SolutionEnumerator(const HlfInstance& inst, const ClaSummary& cla, std::size_t rank_cap = rank_cap_from_env());

  std::size_t rank() const { return columns_.size(); }
  std::size_t width() const { return z_a_.size(); }
  std::uint64_t solution_count() const { return std::uint64_t{1} << rank(); }

  /// Solution at Gray index t, computed from scratch in O(r) column XORs.
  BitVector at(std::uint64_t t) const;

  /// visit(index, z) for every index in [start, start + count), in order.
  template <class Visitor>
  void for_each(std::uint64_t start, std::uint64_t count, Visitor&& visit) const {
    check_range(start, count);
    if (count == 0) {
      return;
    }
    BitVector z = at(start);
    visit(start, static_cast<const BitVector&>(z));
    const std::uint64_t end = start + count;
    if (z.word_count() == 1) {
      BitVector::Word* word = z.data();
      for (std::uint64_t t = start + 1; t < end; ++t) {
        *word ^= single_word_columns_[static_cast<std::size_t>(std::countr_zero(t))];
        visit(t, static_cast<const BitVector&>(z));
      }
      return;
    }
    for (std::uint64_t t = start + 1; t < end; ++t) {
      z ^= columns_[static_cast<std::size_t>(std::countr_zero(t))];
      visit(t, static_cast<const BitVector&>(z));
    }
  }

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    for_each(0, solution_count(), std::forward<Visitor>(visit));
  }

  std::vector<BitVector> collect(std::uint64_t start, std::uint64_t count) const;
  std::vector<BitVector> collect() const { return collect(0, solution_count()); }

  SolutionDigest digest(std::uint64_t start, std::uint64_t count) const;
  SolutionDigest digest() const { return digest(0, solution_count()); }

  /// Splits [0, 2^r) into `chunks` contiguous ranges and digests each on its
  /// own thread.
  SolutionDigest parallel_digest(std::size_t chunks) const;

 private:
  void check_range(std::uint64_t start, std::uint64_t count) const;

  BitVector z_a_;
  std::vector<BitVector> columns_;
  std::vector<BitVector::Word> single_word_columns_;
};

/// Contiguous near-equal split of [0, total) into `chunks` (start, count) ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t total, std::size_t chunks);

/// Every solution, in Gray order.
std::vector<BitVector> enumerate_solutions(const HlfInstance& inst, const ClaSummary& cla,
                                           std::size_t rank_cap = rank_cap_from_env());
/// Solutions with Gray index in [start, start + count).
std::vector<BitVector> enumerate_chunk(const HlfInstance& inst, const ClaSummary& cla, std::uint64_t start,
                                       std::uint64_t count, std::size_t rank_cap = rank_cap_from_env());

}  // namespace hlf
