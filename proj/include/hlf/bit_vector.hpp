#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlf {

/// Packed bit string over GF(2).
///
/// Internal index i (0-based) is the i+1-th character of the text form, so
/// "1000" has only index 0 set. Index i lives in bit (i % 64) of word (i / 64);
/// bits past size() are kept zero so whole-word compare/hash/popcount work.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  static constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
  }

  /// Parses a '0'/'1' string; throws ValidationError on any other character.
  static BitVector parse(std::string_view text);
  /// Vector with only index `i` set.
  static BitVector unit(std::size_t size, std::size_t i);
  /// Low `size` bits of `value`, index 0 taken from bit 0.
  static BitVector from_uint(std::size_t size, std::uint64_t value);
  static BitVector random(std::size_t size, std::mt19937_64& rng);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  Word* data() { return words_.data(); }
  const Word* data() const { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  bool none() const;
  std::size_t count() const;
  /// Inner product over GF(2): parity of popcount(this AND other).
  bool dot(const BitVector& other) const;
  /// Popcount of (this AND other) in integer arithmetic.
  std::size_t and_count(const BitVector& other) const;

  /// Value of the low 64 positions as an integer (index 0 -> bit 0).
  std::uint64_t to_uint() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic on the text form: compares the first differing position.
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

  std::size_t hash() const;

 private:
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace hlf
