#include "hlf/bit_vector.hpp"

#include "hlf/error.hpp"

namespace hlf {

BitVector BitVector::parse(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0':
        break;
      case '1':
        v.set(i);
        break;
      default:
        throw ValidationError("bitstring may only contain '0' and '1', got '" + std::string(text) + "'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t i) {
  if (i >= size) {
    throw ValidationError("unit vector index out of range");
  }
  BitVector v(size);
  v.set(i);
  return v;
}

BitVector BitVector::from_uint(std::size_t size, std::uint64_t value) {
  BitVector v(size);
  if (size == 0) {
    return v;
  }
  if (size < kWordBits) {
    value &= (Word{1} << size) - 1;
  }
  v.words_[0] = value;
  return v;
}

BitVector BitVector::random(std::size_t size, std::mt19937_64& rng) {
  BitVector v(size);
  for (auto& w : v.words_) {
    w = rng();
  }
  if (const std::size_t tail = size % kWordBits; tail != 0) {
    v.words_.back() &= (Word{1} << tail) - 1;
  }
  return v;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw ValidationError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                          std::to_string(other.size_));
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

bool BitVector::none() const {
  for (const Word w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (const Word w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::size_t BitVector::and_count(const BitVector& other) const {
  check_same_size(other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

bool BitVector::dot(const BitVector& other) const {
  check_same_size(other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) {
      out[i] = '1';
    }
  }
  return out;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
  const std::size_t common = std::min(lhs.words_.size(), rhs.words_.size());
  for (std::size_t w = 0; w < common; ++w) {
    const BitVector::Word diff = lhs.words_[w] ^ rhs.words_[w];
    if (diff != 0) {
      const BitVector::Word lowest = diff & (~diff + 1);
      return (lhs.words_[w] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return lhs.size_ <=> rhs.size_;
}

std::size_t BitVector::hash() const {
  // splitmix64 finalizer folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (const Word w : words_) {
    std::uint64_t x = h ^ w;
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h = x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hlf
