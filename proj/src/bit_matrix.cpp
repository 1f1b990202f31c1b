#include "hlf/bit_matrix.hpp"

#include <sstream>

#include "hlf/error.hpp"

namespace hlf {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw ValidationError("matrix is not square: row of length " + std::to_string(r.size()) + " in " +
                            std::to_string(rows.size()) + " rows");
    }
  }
  BitMatrix m;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<BitVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    rows.push_back(BitVector::parse(std::string_view(line).substr(first, last - first + 1)));
  }
  return from_rows(std::move(rows));
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector col(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (rows_[i].test(j)) {
      col.set(i);
    }
  }
  return col;
}

BitVector BitMatrix::diagonal() const {
  BitVector d(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (rows_[i].test(i)) {
      d.set(i);
    }
  }
  return d;
}

bool BitMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (get(i, j) != get(j, i)) {
        return false;
      }
    }
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string out;
  out.reserve(size() * (size() + 1));
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace hlf
