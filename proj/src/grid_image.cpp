#include "hlf/grid_image.hpp"

#include <cctype>
#include <string>

#include "hlf/error.hpp"

namespace hlf {

namespace {

struct Axes {
  std::size_t col_bits;
  std::size_t row_bits;
};

Axes axes_for(std::size_t n) {
  if (n > kImageBitCap) {
    throw ResourceCapError("distribution grid limited to n <= " + std::to_string(kImageBitCap));
  }
  return {(n + 1) / 2, n / 2};
}

// Reads bits [first, first + count) of z as an integer, earliest bit most significant.
std::uint64_t read_field(const BitVector& z, std::size_t first, std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t k = 0; k < count; ++k) {
    value = (value << 1) | (z.test(first + k) ? 1u : 0u);
  }
  return value;
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::string word() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_])) && data_[pos_] != '#') {
      ++pos_;
    }
    return std::string(data_.substr(start, pos_ - start));
  }

  std::size_t number() {
    const std::string w = word();
    if (w.empty() || w.size() > 9 || w.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("malformed bitmap header");
    }
    return std::stoul(w);
  }

  char bit_char() {
    skip_space_and_comments();
    if (pos_ >= data_.size()) {
      throw ValidationError("bitmap data truncated");
    }
    return data_[pos_++];
  }

  std::string_view rest_after_single_whitespace() {
    if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
      throw ValidationError("malformed bitmap header");
    }
    return data_.substr(pos_ + 1);
  }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

GridImage render_distribution_grid(std::span<const BitVector> solutions, std::size_t n) {
  const Axes axes = axes_for(n);
  GridImage image;
  image.width = std::size_t{1} << axes.col_bits;
  image.height = std::size_t{1} << axes.row_bits;
  image.cells.assign(image.width * image.height, false);
  for (const auto& z : solutions) {
    if (z.size() != n) {
      throw ValidationError("solution " + z.to_string() + " has length " + std::to_string(z.size()) +
                            ", expected " + std::to_string(n));
    }
    const auto col = read_field(z, 0, axes.col_bits);
    const auto row = read_field(z, axes.col_bits, axes.row_bits);
    image.cells[static_cast<std::size_t>(row) * image.width + static_cast<std::size_t>(col)] = true;
  }
  return image;
}

GridImage render_distribution_grid(const std::set<BitVector>& solutions, std::size_t n) {
  const std::vector<BitVector> list(solutions.begin(), solutions.end());
  return render_distribution_grid(std::span<const BitVector>(list), n);
}

std::set<BitVector> image_solutions(const GridImage& image, std::size_t n) {
  const Axes axes = axes_for(n);
  if (image.width != (std::size_t{1} << axes.col_bits) || image.height != (std::size_t{1} << axes.row_bits)) {
    throw ValidationError("image dimensions do not match n = " + std::to_string(n));
  }
  std::set<BitVector> out;
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) {
      if (!image.at(col, row)) {
        continue;
      }
      BitVector z(n);
      for (std::size_t k = 0; k < axes.col_bits; ++k) {
        z.set(k, (col >> (axes.col_bits - 1 - k)) & 1u);
      }
      for (std::size_t k = 0; k < axes.row_bits; ++k) {
        z.set(axes.col_bits + k, (row >> (axes.row_bits - 1 - k)) & 1u);
      }
      out.insert(std::move(z));
    }
  }
  return out;
}

std::string write_pbm(const GridImage& image, bool plain) {
  std::string out = (plain ? "P1\n" : "P4\n") + std::to_string(image.width) + " " + std::to_string(image.height) + "\n";
  if (plain) {
    out.reserve(out.size() + image.height * (image.width + 1));
    for (std::size_t row = 0; row < image.height; ++row) {
      for (std::size_t col = 0; col < image.width; ++col) {
        out += image.at(col, row) ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }
  const std::size_t row_bytes = (image.width + 7) / 8;
  out.reserve(out.size() + image.height * row_bytes);
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t byte = 0; byte < row_bytes; ++byte) {
      unsigned char packed = 0;
      for (std::size_t bit = 0; bit < 8; ++bit) {
        const std::size_t col = byte * 8 + bit;
        if (col < image.width && image.at(col, row)) {
          packed |= static_cast<unsigned char>(0x80u >> bit);
        }
      }
      out += static_cast<char>(packed);
    }
  }
  return out;
}

GridImage parse_pbm(std::string_view data) {
  Tokenizer tok(data);
  const std::string magic = tok.word();
  if (magic != "P1" && magic != "P4") {
    throw ValidationError("not a portable bitmap (magic '" + magic + "')");
  }
  GridImage image;
  image.width = tok.number();
  image.height = tok.number();
  image.cells.assign(image.width * image.height, false);
  if (magic == "P1") {
    for (std::size_t i = 0; i < image.cells.size(); ++i) {
      const char c = tok.bit_char();
      if (c != '0' && c != '1') {
        throw ValidationError("bitmap pixel must be 0 or 1");
      }
      image.cells[i] = c == '1';
    }
    return image;
  }
  const std::string_view raster = tok.rest_after_single_whitespace();
  const std::size_t row_bytes = (image.width + 7) / 8;
  if (raster.size() < row_bytes * image.height) {
    throw ValidationError("bitmap data truncated");
  }
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) {
      const auto byte = static_cast<unsigned char>(raster[row * row_bytes + col / 8]);
      image.cells[row * image.width + col] = (byte >> (7 - col % 8)) & 1u;
    }
  }
  return image;
}

}  // namespace hlf
