#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fordseq::words {

// A finite 0/1 word, bit-packed so de Bruijn sequences up to order 28
// (2^28 bits = 32 MiB) stay cheap. Bit i lives at bit (i & 63) of block
// (i >> 6); unused tail bits of the last block are kept zero, so equality
// and popcount work block-wise. Immutable in practice: the mutating
// members are only used while a word is being assembled.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string_view bits);  // accepts only '0' and '1'

  static BinaryWord zeros(std::size_t count);
  static BinaryWord ones(std::size_t count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit(std::size_t pos) const;
  void push_back(bool value);
  void append(const BinaryWord& other);
  void flip(std::size_t pos);
  void reserve(std::size_t bits);

  BinaryWord subword(std::size_t pos, std::size_t count) const;
  BinaryWord rotated_left(std::size_t amount) const;

  std::uint64_t popcount() const noexcept;
  std::string str() const;

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) = default;

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

// Lexicographic order with 0 < 1; a proper prefix sorts before its
// extensions.
std::strong_ordering compare(const BinaryWord& a, const BinaryWord& b) noexcept;
inline bool operator<(const BinaryWord& a, const BinaryWord& b) noexcept {
  return compare(a, b) < 0;
}
inline bool operator<=(const BinaryWord& a, const BinaryWord& b) noexcept {
  return compare(a, b) <= 0;
}
inline bool operator>(const BinaryWord& a, const BinaryWord& b) noexcept {
  return compare(a, b) > 0;
}
inline bool operator>=(const BinaryWord& a, const BinaryWord& b) noexcept {
  return compare(a, b) >= 0;
}

// zeros(w) - ones(w). Fits comfortably in int64: |skew| <= |w| <= 2^28 at
// the largest supported order.
std::int64_t skew(const BinaryWord& w) noexcept;
std::uint64_t count_zeros(const BinaryWord& w) noexcept;
std::uint64_t count_ones(const BinaryWord& w) noexcept;

// True iff w is strictly smaller than every nontrivial rotation of itself
// (equivalently: aperiodic and the least representative of its necklace).
// Throws on the empty word.
bool is_lyndon(const BinaryWord& w);

// Lexicographically least rotation, via Booth's linear-time scan.
// Throws on the empty word.
BinaryWord least_rotation(const BinaryWord& w);

// Length of the longest block of consecutive zeros; 0 for ones-only words.
std::uint32_t max_zero_run(const BinaryWord& w) noexcept;

// Running skew of every prefix; entry k (0-based) is the skew of the first
// k+1 symbols. int32 is plenty here: |skew| <= |w| < 2^31 for every
// supported word.
std::vector<std::int32_t> prefix_skew_profile(const BinaryWord& w);

struct SkewExtrema {
  std::int64_t max_skew = 0;  // over all prefixes, the empty one included
  std::int64_t min_skew = 0;
};
SkewExtrema skew_extrema(const BinaryWord& w) noexcept;

// Maximum prefix skew (never negative: the empty prefix counts).
std::int64_t discrepancy(const BinaryWord& w) noexcept;

}  // namespace fordseq::words
