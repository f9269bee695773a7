#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubepack {

enum class Parity { even, odd };

/// Binary word of length 1..128 over GF(2).
///
/// Coordinate 1 is the leftmost coordinate and the most significant bit of
/// the integer encoding, so ordering words by encoding equals lexicographic
/// order of their printed bitstrings, and printing followed by re-parsing is
/// the identity. Values are immutable; all operations are pure.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 128;

  static BinaryWord zeros(int length);
  static BinaryWord ones(int length);
  /// Unit vector e_{i,length}: 1-based coordinate i set, all others zero.
  static BinaryWord unit(int i, int length);
  static BinaryWord from_limbs(int length, std::uint64_t hi, std::uint64_t lo);
  /// Word of the given length (<= 64) whose integer encoding is `index`.
  static BinaryWord from_index(int length, std::uint64_t index);
  static BinaryWord parse(std::string_view text);

  int length() const { return length_; }
  /// 1-based coordinate access; coordinate 1 is the leftmost.
  int bit(int i) const;
  int weight() const;

  std::uint64_t hi() const { return hi_; }
  std::uint64_t lo() const { return lo_; }
  /// Integer encoding; requires length <= 64.
  std::uint64_t index() const;

  std::string to_string() const;

  friend BinaryWord operator^(const BinaryWord& a, const BinaryWord& b);
  friend BinaryWord operator&(const BinaryWord& a, const BinaryWord& b);
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  BinaryWord(int length, std::uint64_t hi, std::uint64_t lo)
      : length_(length), hi_(hi), lo_(lo) {}

  int length_;
  std::uint64_t hi_;
  std::uint64_t lo_;
};

/// Number of coordinates u and v differ in; requires equal lengths.
int hamming_distance(const BinaryWord& u, const BinaryWord& v);
/// Coordinate-wise sum over GF(2); requires equal lengths.
BinaryWord add(const BinaryWord& u, const BinaryWord& v);
BinaryWord complement(const BinaryWord& u);
int weight(const BinaryWord& u);
Parity parity(const BinaryWord& u);
/// Word of length u.length + v.length with u as prefix.
BinaryWord concat(const BinaryWord& u, const BinaryWord& v);
/// Restriction to the first `first_k` coordinates, 1 <= first_k <= u.length.
BinaryWord prefix(const BinaryWord& u, int first_k);
BinaryWord unit_vector(int i, int n);

/// Smallest m with n <= 2^m; requires n >= 1.
int ceil_log2(int n);

}  // namespace cubepack
