#include "cubepack/word.hpp"

#include <bit>
#include <stdexcept>

namespace cubepack {

namespace {

void check_length(int length) {
  if (length < 1 || length > BinaryWord::kMaxLength) {
    throw std::invalid_argument("word length must be in 1.." +
                                std::to_string(BinaryWord::kMaxLength) +
                                ", got " + std::to_string(length));
  }
}

// (hi, lo) pair masked down to `length` bits.
struct Limbs {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
};

Limbs mask_for(int length) {
  if (length >= 128) return {~0ull, ~0ull};
  if (length > 64) return {(~0ull) >> (128 - length), ~0ull};
  if (length == 64) return {0, ~0ull};
  return {0, (~0ull) >> (64 - length)};
}

Limbs shift_left(Limbs v, int k) {
  if (k == 0) return v;
  if (k >= 128) return {0, 0};
  if (k >= 64) return {v.lo << (k - 64), 0};
  return {(v.hi << k) | (v.lo >> (64 - k)), v.lo << k};
}

Limbs shift_right(Limbs v, int k) {
  if (k == 0) return v;
  if (k >= 128) return {0, 0};
  if (k >= 64) return {0, v.hi >> (k - 64)};
  return {v.hi >> k, (v.lo >> k) | (v.hi << (64 - k))};
}

}  // namespace

BinaryWord BinaryWord::zeros(int length) {
  check_length(length);
  return {length, 0, 0};
}

BinaryWord BinaryWord::ones(int length) {
  check_length(length);
  Limbs m = mask_for(length);
  return {length, m.hi, m.lo};
}

BinaryWord BinaryWord::unit(int i, int length) {
  check_length(length);
  if (i < 1 || i > length) {
    throw std::invalid_argument("unit vector coordinate out of range: i=" +
                                std::to_string(i) + ", n=" + std::to_string(length));
  }
  Limbs v = shift_left({0, 1}, length - i);
  return {length, v.hi, v.lo};
}

BinaryWord BinaryWord::from_limbs(int length, std::uint64_t hi, std::uint64_t lo) {
  check_length(length);
  Limbs m = mask_for(length);
  if ((hi & ~m.hi) != 0 || (lo & ~m.lo) != 0) {
    throw std::invalid_argument("word value does not fit in length " +
                                std::to_string(length));
  }
  return {length, hi, lo};
}

BinaryWord BinaryWord::from_index(int length, std::uint64_t index) {
  check_length(length);
  if (length > 64) {
    throw std::invalid_argument("from_index requires length <= 64");
  }
  return from_limbs(length, 0, index);
}

BinaryWord BinaryWord::parse(std::string_view text) {
  check_length(static_cast<int>(text.size()));
  Limbs v;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    v = shift_left(v, 1);
    v.lo |= static_cast<std::uint64_t>(ch - '0');
  }
  return {static_cast<int>(text.size()), v.hi, v.lo};
}

int BinaryWord::bit(int i) const {
  if (i < 1 || i > length_) {
    throw std::invalid_argument("coordinate out of range: " + std::to_string(i));
  }
  int pos = length_ - i;
  if (pos >= 64) return static_cast<int>((hi_ >> (pos - 64)) & 1);
  return static_cast<int>((lo_ >> pos) & 1);
}

int BinaryWord::weight() const {
  return std::popcount(hi_) + std::popcount(lo_);
}

std::uint64_t BinaryWord::index() const {
  if (length_ > 64) {
    throw std::invalid_argument("index() requires length <= 64");
  }
  return lo_;
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

BinaryWord operator^(const BinaryWord& a, const BinaryWord& b) {
  if (a.length_ != b.length_) throw std::invalid_argument("incompatible lengths");
  return {a.length_, a.hi_ ^ b.hi_, a.lo_ ^ b.lo_};
}

BinaryWord operator&(const BinaryWord& a, const BinaryWord& b) {
  if (a.length_ != b.length_) throw std::invalid_argument("incompatible lengths");
  return {a.length_, a.hi_ & b.hi_, a.lo_ & b.lo_};
}

int hamming_distance(const BinaryWord& u, const BinaryWord& v) {
  return (u ^ v).weight();
}

BinaryWord add(const BinaryWord& u, const BinaryWord& v) { return u ^ v; }

BinaryWord complement(const BinaryWord& u) {
  return u ^ BinaryWord::ones(u.length());
}

int weight(const BinaryWord& u) { return u.weight(); }

Parity parity(const BinaryWord& u) {
  return u.weight() % 2 == 0 ? Parity::even : Parity::odd;
}

BinaryWord concat(const BinaryWord& u, const BinaryWord& v) {
  int total = u.length() + v.length();
  if (total > BinaryWord::kMaxLength) {
    throw std::invalid_argument("concatenation exceeds max word length");
  }
  Limbs shifted = shift_left({u.hi(), u.lo()}, v.length());
  return BinaryWord::from_limbs(total, shifted.hi | v.hi(), shifted.lo | v.lo());
}

BinaryWord prefix(const BinaryWord& u, int first_k) {
  if (first_k < 1 || first_k > u.length()) {
    throw std::invalid_argument("prefix length out of range: " +
                                std::to_string(first_k));
  }
  Limbs v = shift_right({u.hi(), u.lo()}, u.length() - first_k);
  return BinaryWord::from_limbs(first_k, v.hi, v.lo);
}

BinaryWord unit_vector(int i, int n) { return BinaryWord::unit(i, n); }

int ceil_log2(int n) {
  if (n < 1) throw std::invalid_argument("ceil_log2 requires n >= 1");
  int m = 0;
  while ((1 << m) < n) ++m;
  return m;
}

}  // namespace cubepack

