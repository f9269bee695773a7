#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubepack/errors.hpp"
#include "cubepack/matrix.hpp"
#include "cubepack/word.hpp"

namespace cubepack {

/// Enumeration refusals kick in above this dimension (2^27 codewords).
inline constexpr int kMaxEnumerationDimension = 27;

/// Linear code given by a generator basis. Immutable once constructed; the
/// minimum distance is computed lazily (by min-weight enumeration) and cached.
class LinearCode {
 public:
  /// Generators must be linearly independent words of the stated length.
  /// An empty generator list yields the trivial code {0}.
  LinearCode(int length, std::vector<BinaryWord> generators);

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generators_.size()); }
  /// 2^dimension; requires dimension <= 63.
  std::uint64_t size() const;
  const std::vector<BinaryWord>& generators() const { return generators_; }

  bool contains(const BinaryWord& w) const;

  /// Minimum weight over nonzero codewords (equals the minimum distance by
  /// linearity); nullopt for the trivial code. Enumeration budget applies.
  std::optional<int> min_distance() const;

  /// Visits every codeword once, starting from the zero word, in Gray-code
  /// order over the generator basis. Throws BudgetError above the budget.
  template <class F>
  void for_each_codeword(F&& f) const {
    if (dimension() > kMaxEnumerationDimension) {
      throw BudgetError("code too large to enumerate: dimension " +
                        std::to_string(dimension()) + " exceeds " +
                        std::to_string(kMaxEnumerationDimension));
    }
    BinaryWord w = BinaryWord::zeros(length_);
    f(w);
    const std::uint64_t total = std::uint64_t{1} << dimension();
    for (std::uint64_t k = 1; k < total; ++k) {
      w = w ^ generators_[static_cast<std::size_t>(std::countr_zero(k))];
      f(w);
    }
  }

  std::vector<BinaryWord> enumerate() const;

  LinearCode(const LinearCode& other);
  LinearCode& operator=(const LinearCode& other);
  LinearCode(LinearCode&& other) noexcept;
  LinearCode& operator=(LinearCode&& other) noexcept;

 private:
  int length_;
  std::vector<BinaryWord> generators_;
  std::vector<BinaryWord> rref_;    // reduced basis for membership tests
  std::vector<int> pivots_;         // 0-based pivot column of each rref row
  // 0 = not computed yet, -1 = trivial code (no distance).
  mutable std::atomic<int> cached_min_distance_{0};
};

/// Finite set of equal-length words, stored sorted by integer encoding.
class CodeSet {
 public:
  CodeSet(int length, std::vector<BinaryWord> words);
  static CodeSet empty_set(int length);

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<BinaryWord>& words() const { return words_; }

  bool contains(const BinaryWord& w) const;
  bool subset_of(const CodeSet& other) const;

  /// Pairwise minimum distance; nullopt when fewer than two words.
  std::optional<int> min_distance() const;

  CodeSet translate(const BinaryWord& w) const;

  friend bool operator==(const CodeSet&, const CodeSet&) = default;

 private:
  int length_;
  std::vector<BinaryWord> words_;   // sorted ascending, no duplicates
};

/// m x (2^m - 1) parity check matrix of the Hamming code H_m: column j is the
/// m-bit big-endian representation of j, for j = 1..2^m-1. Requires 2<=m<=6.
Gf2Matrix hamming_parity_check(int m);

/// (m+1) x 2^m parity check matrix of the extended Hamming code: a zero
/// column prepended to hamming_parity_check(m), plus an all-ones bottom row.
Gf2Matrix extended_parity_check(int m);

LinearCode hamming_code(int m);
LinearCode extended_hamming_code(int m);

/// True when A_i(m) is defined: i = 0 with m >= 2, or 1 <= i <= m-3.
bool code_a_defined(int i, int m);
/// log2 |A_i(m)| = 2^{m-i} - m + 2i - 1 (closed form, no enumeration).
int code_a_dimension(int i, int m);
/// d(A_i(m)) = 2^{i+2} (closed form).
int code_a_distance(int i, int m);

/// The recursive code family: A_0(m) is the extended Hamming code, and for
/// i >= 1 the generator basis is {bb : b generator of A_{i-1}(m-1)} plus the
/// word with zero first half and all-ones second half (so the enumerated code
/// is exactly {uu, u u-bar : u in A_{i-1}(m-1)}). Requires m <= 6.
LinearCode code_A(int i, int m);

/// Narrowed code: the words of A_i(m) whose last 2^m - n coordinates are all
/// zero, restricted to their first n coordinates. Computed by intersecting
/// the code with the zero-suffix subspace (generator elimination), then
/// enumerating the subcode. Requires 2^{m-1} < n <= 2^m.
CodeSet narrowed_code(int i, int m, int n);

/// Expanded code: every word of A_i(m_minus_1) zero-padded to length n.
CodeSet expanded_code(int i, int m_minus_1, int n);

CodeSet coset(const LinearCode& code, const BinaryWord& w);
CodeSet coset(const CodeSet& code, const BinaryWord& w);

std::optional<int> min_distance(const LinearCode& code);
std::optional<int> min_distance(const CodeSet& code);

enum class DominationClass { all, odd };

/// True iff every vertex of Q_n in the stated class and outside the code has
/// exactly one neighbor in the code. Full vertex sweep; requires n <= 20.
bool is_perfect_dominating(const CodeSet& code, int n, DominationClass cls);

// Plain-text interchange formats (used by the CLI; both round-trip).
std::string format_linear_code(const LinearCode& code);
std::string format_code_set(const CodeSet& set);
LinearCode parse_linear_code(std::istream& in);
CodeSet parse_code_set(std::istream& in);

}  // namespace cubepack
