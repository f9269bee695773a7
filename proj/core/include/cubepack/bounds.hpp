#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubepack/distance_table.hpp"

namespace cubepack {

enum class BoundKind { upper, lower };

struct BoundReport {
  int n = 0;
  BoundKind kind = BoundKind::upper;
  std::uint64_t value = 0;      // the reported bound
  std::string formula;
  bool strict = false;          // even-n strictness already folded into value
  std::uint64_t raw_value = 0;  // formula value before the strictness step
};

/// 2^{n-1} - 2^{n - ceil(log2 n)} - 2*floor((n-4)/2) + 3, exact integers.
/// Requires 4 <= n <= 64.
BoundReport torres_bound(int n);

/// The code-family upper bound: 2^{n-1} + 2^m - n minus, for i = 0..m-3,
/// 2^{i+1} * max(|A_i(m)| / 2^{2^m - n}, |A_i(m-1)|), with m minimal such
/// that n <= 2^m. All sizes come from the closed form; when A_i(m-1) is
/// undefined (i = m-3, m >= 4) the second argument is 2, the size of the
/// zero-padded diametral pair, which is always placeable at distance
/// 2^{m-1} >= 2^{i+2}. For even n the reported value is formula - 1 (the
/// bound is strict); the raw formula value is retained. Requires 5 <= n <= 64.
BoundReport general_upper_bound(int n);

/// n = 2^m specialization: 2^{2^m - 1} - 1 - sum 2^{2^{m-i} - m + 3i}.
/// Requires 3 <= m <= 6; equals general_upper_bound(2^m).
BoundReport power_of_two_bound(int m);

/// 2*chi_prev - (n-1), a lower bound given chi(Q_{n-1}) = chi_prev.
BoundReport recursive_lower_bound(std::uint64_t chi_prev, int n);

/// Cap on a color-c class within one bipartition side: A(n, 2*floor(c/2)+2),
/// or 1 when that distance exceeds the largest even distance inside a side
/// (n for even n, n-1 for odd n). Trivial values (3d > 2n: at most a pair)
/// are derived when the table lacks the entry. Requires c >= 2.
std::uint64_t class_cap(int n, int c, const DistanceTable& table);

struct BipartiteLowerBoundReport {
  int n = 0;
  int cutoff = 0;                    // last color with cap >= 2
  std::vector<std::uint64_t> caps;   // caps[c-1] for colors c = 1..cutoff
  std::uint64_t colored_total = 0;   // 2^{n-1} + sum of caps 2..cutoff
  std::uint64_t bound = 0;           // cutoff + (2^n - colored_total)
  bool data_conditional = false;     // some cap came from an upper-bound entry
};

/// Lower bound on the bipartition-respecting packing chromatic number of
/// Q_n; it bounds the plain packing chromatic number only if the two
/// invariants coincide (which is conjectural), hence the labeling.
BipartiteLowerBoundReport bipartite_lower_bound(int n, const DistanceTable& table);

struct ProductQuestionReport {
  int n = 0;
  std::uint64_t chi_factor = 0;
  std::uint64_t factor_order = 0;
  std::uint64_t product_value = 0;   // chi_factor * factor_order
  int cutoff = 0;
  std::uint64_t colored_total = 0;
  std::uint64_t unique_count = 0;
  std::uint64_t lower_bound = 0;
  bool negative_answer = false;      // lower_bound > product_value
  bool trivial_instance = false;     // factor_order == 1
  bool data_conditional = false;
};

/// Compares max{chi(G)|H|, chi(H)|G|} = chi_factor * factor_order against a
/// lower bound on chi(Q_n) built from unconditional caps: color 1 at most
/// 2^{n-1}, color k at most A(n, k+1) from the table (or trivially derived).
ProductQuestionReport product_question_check(int n, std::uint64_t chi_factor,
                                             std::uint64_t factor_order,
                                             const DistanceTable& table);

/// Packing chromatic number of the rook's graph K_q x K_q: q^2 - q + 1.
std::uint64_t rook_packing_number(std::uint64_t q);

}  // namespace cubepack
