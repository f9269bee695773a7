#include "cubepack/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubepack/codes.hpp"
#include "cubepack/word.hpp"

namespace cubepack {

namespace {

std::uint64_t pow2(int e) {
  if (e < 0 || e > 63) throw std::overflow_error("2^" + std::to_string(e));
  return std::uint64_t{1} << e;
}

}  // namespace

BoundReport torres_bound(int n) {
  if (n < 4 || n > 64) {
    throw std::invalid_argument("torres_bound requires 4 <= n <= 64");
  }
  std::uint64_t value = pow2(n - 1) - pow2(n - ceil_log2(n)) -
                        2 * static_cast<std::uint64_t>((n - 4) / 2) + 3;
  return {n, BoundKind::upper, value, "torres", false, value};
}

BoundReport general_upper_bound(int n) {
  if (n < 5 || n > 64) {
    throw std::invalid_argument("general_upper_bound requires 5 <= n <= 64");
  }
  const int m = ceil_log2(n);
  const int suffix = (1 << m) - n;
  std::uint64_t colored = 0;
  for (int i = 0; i <= m - 3; ++i) {
    int a = code_a_dimension(i, m);
    std::uint64_t narrowed_estimate = a >= suffix ? pow2(a - suffix) : 0;
    std::uint64_t expanded_size =
        code_a_defined(i, m - 1) ? pow2(code_a_dimension(i, m - 1)) : 2;
    colored += pow2(i + 1) * std::max(narrowed_estimate, expanded_size);
  }
  std::uint64_t raw = pow2(n - 1) + pow2(m) - static_cast<std::uint64_t>(n) - colored;
  bool strict = n % 2 == 0;
  return {n, BoundKind::upper, strict ? raw - 1 : raw, "general", strict, raw};
}

BoundReport power_of_two_bound(int m) {
  if (m < 3 || m > 6) {
    throw std::invalid_argument("power_of_two_bound requires 3 <= m <= 6");
  }
  std::uint64_t value = pow2((1 << m) - 1) - 1;
  for (int i = 0; i <= m - 3; ++i) {
    value -= pow2((1 << (m - i)) - m + 3 * i);
  }
  std::uint64_t raw = value + 1;  // the bound is strict at n = 2^m (even)
  return {1 << m, BoundKind::upper, value, "power_of_two", true, raw};
}

BoundReport recursive_lower_bound(std::uint64_t chi_prev, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::uint64_t value = 2 * chi_prev - static_cast<std::uint64_t>(n - 1);
  return {n, BoundKind::lower, value, "recursive", false, value};
}

namespace {

// Table value if present, else the trivially derivable cases; nullopt when
// genuinely unknown. `conditional` flips when an upper-bound entry is used.
std::optional<std::uint64_t> cap_for_distance(int n, int d,
                                              const DistanceTable& table,
                                              bool& conditional) {
  if (auto e = table.lookup(n, d)) {
    if (e->kind == EntryKind::upper) conditional = true;
    return e->value;
  }
  // Three words pairwise at distance >= d force 3d <= 2n; a pair exists
  // whenever d <= n.
  if (3 * d > 2 * n && d <= n) return 2;
  if (d > n) return 1;
  return std::nullopt;
}

}  // namespace

std::uint64_t class_cap(int n, int c, const DistanceTable& table) {
  if (n < 2 || c < 2) {
    throw std::invalid_argument("class_cap requires n >= 2 and c >= 2");
  }
  int d = 2 * (c / 2) + 2;
  int side_max = n % 2 == 0 ? n : n - 1;  // largest even distance inside a side
  if (d > side_max) return 1;
  bool conditional = false;
  if (auto cap = cap_for_distance(n, d, table, conditional)) return *cap;
  throw std::invalid_argument("insufficient A(n,d) data: need A(" +
                              std::to_string(n) + "," + std::to_string(d) + ")");
}

BipartiteLowerBoundReport bipartite_lower_bound(int n, const DistanceTable& table) {
  if (n < 2 || n > 63) {
    throw std::invalid_argument("bipartite_lower_bound requires 2 <= n <= 63");
  }
  BipartiteLowerBoundReport report;
  report.n = n;
  report.caps.push_back(pow2(n - 1));  // color 1: one whole bipartition side
  int side_max = n % 2 == 0 ? n : n - 1;
  std::uint64_t capped = 0;
  int cutoff = 1;
  for (int c = 2; c <= n; ++c) {
    int d = 2 * (c / 2) + 2;
    if (d > side_max) break;
    bool conditional = false;
    auto cap = cap_for_distance(n, d, table, conditional);
    if (!cap) {
      throw std::invalid_argument("insufficient A(n,d) data: need A(" +
                                  std::to_string(n) + "," + std::to_string(d) + ")");
    }
    if (*cap < 2) break;
    report.caps.push_back(*cap);
    report.data_conditional |= conditional;
    capped += *cap;
    cutoff = c;
  }
  report.cutoff = cutoff;
  report.colored_total = pow2(n - 1) + capped;
  std::uint64_t uncolored =
      report.colored_total >= pow2(n) ? 0 : pow2(n) - report.colored_total;
  report.bound = static_cast<std::uint64_t>(cutoff) + uncolored;
  return report;
}

ProductQuestionReport product_question_check(int n, std::uint64_t chi_factor,
                                             std::uint64_t factor_order,
                                             const DistanceTable& table) {
  if (n < 2 || n > 63) {
    throw std::invalid_argument("product_question_check requires 2 <= n <= 63");
  }
  if (chi_factor < 1 || factor_order < 1) {
    throw std::invalid_argument("factors must be positive");
  }
  ProductQuestionReport report;
  report.n = n;
  report.chi_factor = chi_factor;
  report.factor_order = factor_order;
  report.product_value = chi_factor * factor_order;
  report.trivial_instance = factor_order == 1;

  // Unconditional caps: color k needs pairwise distance >= k+1 anywhere in
  // Q_n, so A(n, k+1) applies; color 1 is an independent set.
  std::uint64_t capped = 0;
  int cutoff = 1;
  for (int c = 2; c <= n; ++c) {
    int d = c + 1;
    bool conditional = false;
    auto cap = cap_for_distance(n, d, table, conditional);
    if (!cap) {
      throw std::invalid_argument("insufficient A(n,d) data: need A(" +
                                  std::to_string(n) + "," + std::to_string(d) + ")");
    }
    if (*cap < 2) break;
    report.data_conditional |= conditional;
    capped += *cap;
    cutoff = c;
  }
  report.cutoff = cutoff;
  report.colored_total = pow2(n - 1) + capped;
  report.unique_count =
      report.colored_total >= pow2(n) ? 0 : pow2(n) - report.colored_total;
  report.lower_bound = static_cast<std::uint64_t>(cutoff) + report.unique_count;
  report.negative_answer = report.lower_bound > report.product_value;
  return report;
}

std::uint64_t rook_packing_number(std::uint64_t q) {
  if (q < 1 || q > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("q out of range");
  }
  return q * q - q + 1;
}

}  // namespace cubepack
