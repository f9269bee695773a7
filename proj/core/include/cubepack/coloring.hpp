#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubepack/word.hpp"

namespace cubepack {

/// Total color assignment on V(Q_n). Vertices are indexed by their integer
/// encoding (the word's big-endian value); colors are positive integers.
struct PackingColoring {
  int n = 0;
  std::vector<std::uint32_t> assignment;          // size 2^n
  std::map<std::uint32_t, std::string> provenance;  // structured colors only
  std::uint32_t first_unique_color = 0;           // 0 when none were assigned
  std::vector<std::string> notes;                 // construction findings

  std::uint32_t color_of_index(std::uint64_t v) const;
  std::uint32_t color_of(const BinaryWord& vertex) const;
  /// Annotation for a color: stored provenance, or "unique" past the last
  /// structured color.
  std::string provenance_of(std::uint32_t color) const;
};

struct Violation {
  std::uint32_t color = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  int distance = 0;
};

inline constexpr std::size_t kMaxStoredViolations = 100000;

struct VerificationReport {
  bool valid = false;
  bool total = false;                 // every vertex carries a color >= 1
  std::uint32_t colors_used = 0;
  std::vector<Violation> violations;  // first kMaxStoredViolations of them
  std::uint64_t violation_count = 0;  // full count
  std::map<std::uint32_t, std::uint64_t> class_sizes;
};

/// Builds the constructive packing coloring of Q_n (5 <= n <= 20): color 1 on
/// the even side, coset classes from the narrowed/expanded codes for colors
/// 2..2^{m-1}-1, distant pairs (with the displacement fix when a pair's
/// endpoint is taken) for colors 2^{m-1}..n-2 (and n-1 for even n), and fresh
/// unique colors for the rest. Self-verifies before returning.
PackingColoring construct_packing_coloring(int n);

/// Checks totality and, per color k, that all same-colored pairs are at
/// distance >= k+1. Requires pc.n <= 20. Never throws on bad colorings;
/// problems are reported. Color classes may be checked in parallel
/// (CUBEPACK_VERIFY_THREADS caps the worker count).
VerificationReport verify_packing_coloring(const PackingColoring& pc);

struct ColorHistogram {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;  // ascending color
  bool non_increasing = false;
};

ColorHistogram color_histogram(const PackingColoring& pc);

/// Exact packing chromatic number of Q_n by branch and bound; n <= 4.
int exact_packing_chromatic(int n);

}  // namespace cubepack
