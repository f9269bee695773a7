#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace cubepack {

enum class EntryKind { exact, upper };

struct DistanceEntry {
  int n = 0;
  int d = 0;
  std::uint64_t value = 0;
  EntryKind kind = EntryKind::exact;
  std::string source;
};

/// Ingested table of A(n,d) values: the maximum number of words of length n
/// at pairwise Hamming distance >= d, each entry flagged exact or
/// upper-bound, with a free-text source note.
class DistanceTable {
 public:
  void add(const DistanceEntry& e);
  std::optional<DistanceEntry> lookup(int n, int d) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::pair<int, int>, DistanceEntry>& entries() const {
    return entries_;
  }
  /// For fixed n, values must be non-increasing in d.
  void validate_monotonic() const;

 private:
  std::map<std::pair<int, int>, DistanceEntry> entries_;
};

/// CSV with header `n,d,value,kind,source`; kind in {exact, upper}; the
/// source field is everything after the fourth comma. Rejects empty tables,
/// duplicate (n,d) pairs, malformed kinds and monotonicity violations.
DistanceTable ingest_distance_table(std::istream& in);
DistanceTable ingest_distance_table(const std::string& path);

}  // namespace cubepack
