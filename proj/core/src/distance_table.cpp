#include "cubepack/distance_table.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cubepack/errors.hpp"

namespace cubepack {

void DistanceTable::add(const DistanceEntry& e) {
  if (e.n < 1 || e.d < 3 || e.value < 1) {
    throw std::invalid_argument("bad distance table entry (n=" +
                                std::to_string(e.n) + ", d=" +
                                std::to_string(e.d) + ", value=" +
                                std::to_string(e.value) + ")");
  }
  auto key = std::make_pair(e.n, e.d);
  if (entries_.count(key)) {
    throw std::invalid_argument("duplicate entry for (n=" + std::to_string(e.n) +
                                ", d=" + std::to_string(e.d) + ")");
  }
  entries_[key] = e;
}

std::optional<DistanceEntry> DistanceTable::lookup(int n, int d) const {
  auto it = entries_.find({n, d});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void DistanceTable::validate_monotonic() const {
  const DistanceEntry* prev = nullptr;
  for (const auto& [key, e] : entries_) {
    if (prev && prev->n == e.n && e.value > prev->value) {
      throw std::invalid_argument(
          "monotonicity violation: A(" + std::to_string(e.n) + "," +
          std::to_string(e.d) + ")=" + std::to_string(e.value) +
          " exceeds A(" + std::to_string(prev->n) + "," +
          std::to_string(prev->d) + ")=" + std::to_string(prev->value));
    }
    prev = &e;
  }
}

DistanceTable ingest_distance_table(std::istream& in) {
  DistanceTable table;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("n,d,value,kind", 0) != 0) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header 'n,d,value,kind,source'");
      }
      header_seen = true;
      continue;
    }
    // n,d,value,kind then the rest of the line is the source note.
    std::array<std::string, 4> fields;
    std::size_t pos = 0;
    for (auto& f : fields) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 5 comma-separated fields");
      }
      f = line.substr(pos, comma - pos);
      pos = comma + 1;
    }
    std::string source = line.substr(pos);
    DistanceEntry e;
    try {
      e.n = std::stoi(fields[0]);
      e.d = std::stoi(fields[1]);
      e.value = std::stoull(fields[2]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad number");
    }
    if (fields[3] == "exact") {
      e.kind = EntryKind::exact;
    } else if (fields[3] == "upper") {
      e.kind = EntryKind::upper;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": kind must be "
                       "'exact' or 'upper', got '" + fields[3] + "'");
    }
    e.source = source;
    try {
      table.add(e);
    } catch (const std::invalid_argument& err) {
      throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  if (table.size() == 0) throw ParseError("no entries");
  table.validate_monotonic();
  return table;
}

DistanceTable ingest_distance_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return ingest_distance_table(in);
}

}  // namespace cubepack
