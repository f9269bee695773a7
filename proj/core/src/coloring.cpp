#include "cubepack/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "cubepack/codes.hpp"
#include "cubepack/errors.hpp"

namespace cubepack {

std::uint32_t PackingColoring::color_of_index(std::uint64_t v) const {
  if (v >= assignment.size()) throw std::invalid_argument("vertex out of range");
  return assignment[static_cast<std::size_t>(v)];
}

std::uint32_t PackingColoring::color_of(const BinaryWord& vertex) const {
  if (vertex.length() != n) throw std::invalid_argument("incompatible lengths");
  return color_of_index(vertex.index());
}

std::string PackingColoring::provenance_of(std::uint32_t color) const {
  auto it = provenance.find(color);
  if (it != provenance.end()) return it->second;
  if (first_unique_color != 0 && color >= first_unique_color) return "unique";
  return "";
}

namespace {

struct Builder {
  int n;
  int m;
  std::uint64_t total;
  std::vector<std::uint32_t> color;
  std::map<std::uint32_t, std::vector<std::uint64_t>> classes;  // colors >= 2
  PackingColoring out;

  explicit Builder(int n_) : n(n_) {
    m = ceil_log2(n);
    total = std::uint64_t{1} << n;
    color.assign(static_cast<std::size_t>(total), 0);
  }

  void place(std::uint32_t c, const std::vector<std::uint64_t>& vs,
             const std::string& tag) {
    for (std::uint64_t v : vs) {
      if (color[static_cast<std::size_t>(v)] != 0) {
        throw std::logic_error(
            "construction would doubly color vertex " +
            BinaryWord::from_index(n, v).to_string() + " with colors " +
            std::to_string(color[static_cast<std::size_t>(v)]) + " and " +
            std::to_string(c));
      }
    }
    for (std::uint64_t v : vs) color[static_cast<std::size_t>(v)] = c;
    classes[c] = vs;
    out.provenance[c] = tag;
  }
};

std::vector<std::uint64_t> to_indices(const CodeSet& set) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const auto& w : set.words()) out.push_back(w.index());
  return out;
}

}  // namespace

PackingColoring construct_packing_coloring(int n) {
  if (n < 5 || n > 20) {
    throw std::invalid_argument("construct_packing_coloring requires 5 <= n <= 20");
  }
  Builder b(n);
  b.out.n = n;
  const int m = b.m;

  for (std::uint64_t v = 0; v < b.total; ++v) {
    if (std::popcount(v) % 2 == 0) b.color[static_cast<std::size_t>(v)] = 1;
  }
  b.out.provenance[1] = "even-parity side";

  std::vector<CodeSet> tilde;
  std::vector<CodeSet> expanded;
  for (int i = 0; i <= m - 3; ++i) {
    tilde.push_back(narrowed_code(i, m, n));
    expanded.push_back(code_a_defined(i, m - 1)
                           ? expanded_code(i, m - 1, n)
                           : CodeSet::empty_set(n));
  }

  // Case 1: colors 2..2^{m-1}-1 from coset classes D_c / E_c (larger wins,
  // ties to D_c).
  for (std::uint32_t c = 2; c < (1u << (m - 1)); ++c) {
    int i = 0;
    while (c >= (1u << (i + 2))) ++i;
    BinaryWord e_c = BinaryWord::unit(static_cast<int>(c), n);
    CodeSet d = tilde[static_cast<std::size_t>(i)].translate(e_c);
    if (expanded[static_cast<std::size_t>(i)].size() > d.size()) {
      CodeSet e = expanded[static_cast<std::size_t>(i)].translate(e_c);
      b.place(c, to_indices(e),
              "E_c: expanded A_" + std::to_string(i) + "(" + std::to_string(m - 1) +
                  ";" + std::to_string(n) + ") + e_" + std::to_string(c));
    } else {
      b.place(c, to_indices(d),
              "D_c: narrowed A_" + std::to_string(i) + "(" + std::to_string(m) +
                  ";" + std::to_string(n) + ") + e_" + std::to_string(c));
    }
  }

  // Case 2: colors 2^{m-1}..n-2 (and n-1 for even n) as distant pairs.
  const bool even = n % 2 == 0;
  const std::uint32_t lo = 1u << (m - 1);
  const std::uint32_t hi = static_cast<std::uint32_t>(even ? n - 1 : n - 2);
  if (lo <= hi) {
    BinaryWord one_o = even ? BinaryWord::ones(n)
                            : BinaryWord::ones(n) ^ BinaryWord::unit(n, n);
    auto pair_for = [&](std::uint32_t c, const BinaryWord& w) {
      BinaryWord e_c = BinaryWord::unit(static_cast<int>(c), n);
      return std::vector<std::uint64_t>{e_c.index(), (w ^ e_c).index()};
    };
    if (tilde[0].contains(one_o)) {
      for (std::uint32_t c = lo; c <= hi; ++c) {
        b.place(c, pair_for(c, one_o), "pair {e_c, 1_o + e_c}");
      }
    } else {
      BinaryWord x = BinaryWord::zeros(n);
      bool found = false;
      for (const auto& w : tilde[0].words()) {
        if (hamming_distance(w, one_o) == 2) {
          x = w;  // words() is ascending, the first hit is the smallest
          found = true;
          break;
        }
      }
      if (!found) {
        throw std::logic_error("no vertex of the narrowed code at distance 2 "
                               "from 1_o; construction cannot proceed");
      }
      const std::uint32_t easy_hi =
          static_cast<std::uint32_t>(even ? n - 3 : n - 4);
      for (std::uint32_t c = lo; c <= std::min(hi, easy_hi); ++c) {
        b.place(c, pair_for(c, x), "pair {e_c, x + e_c}");
      }
      const std::uint32_t specials[2] = {
          static_cast<std::uint32_t>(even ? n - 2 : n - 3),
          static_cast<std::uint32_t>(even ? n - 1 : n - 2)};
      for (std::uint32_t cp : specials) {
        if (cp < lo) continue;
        BinaryWord e_cp = BinaryWord::unit(static_cast<int>(cp), n);
        std::uint64_t endpoint = (one_o ^ e_cp).index();
        if (b.color[static_cast<std::size_t>(endpoint)] != 0) {
          // Displace the blocking class wholesale, per the proof: translate
          // it by e_{c''} + e_1 (first special color) or e_{c''} + e_n
          // (color n-2); translation keeps its pairwise distances.
          std::uint32_t cpp = b.color[static_cast<std::size_t>(endpoint)];
          int target = (cp == static_cast<std::uint32_t>(n - 2)) ? n : 1;
          std::uint64_t shift =
              (BinaryWord::unit(static_cast<int>(cpp), n) ^
               BinaryWord::unit(target, n)).index();
          std::vector<std::uint64_t> moved;
          moved.reserve(b.classes[cpp].size());
          bool collision = false;
          for (std::uint64_t v : b.classes[cpp]) {
            std::uint64_t w = v ^ shift;
            std::uint32_t col = b.color[static_cast<std::size_t>(w)];
            if (col != 0 && col != cpp) {
              collision = true;
              break;
            }
            moved.push_back(w);
          }
          if (collision) {
            b.out.notes.push_back("dropped pair for color " + std::to_string(cp) +
                                  ": displacing class " + std::to_string(cpp) +
                                  " would collide");
            continue;
          }
          for (std::uint64_t v : b.classes[cpp]) b.color[static_cast<std::size_t>(v)] = 0;
          for (std::uint64_t v : moved) b.color[static_cast<std::size_t>(v)] = cpp;
          b.classes[cpp] = moved;
          b.out.provenance[cpp] += ", displaced by e_" + std::to_string(cpp) +
                                   " + e_" + std::to_string(target);
          b.out.notes.push_back("color " + std::to_string(cp) +
                                ": displaced class " + std::to_string(cpp) +
                                " by e_" + std::to_string(cpp) + " + e_" +
                                std::to_string(target));
        }
        if (b.color[static_cast<std::size_t>(e_cp.index())] != 0 ||
            b.color[static_cast<std::size_t>(endpoint)] != 0) {
          b.out.notes.push_back("dropped pair for color " + std::to_string(cp) +
                                ": endpoints still taken after displacement");
          continue;
        }
        b.place(cp, {e_cp.index(), endpoint}, "pair {e_c, 1_o + e_c}");
      }
    }
  }

  // Fresh unique colors for whatever is left, ascending vertex order,
  // consecutively from the smallest unused color.
  std::uint32_t next = 2;
  std::uint32_t first_unique = 0;
  for (std::uint64_t v = 0; v < b.total; ++v) {
    if (b.color[static_cast<std::size_t>(v)] != 0) continue;
    while (b.classes.count(next)) ++next;
    if (first_unique == 0) first_unique = next;
    b.color[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  b.out.first_unique_color = first_unique;
  b.out.assignment = std::move(b.color);

  VerificationReport report = verify_packing_coloring(b.out);
  if (!report.valid) {
    std::string what = "constructed coloring failed self-verification";
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      what += ": color " + std::to_string(v.color) + " at " +
              BinaryWord::from_index(n, v.u).to_string() + "," +
              BinaryWord::from_index(n, v.v).to_string() + " distance " +
              std::to_string(v.distance);
    }
    throw std::logic_error(what);
  }
  return b.out;
}

namespace {

int verify_worker_count(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CUBEPACK_VERIFY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return static_cast<int>(std::min<std::size_t>(hw, jobs));
}

struct ClassCheck {
  std::vector<Violation> violations;
  std::uint64_t count = 0;
};

// All violating pairs within one class of color k: either brute pairwise or,
// when cheaper, by enumerating flip masks of weight <= k around each vertex.
ClassCheck check_class(std::uint32_t k, const std::vector<std::uint64_t>& vs,
                       int n) {
  ClassCheck out;
  auto record = [&](std::uint64_t a, std::uint64_t b, int d) {
    ++out.count;
    if (out.violations.size() < kMaxStoredViolations) {
      out.violations.push_back({k, std::min(a, b), std::max(a, b), d});
    }
  };
  if (k == 1) {
    // Distance >= 2 fails only on adjacent pairs.
    std::vector<std::uint64_t> member((std::uint64_t{1} << n) / 64 + 1, 0);
    for (std::uint64_t v : vs) member[v >> 6] |= std::uint64_t{1} << (v & 63);
    for (std::uint64_t v : vs) {
      for (int j = 0; j < n; ++j) {
        std::uint64_t w = v ^ (std::uint64_t{1} << j);
        if (w > v && ((member[w >> 6] >> (w & 63)) & 1)) record(v, w, 1);
      }
    }
    return out;
  }
  const std::uint64_t s = vs.size();
  long double ball = 0;
  long double binom = 1;
  for (int j = 1; j <= std::min<int>(static_cast<int>(k), n); ++j) {
    binom = binom * (n - j + 1) / j;
    ball += binom;
  }
  if (static_cast<long double>(s) * s / 2 <= static_cast<long double>(s) * ball) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        int d = std::popcount(vs[a] ^ vs[b]);
        if (d < static_cast<int>(k) + 1) record(vs[a], vs[b], d);
      }
    }
    return out;
  }
  std::vector<std::uint64_t> member((std::uint64_t{1} << n) / 64 + 1, 0);
  for (std::uint64_t v : vs) member[v >> 6] |= std::uint64_t{1} << (v & 63);
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t v : vs) {
    for (int j = 1; j <= std::min<int>(static_cast<int>(k), n); ++j) {
      // Gosper's hack over all flip masks of weight j.
      std::uint64_t mask = (std::uint64_t{1} << j) - 1;
      while (mask < top) {
        std::uint64_t w = v ^ mask;
        if (w > v && ((member[w >> 6] >> (w & 63)) & 1)) record(v, w, j);
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_packing_coloring(const PackingColoring& pc) {
  if (pc.n < 0 || pc.n > 20) {
    throw BudgetError("verification sweep too large: n > 20");
  }
  VerificationReport report;
  const std::uint64_t total = std::uint64_t{1} << pc.n;
  if (pc.assignment.size() != total) {
    report.total = false;
    return report;
  }
  report.total = true;
  std::map<std::uint32_t, std::vector<std::uint64_t>> classes;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint32_t c = pc.assignment[static_cast<std::size_t>(v)];
    if (c == 0) {
      report.total = false;
      return report;
    }
    classes[c].push_back(v);
  }
  for (const auto& [c, vs] : classes) {
    report.class_sizes[c] = vs.size();
  }
  report.colors_used = static_cast<std::uint32_t>(classes.size());

  std::vector<std::pair<std::uint32_t, const std::vector<std::uint64_t>*>> jobs;
  for (const auto& [c, vs] : classes) {
    if (vs.size() >= 2) jobs.emplace_back(c, &vs);
  }
  std::vector<ClassCheck> results(jobs.size());
  int workers = verify_worker_count(jobs.size());
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      results[j] = check_class(jobs[j].first, *jobs[j].second, pc.n);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (std::size_t j = next.fetch_add(1); j < jobs.size();
             j = next.fetch_add(1)) {
          results[j] = check_class(jobs[j].first, *jobs[j].second, pc.n);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& r : results) {
    report.violation_count += r.count;
    for (auto& v : r.violations) {
      if (report.violations.size() < kMaxStoredViolations) {
        report.violations.push_back(v);
      }
    }
  }
  report.valid = report.total && report.violation_count == 0;
  return report;
}

ColorHistogram color_histogram(const PackingColoring& pc) {
  ColorHistogram hist;
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t c : pc.assignment) ++counts[c];
  hist.counts.assign(counts.begin(), counts.end());
  hist.non_increasing = true;
  for (std::size_t i = 1; i < hist.counts.size(); ++i) {
    if (hist.counts[i].second > hist.counts[i - 1].second) {
      hist.non_increasing = false;
      break;
    }
  }
  return hist;
}

}  // namespace cubepack
