#include "cubepack/codes.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cubepack {

namespace {

void check_m(int m) {
  if (m < 2 || m > 6) {
    throw std::invalid_argument("m must be in 2..6, got " + std::to_string(m));
  }
}

}  // namespace

LinearCode::LinearCode(int length, std::vector<BinaryWord> generators)
    : length_(length), generators_(std::move(generators)) {
  if (length < 1 || length > BinaryWord::kMaxLength) {
    throw std::invalid_argument("bad code length " + std::to_string(length));
  }
  for (const auto& g : generators_) {
    if (g.length() != length_) {
      throw std::invalid_argument("generator length mismatch");
    }
  }
  // Reduce a copy of the basis for membership tests; dependent input is an
  // error, not something to silently repair.
  rref_ = generators_;
  std::size_t next = 0;
  for (int c = 0; c < length_ && next < rref_.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < rref_.size() && rref_[pivot].bit(c + 1) == 0) ++pivot;
    if (pivot == rref_.size()) continue;
    std::swap(rref_[next], rref_[pivot]);
    for (std::size_t r = 0; r < rref_.size(); ++r) {
      if (r != next && rref_[r].bit(c + 1)) rref_[r] = rref_[r] ^ rref_[next];
    }
    pivots_.push_back(c);
    ++next;
  }
  if (next != rref_.size()) {
    throw std::invalid_argument("generators are linearly dependent");
  }
}

LinearCode::LinearCode(const LinearCode& other)
    : length_(other.length_),
      generators_(other.generators_),
      rref_(other.rref_),
      pivots_(other.pivots_),
      cached_min_distance_(other.cached_min_distance_.load()) {}

LinearCode& LinearCode::operator=(const LinearCode& other) {
  if (this != &other) {
    length_ = other.length_;
    generators_ = other.generators_;
    rref_ = other.rref_;
    pivots_ = other.pivots_;
    cached_min_distance_.store(other.cached_min_distance_.load());
  }
  return *this;
}

LinearCode::LinearCode(LinearCode&& other) noexcept
    : length_(other.length_),
      generators_(std::move(other.generators_)),
      rref_(std::move(other.rref_)),
      pivots_(std::move(other.pivots_)),
      cached_min_distance_(other.cached_min_distance_.load()) {}

LinearCode& LinearCode::operator=(LinearCode&& other) noexcept {
  if (this != &other) {
    length_ = other.length_;
    generators_ = std::move(other.generators_);
    rref_ = std::move(other.rref_);
    pivots_ = std::move(other.pivots_);
    cached_min_distance_.store(other.cached_min_distance_.load());
  }
  return *this;
}

std::uint64_t LinearCode::size() const {
  if (dimension() > 63) {
    throw std::invalid_argument("code size does not fit in 64 bits");
  }
  return std::uint64_t{1} << dimension();
}

bool LinearCode::contains(const BinaryWord& w) const {
  if (w.length() != length_) throw std::invalid_argument("incompatible lengths");
  BinaryWord r = w;
  for (std::size_t p = 0; p < rref_.size(); ++p) {
    if (r.bit(pivots_[p] + 1)) r = r ^ rref_[p];
  }
  return r == BinaryWord::zeros(length_);
}

std::optional<int> LinearCode::min_distance() const {
  int cached = cached_min_distance_.load(std::memory_order_relaxed);
  if (cached > 0) return cached;
  if (cached < 0) return std::nullopt;
  if (dimension() == 0) {
    cached_min_distance_.store(-1, std::memory_order_relaxed);
    return std::nullopt;
  }
  int best = length_ + 1;
  for_each_codeword([&](const BinaryWord& w) {
    int wt = w.weight();
    if (wt > 0 && wt < best) best = wt;
  });
  cached_min_distance_.store(best, std::memory_order_relaxed);
  return best;
}

std::vector<BinaryWord> LinearCode::enumerate() const {
  std::vector<BinaryWord> out;
  out.reserve(static_cast<std::size_t>(1) << dimension());
  for_each_codeword([&](const BinaryWord& w) { out.push_back(w); });
  return out;
}

CodeSet::CodeSet(int length, std::vector<BinaryWord> words)
    : length_(length), words_(std::move(words)) {
  if (length < 1 || length > BinaryWord::kMaxLength) {
    throw std::invalid_argument("bad code length " + std::to_string(length));
  }
  for (const auto& w : words_) {
    if (w.length() != length_) throw std::invalid_argument("word length mismatch");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

CodeSet CodeSet::empty_set(int length) { return CodeSet(length, {}); }

bool CodeSet::contains(const BinaryWord& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool CodeSet::subset_of(const CodeSet& other) const {
  if (length_ != other.length_) return false;
  return std::includes(other.words_.begin(), other.words_.end(),
                       words_.begin(), words_.end());
}

std::optional<int> CodeSet::min_distance() const {
  if (words_.size() < 2) return std::nullopt;
  int best = length_ + 1;
  for (std::size_t a = 0; a < words_.size(); ++a) {
    for (std::size_t b = a + 1; b < words_.size(); ++b) {
      best = std::min(best, hamming_distance(words_[a], words_[b]));
    }
  }
  return best;
}

CodeSet CodeSet::translate(const BinaryWord& w) const {
  if (w.length() != length_) throw std::invalid_argument("incompatible lengths");
  std::vector<BinaryWord> out;
  out.reserve(words_.size());
  for (const auto& c : words_) out.push_back(c ^ w);
  return CodeSet(length_, std::move(out));
}

Gf2Matrix hamming_parity_check(int m) {
  check_m(m);
  int cols = (1 << m) - 1;
  Gf2Matrix out(m, cols);
  for (int j = 1; j <= cols; ++j) {
    for (int r = 0; r < m; ++r) {
      out.set_bit(r, j - 1, (j >> (m - 1 - r)) & 1);
    }
  }
  return out;
}

Gf2Matrix extended_parity_check(int m) {
  check_m(m);
  Gf2Matrix base = hamming_parity_check(m);
  int cols = 1 << m;
  Gf2Matrix out(m + 1, cols);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < cols - 1; ++c) {
      out.set_bit(r, c + 1, base.bit(r, c));
    }
  }
  for (int c = 0; c < cols; ++c) out.set_bit(m, c, 1);
  return out;
}

LinearCode hamming_code(int m) {
  Gf2Matrix pc = hamming_parity_check(m);
  return LinearCode(pc.cols(), kernel_basis(pc));
}

LinearCode extended_hamming_code(int m) {
  Gf2Matrix pc = extended_parity_check(m);
  LinearCode code(pc.cols(), kernel_basis(pc));
  if (code.dimension() != (1 << m) - m - 1) {
    throw std::logic_error("extended Hamming code has wrong dimension");
  }
  return code;
}

bool code_a_defined(int i, int m) {
  if (i == 0) return m >= 2;
  return i >= 1 && i <= m - 3;
}

int code_a_dimension(int i, int m) {
  if (!code_a_defined(i, m)) {
    throw std::invalid_argument("A_" + std::to_string(i) + "(" +
                                std::to_string(m) + ") undefined");
  }
  return (1 << (m - i)) - m + 2 * i - 1;
}

int code_a_distance(int i, int m) {
  if (!code_a_defined(i, m)) {
    throw std::invalid_argument("A_" + std::to_string(i) + "(" +
                                std::to_string(m) + ") undefined");
  }
  return 1 << (i + 2);
}

LinearCode code_A(int i, int m) {
  if (!code_a_defined(i, m) || m > 6) {
    throw std::invalid_argument("A_" + std::to_string(i) + "(" +
                                std::to_string(m) + ") undefined");
  }
  if (i == 0) return extended_hamming_code(m);
  LinearCode parent = code_A(i - 1, m - 1);
  int half = 1 << (m - 1);
  std::vector<BinaryWord> gens;
  gens.reserve(parent.generators().size() + 1);
  for (const auto& b : parent.generators()) gens.push_back(concat(b, b));
  gens.push_back(concat(BinaryWord::zeros(half), BinaryWord::ones(half)));
  return LinearCode(1 << m, std::move(gens));
}

CodeSet narrowed_code(int i, int m, int n) {
  if (!code_a_defined(i, m) || m > 6) {
    throw std::invalid_argument("A_" + std::to_string(i) + "(" +
                                std::to_string(m) + ") undefined");
  }
  int full = 1 << m;
  if (n <= (1 << (m - 1)) || n > full) {
    throw std::invalid_argument("narrowed_code requires 2^{m-1} < n <= 2^m");
  }
  LinearCode code = code_A(i, m);
  // Eliminate on the suffix columns; generators left without a suffix pivot
  // span exactly the zero-suffix subcode.
  std::vector<BinaryWord> work = code.generators();
  std::size_t processed = 0;
  for (int c = n + 1; c <= full; ++c) {
    std::size_t pivot = processed;
    while (pivot < work.size() && work[pivot].bit(c) == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[processed], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != processed && work[r].bit(c)) work[r] = work[r] ^ work[processed];
    }
    ++processed;
  }
  std::vector<BinaryWord> restricted;
  restricted.reserve(work.size() - processed);
  for (std::size_t r = processed; r < work.size(); ++r) {
    restricted.push_back(prefix(work[r], n));
  }
  LinearCode sub(n, std::move(restricted));
  return CodeSet(n, sub.enumerate());
}

CodeSet expanded_code(int i, int m_minus_1, int n) {
  if (!code_a_defined(i, m_minus_1) || m_minus_1 > 6) {
    throw std::invalid_argument("A_" + std::to_string(i) + "(" +
                                std::to_string(m_minus_1) + ") undefined");
  }
  int base_len = 1 << m_minus_1;
  if (n < base_len || n > BinaryWord::kMaxLength) {
    throw std::invalid_argument("expanded_code requires 2^{m-1} <= n");
  }
  LinearCode code = code_A(i, m_minus_1);
  std::vector<BinaryWord> out;
  out.reserve(static_cast<std::size_t>(1) << code.dimension());
  int pad = n - base_len;
  code.for_each_codeword([&](const BinaryWord& w) {
    out.push_back(pad == 0 ? w : concat(w, BinaryWord::zeros(pad)));
  });
  return CodeSet(n, std::move(out));
}

CodeSet coset(const LinearCode& code, const BinaryWord& w) {
  if (w.length() != code.length()) {
    throw std::invalid_argument("incompatible lengths");
  }
  std::vector<BinaryWord> out;
  out.reserve(static_cast<std::size_t>(1) << code.dimension());
  code.for_each_codeword([&](const BinaryWord& c) { out.push_back(c ^ w); });
  return CodeSet(code.length(), std::move(out));
}

CodeSet coset(const CodeSet& code, const BinaryWord& w) {
  return code.translate(w);
}

std::optional<int> min_distance(const LinearCode& code) {
  return code.min_distance();
}

std::optional<int> min_distance(const CodeSet& code) {
  return code.min_distance();
}

bool is_perfect_dominating(const CodeSet& code, int n, DominationClass cls) {
  if (n < 1 || n > 20) {
    throw BudgetError("perfect domination sweep too large: n > 20");
  }
  if (code.length() != n) throw std::invalid_argument("incompatible lengths");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> member((total + 63) / 64, 0);
  for (const auto& w : code.words()) {
    std::uint64_t v = w.index();
    member[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  auto in_set = [&](std::uint64_t v) {
    return (member[v >> 6] >> (v & 63)) & 1;
  };
  for (std::uint64_t v = 0; v < total; ++v) {
    if (in_set(v)) continue;
    if (cls == DominationClass::odd && std::popcount(v) % 2 == 0) continue;
    int neighbors = 0;
    for (int j = 0; j < n; ++j) {
      neighbors += static_cast<int>(in_set(v ^ (std::uint64_t{1} << j)));
    }
    if (neighbors != 1) return false;
  }
  return true;
}

std::string format_linear_code(const LinearCode& code) {
  std::string out = "linear-code length=" + std::to_string(code.length()) +
                    " dimension=" + std::to_string(code.dimension()) + "\n";
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  return out;
}

std::string format_code_set(const CodeSet& set) {
  std::string out = "code-set length=" + std::to_string(set.length()) +
                    " size=" + std::to_string(set.size()) + "\n";
  for (const auto& w : set.words()) out += w.to_string() + "\n";
  return out;
}

namespace {

// "key=value" pairs on a header line beginning with the given tag.
std::vector<long long> parse_header(std::istream& in, const std::string& tag,
                                    const std::vector<std::string>& keys) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: empty input");
  std::istringstream hs(line);
  std::string got;
  hs >> got;
  if (got != tag) {
    throw ParseError("line 1: expected '" + tag + "' header, got '" + got + "'");
  }
  std::vector<long long> values;
  for (const auto& key : keys) {
    std::string field;
    if (!(hs >> field) || field.rfind(key + "=", 0) != 0) {
      throw ParseError("line 1: missing field '" + key + "='");
    }
    try {
      values.push_back(std::stoll(field.substr(key.size() + 1)));
    } catch (const std::exception&) {
      throw ParseError("line 1: bad value in field '" + field + "'");
    }
  }
  return values;
}

}  // namespace

LinearCode parse_linear_code(std::istream& in) {
  auto header = parse_header(in, "linear-code", {"length", "dimension"});
  int length = static_cast<int>(header[0]);
  int dim = static_cast<int>(header[1]);
  std::vector<BinaryWord> gens;
  std::string line;
  int lineno = 1;
  while (static_cast<int>(gens.size()) < dim && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    BinaryWord w = BinaryWord::parse(line);
    if (w.length() != length) {
      throw ParseError("line " + std::to_string(lineno) + ": generator length " +
                       std::to_string(w.length()) + " != " + std::to_string(length));
    }
    gens.push_back(w);
  }
  if (static_cast<int>(gens.size()) != dim) {
    throw ParseError("expected " + std::to_string(dim) + " generators, got " +
                     std::to_string(gens.size()));
  }
  return LinearCode(length, std::move(gens));
}

CodeSet parse_code_set(std::istream& in) {
  auto header = parse_header(in, "code-set", {"length", "size"});
  int length = static_cast<int>(header[0]);
  auto count = static_cast<std::size_t>(header[1]);
  std::vector<BinaryWord> words;
  std::string line;
  int lineno = 1;
  while (words.size() < count && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    BinaryWord w = BinaryWord::parse(line);
    if (w.length() != length) {
      throw ParseError("line " + std::to_string(lineno) + ": word length " +
                       std::to_string(w.length()) + " != " + std::to_string(length));
    }
    words.push_back(w);
  }
  if (words.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " words, got " +
                     std::to_string(words.size()));
  }
  return CodeSet(length, std::move(words));
}

}  // namespace cubepack
