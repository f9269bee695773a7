#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cubepack/codes.hpp"

using namespace cubepack;

namespace {

BinaryWord w(const char* bits) { return BinaryWord::parse(bits); }

// the 16 codewords of the extended Hamming code of order 3
const std::vector<const char*> kExtHamming3 = {
    "00000000", "11110000", "11001100", "11000011", "10101010", "10100101",
    "10011001", "10010110", "00001111", "00110011", "00111100", "01010101",
    "01011010", "01100110", "01101001", "11111111"};

CodeSet ext3_set() {
  std::vector<BinaryWord> words;
  for (const char* bits : kExtHamming3) words.push_back(w(bits));
  return CodeSet(8, std::move(words));
}

std::vector<std::pair<int, int>> valid_family_indices(int max_m) {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= max_m; ++m) {
    for (int i = 0; code_a_defined(i, m); ++i) out.emplace_back(i, m);
  }
  return out;
}

}  // namespace

TEST_CASE("hamming parity check matrices") {
  Gf2Matrix m2 = hamming_parity_check(2);
  CHECK(m2.to_string() == "011\n101\n");

  // oracle: columns are the nonzero m-bit vectors in ascending numeric order
  Gf2Matrix m3 = hamming_parity_check(3);
  REQUIRE(m3.rows() == 3);
  REQUIRE(m3.cols() == 7);
  for (int j = 1; j <= 7; ++j) {
    for (int r = 0; r < 3; ++r) {
      CHECK(m3.bit(r, j - 1) == ((j >> (2 - r)) & 1));
    }
  }
  CHECK(kernel_basis(m3).size() == 4);  // kernel size 2^{7-3}

  CHECK_THROWS_AS(hamming_parity_check(1), std::invalid_argument);
  CHECK_THROWS_AS(hamming_parity_check(7), std::invalid_argument);
}

TEST_CASE("extended parity check matrices") {
  Gf2Matrix m2 = extended_parity_check(2);
  CHECK(m2.to_string() == "0011\n0101\n1111\n");
  auto kernel = kernel_basis(m2);
  LinearCode code(4, kernel);
  CodeSet set(4, code.enumerate());
  CHECK(set == CodeSet(4, {w("0000"), w("1111")}));

  for (int m = 2; m <= 6; ++m) {
    Gf2Matrix em = extended_parity_check(m);
    REQUIRE(em.rows() == m + 1);
    REQUIRE(em.cols() == (1 << m));
    for (int r = 0; r < em.rows(); ++r) {
      CHECK(em.row(r).weight() % 2 == 0);
    }
  }
}

TEST_CASE("hamming codes") {
  CHECK(CodeSet(3, hamming_code(2).enumerate()) ==
        CodeSet(3, {w("000"), w("111")}));

  LinearCode h3 = hamming_code(3);
  CHECK(h3.dimension() == 4);
  CHECK(h3.min_distance() == 3);
  // a Hamming code is a perfect dominating set of the whole hypercube
  CHECK(is_perfect_dominating(CodeSet(7, h3.enumerate()), 7,
                              DominationClass::all));
}

TEST_CASE("extended Hamming codes") {
  CHECK(CodeSet(4, extended_hamming_code(2).enumerate()) ==
        CodeSet(4, {w("0000"), w("1111")}));
  CHECK(CodeSet(8, extended_hamming_code(3).enumerate()) == ext3_set());

  LinearCode h4 = extended_hamming_code(4);
  CHECK(h4.dimension() == 11);
  CHECK(h4.size() == 2048);
  CHECK(h4.min_distance() == 4);
}

TEST_CASE("code family construction and guards") {
  CHECK(CodeSet(4, code_A(0, 2).enumerate()) ==
        CodeSet(4, {w("0000"), w("1111")}));

  LinearCode a14 = code_A(1, 4);
  CHECK(a14.size() == 32);
  CHECK(a14.min_distance() == 8);

  CHECK_THROWS_WITH_AS(code_A(1, 3), "A_1(3) undefined", std::invalid_argument);
  CHECK_THROWS_AS(code_A(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(code_A(0, 7), std::invalid_argument);

  // the enumerated code is exactly {uu, u u-bar : u in A_{i-1}(m-1)}
  for (auto [i, m] : {std::pair{1, 4}, std::pair{2, 5}}) {
    std::set<std::string> expected;
    code_A(i - 1, m - 1).for_each_codeword([&](const BinaryWord& u) {
      expected.insert(concat(u, u).to_string());
      expected.insert(concat(u, complement(u)).to_string());
    });
    std::set<std::string> got;
    code_A(i, m).for_each_codeword(
        [&](const BinaryWord& c) { got.insert(c.to_string()); });
    CHECK(got == expected);
  }
}

TEST_CASE("min distance operations") {
  CHECK(min_distance(extended_hamming_code(3)) == 4);
  CHECK(min_distance(code_A(2, 5)) == 16);
  CHECK(min_distance(CodeSet(5, {w("00000")})) == std::nullopt);
  CHECK(min_distance(LinearCode(5, {})) == std::nullopt);
  CHECK(min_distance(CodeSet(5, {w("00000"), w("11100")})) == 3);

  // over-budget enumeration refuses instead of truncating
  std::vector<BinaryWord> gens;
  for (int i = 1; i <= kMaxEnumerationDimension + 1; ++i) {
    gens.push_back(BinaryWord::unit(i, 30));
  }
  LinearCode wide(30, gens);
  CHECK_THROWS_AS(wide.min_distance(), BudgetError);
}

TEST_CASE("cosets") {
  LinearCode h2 = extended_hamming_code(2);
  CHECK(coset(h2, w("0000")) == CodeSet(4, {w("0000"), w("1111")}));
  CHECK(coset(h2, w("1000")) == CodeSet(4, {w("1000"), w("0111")}));
  CHECK_THROWS_AS(coset(h2, w("000")), std::invalid_argument);

  std::mt19937_64 rng(555);
  for (auto [i, m] : {std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
    LinearCode code = code_A(i, m);
    auto base = min_distance(code);
    for (int rep = 0; rep < 100; ++rep) {
      std::uint64_t word_bits = rng() & ((std::uint64_t{1} << code.length()) - 1);
      BinaryWord shift = BinaryWord::from_index(code.length(), word_bits);
      CHECK(coset(code, shift).min_distance() == base);
    }
  }
}

TEST_CASE("narrowed codes") {
  CHECK(narrowed_code(0, 3, 5) == CodeSet(5, {w("00000"), w("11110")}));

  CodeSet full = narrowed_code(0, 3, 8);
  CHECK(full == ext3_set());

  CHECK(narrowed_code(0, 4, 9).size() >= 2048 / (1 << 7));

  CHECK_THROWS_AS(narrowed_code(0, 3, 4), std::invalid_argument);   // n <= 2^{m-1}
  CHECK_THROWS_AS(narrowed_code(0, 3, 9), std::invalid_argument);   // n > 2^m
  CHECK_THROWS_AS(narrowed_code(1, 3, 5), std::invalid_argument);   // A_1(3)

  // size and distance against eq.-style lower bounds, plus a brute-force
  // cross-check of the zero-suffix filtering
  for (int m = 3; m <= 4; ++m) {
    for (int i = 0; code_a_defined(i, m); ++i) {
      for (int n = (1 << (m - 1)) + 1; n <= (1 << m); ++n) {
        CodeSet narrowed = narrowed_code(i, m, n);
        int suffix = (1 << m) - n;
        std::vector<BinaryWord> brute;
        code_A(i, m).for_each_codeword([&](const BinaryWord& c) {
          bool zero_suffix = true;
          for (int k = n + 1; k <= (1 << m); ++k) {
            if (c.bit(k)) zero_suffix = false;
          }
          if (zero_suffix) brute.push_back(prefix(c, n));
        });
        CHECK(narrowed == CodeSet(n, brute));
        int dim = code_a_dimension(i, m);
        if (dim >= suffix) {
          CHECK(narrowed.size() >= (std::uint64_t{1} << (dim - suffix)));
        }
        if (narrowed.size() >= 2) {
          CHECK(narrowed.min_distance().value() >= code_a_distance(i, m));
        }
      }
    }
  }
}

TEST_CASE("expanded codes") {
  CHECK(expanded_code(0, 2, 5) == CodeSet(5, {w("00000"), w("11110")}));
  CHECK(expanded_code(0, 3, 8) == ext3_set());
  CHECK(expanded_code(0, 2, 5).subset_of(narrowed_code(0, 3, 5)));
  CHECK_THROWS_AS(expanded_code(0, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(expanded_code(1, 3, 9), std::invalid_argument);

  // expanded-inside-narrowed containment across the whole working range
  for (int n = 5; n <= 16; ++n) {
    int m = ceil_log2(n);
    for (int i = 0; code_a_defined(i, m); ++i) {
      if (!code_a_defined(i, m - 1)) continue;
      CHECK(expanded_code(i, m - 1, n).subset_of(narrowed_code(i, m, n)));
    }
  }
}

TEST_CASE("family size and distance closed forms") {
  // all valid (i,m) with m <= 5, plus (i,6) for i >= 2
  std::vector<std::pair<int, int>> cases = {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                            {1, 4}, {1, 5}, {2, 5}, {2, 6},
                                            {3, 6}};
  for (auto [i, m] : cases) {
    LinearCode code = code_A(i, m);
    std::uint64_t count = 0;
    code.for_each_codeword([&](const BinaryWord&) { ++count; });
    CHECK(count == (std::uint64_t{1} << code_a_dimension(i, m)));
    CHECK(min_distance(code) == code_a_distance(i, m));
  }
}

TEST_CASE("containment lemmas") {
  // A_i(m) inside the extended Hamming code, via parity-check membership of
  // the generators (no enumeration)
  for (auto [i, m] : valid_family_indices(6)) {
    Gf2Matrix check = extended_parity_check(m);
    BinaryWord zero_syndrome = BinaryWord::zeros(check.rows());
    LinearCode code = code_A(i, m);
    for (const auto& g : code.generators()) {
      CHECK(check.multiply(g) == zero_syndrome);
    }
  }

  // A_{i+j}(m) inside A_i(m), via reduced-basis membership
  for (int m = 4; m <= 5; ++m) {
    for (int i = 0; code_a_defined(i, m); ++i) {
      for (int j = 1; code_a_defined(i + j, m); ++j) {
        LinearCode outer = code_A(i, m);
        LinearCode inner = code_A(i + j, m);
        for (const auto& g : inner.generators()) {
          CHECK(outer.contains(g));
        }
      }
    }
  }

  // restriction lemma: every word of A_{i-1}(m-1) extends to a word of
  // A_0(m) on the first half of the coordinates (uu is such a word)
  for (int m = 4; m <= 5; ++m) {
    for (int i = 1; code_a_defined(i, m); ++i) {
      LinearCode outer = code_A(0, m);
      code_A(i - 1, m - 1).for_each_codeword([&](const BinaryWord& u) {
        BinaryWord doubled = concat(u, u);
        CHECK(outer.contains(doubled));
        CHECK(prefix(doubled, 1 << (m - 1)) == u);
      });
    }
  }
}

TEST_CASE("linearity closure on enumerable family members") {
  std::mt19937_64 rng(31337);
  for (auto [i, m] : {std::pair{0, 4}, std::pair{1, 4}, std::pair{1, 5},
                      std::pair{2, 5}, std::pair{3, 6}}) {
    LinearCode code = code_A(i, m);
    auto words = code.enumerate();
    for (int rep = 0; rep < 200; ++rep) {
      const auto& a = words[rng() % words.size()];
      const auto& b = words[rng() % words.size()];
      CHECK(code.contains(a ^ b));
    }
  }
}

TEST_CASE("perfect domination") {
  CodeSet h2(3, {w("000"), w("111")});
  CHECK(is_perfect_dominating(h2, 3, DominationClass::all));

  // oracle: sweep the 8 vertices by hand
  for (std::uint64_t v = 0; v < 8; ++v) {
    BinaryWord vertex = BinaryWord::from_index(3, v);
    if (h2.contains(vertex)) continue;
    int neighbors = 0;
    for (int i = 1; i <= 3; ++i) {
      neighbors += h2.contains(vertex ^ BinaryWord::unit(i, 3)) ? 1 : 0;
    }
    CHECK(neighbors == 1);
  }

  CHECK(is_perfect_dominating(ext3_set(), 8, DominationClass::odd));
  CHECK_FALSE(is_perfect_dominating(CodeSet(4, {w("0000")}), 4,
                                    DominationClass::all));
  CHECK_THROWS_AS(is_perfect_dominating(h2, 21, DominationClass::all),
                  BudgetError);
}

TEST_CASE("code text formats round trip") {
  LinearCode a14 = code_A(1, 4);
  std::istringstream in(format_linear_code(a14));
  LinearCode back = parse_linear_code(in);
  CHECK(back.length() == a14.length());
  CHECK(back.generators() == a14.generators());

  CodeSet narrowed = narrowed_code(0, 4, 9);
  std::istringstream in2(format_code_set(narrowed));
  CHECK(parse_code_set(in2) == narrowed);

  std::istringstream bad("code-set length=4 size=2\n0000\n");
  CHECK_THROWS_AS(parse_code_set(bad), ParseError);
}

TEST_CASE("generator independence is enforced") {
  CHECK_THROWS_AS(LinearCode(4, {w("1100"), w("0011"), w("1111")}),
                  std::invalid_argument);
  CHECK_NOTHROW(LinearCode(4, {w("1100"), w("0011")}));
}

TEST_CASE("code sets canonicalize") {
  CodeSet set(4, {w("1111"), w("0000"), w("1111")});
  CHECK(set.size() == 2);
  CHECK(set.words().front() == w("0000"));
  CHECK(set.contains(w("1111")));
  CHECK_FALSE(set.contains(w("1010")));
  CHECK_THROWS_AS(set.translate(w("00000")), std::invalid_argument);
}
