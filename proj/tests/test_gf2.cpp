#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cubepack/matrix.hpp"
#include "cubepack/word.hpp"

using namespace cubepack;

namespace {

BinaryWord w(const char* bits) { return BinaryWord::parse(bits); }

BinaryWord random_word(std::mt19937_64& rng, int length) {
  std::uint64_t hi = rng(), lo = rng();
  if (length <= 64) {
    hi = 0;
    lo &= length == 64 ? ~0ull : ((1ull << length) - 1);
  } else if (length < 128) {
    hi &= (1ull << (length - 64)) - 1;
  }
  return BinaryWord::from_limbs(length, hi, lo);
}

}  // namespace

TEST_CASE("hamming distance examples") {
  CHECK(hamming_distance(w("0000"), w("1111")) == 4);
  BinaryWord u = w("10110");
  CHECK(hamming_distance(u, u) == 0);
  CHECK(hamming_distance(w("00000"), w("11110")) == 4);
  CHECK_THROWS_WITH_AS(hamming_distance(w("000"), w("0000")),
                       "incompatible lengths", std::invalid_argument);
}

TEST_CASE("add examples") {
  CHECK(add(w("1111"), w("0000")) == w("1111"));
  CHECK(add(w("1111"), w("1111")) == w("0000"));
  CHECK(add(w("11110000"), w("11001100")) == w("00111100"));
  CHECK_THROWS_AS(add(w("01"), w("011")), std::invalid_argument);
}

TEST_CASE("complement examples") {
  CHECK(complement(w("0000")) == w("1111"));
  CHECK(complement(w("11110")) == w("00001"));
  BinaryWord u = w("0110101");
  CHECK(complement(complement(u)) == u);
  CHECK(hamming_distance(u, complement(u)) == u.length());
}

TEST_CASE("weight and parity examples") {
  CHECK(weight(w("0000")) == 0);
  CHECK(parity(w("0000")) == Parity::even);
  CHECK(weight(w("11110000")) == 4);
  CHECK(parity(w("11110000")) == Parity::even);
  BinaryWord e35 = unit_vector(3, 5);
  CHECK(e35 == w("00100"));
  CHECK(weight(e35) == 1);
  CHECK(parity(e35) == Parity::odd);
}

TEST_CASE("concat and prefix examples") {
  CHECK(concat(w("11"), w("00")) == w("1100"));
  CHECK(prefix(w("11110000"), 5) == w("11110"));
  BinaryWord u = w("010011");
  CHECK(prefix(u, u.length()) == u);
  CHECK_THROWS_AS(prefix(u, 0), std::invalid_argument);
  CHECK_THROWS_AS(prefix(u, 7), std::invalid_argument);
}

TEST_CASE("unit vector examples") {
  CHECK(unit_vector(1, 4) == w("1000"));
  CHECK(unit_vector(4, 4) == w("0001"));
  CHECK(unit_vector(2, 5) == w("01000"));
  CHECK_THROWS_AS(unit_vector(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(unit_vector(5, 4), std::invalid_argument);
}

TEST_CASE("print/parse round trip and encoding order") {
  std::mt19937_64 rng(20240811);
  for (int length : {1, 5, 17, 63, 64, 65, 100, 127, 128}) {
    for (int rep = 0; rep < 50; ++rep) {
      BinaryWord u = random_word(rng, length);
      CHECK(BinaryWord::parse(u.to_string()) == u);
      BinaryWord v = random_word(rng, length);
      // big-endian encoding: value order equals bitstring order
      CHECK((u < v) == (u.to_string() < v.to_string()));
    }
  }
  CHECK(BinaryWord::from_index(5, 30) == w("11110"));
  CHECK(w("11110").index() == 30);
}

TEST_CASE("word identities on random inputs") {
  std::mt19937_64 rng(7);
  for (int length : {6, 20, 64, 90, 128}) {
    for (int rep = 0; rep < 200; ++rep) {
      BinaryWord u = random_word(rng, length);
      BinaryWord v = random_word(rng, length);
      CHECK(hamming_distance(u, v) == weight(add(u, v)));
      CHECK(hamming_distance(u, complement(u)) == length);
      bool even_sum = parity(add(u, v)) == Parity::even;
      CHECK(even_sum == (parity(u) == parity(v)));
      CHECK(add(u, BinaryWord::zeros(length)) == u);
      CHECK(add(u, u) == BinaryWord::zeros(length));
    }
  }
}

TEST_CASE("concat/prefix round trip on random split points") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    int lu = 1 + static_cast<int>(rng() % 64);
    int lv = 1 + static_cast<int>(rng() % 64);
    BinaryWord u = random_word(rng, lu);
    BinaryWord v = random_word(rng, lv);
    BinaryWord joined = concat(u, v);
    CHECK(joined.length() == lu + lv);
    CHECK(prefix(joined, lu) == u);
  }
}

TEST_CASE("kernel of the m=2 Hamming parity check") {
  Gf2Matrix m2 = Gf2Matrix::from_rows({w("011"), w("101")});
  auto basis = kernel_basis(m2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == w("111"));
}

TEST_CASE("kernel of the identity is trivial") {
  Gf2Matrix id = Gf2Matrix::from_rows({w("100"), w("010"), w("001")});
  CHECK(kernel_basis(id).empty());
  CHECK(rank(id) == 3);
}

TEST_CASE("kernel of the extended m=2 parity check") {
  Gf2Matrix m = Gf2Matrix::from_rows({w("0011"), w("0101"), w("1111")});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == w("1111"));
}

TEST_CASE("kernel basis against brute-force enumeration") {
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 60; ++rep) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 2 + static_cast<int>(rng() % 10);
    Gf2Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m.set_bit(r, c, static_cast<int>(rng() & 1));
    }
    auto basis = kernel_basis(m);
    BinaryWord zero_syndrome = BinaryWord::zeros(rows);
    for (const auto& v : basis) CHECK(m.multiply(v) == zero_syndrome);

    // brute-force kernel
    std::vector<BinaryWord> brute;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
      BinaryWord v = BinaryWord::from_index(cols, x);
      if (m.multiply(v) == zero_syndrome) brute.push_back(v);
    }
    CHECK(brute.size() == (std::uint64_t{1} << (cols - rank(m))));
    // the span of the returned basis is the whole kernel
    std::vector<BinaryWord> span{BinaryWord::zeros(cols)};
    for (const auto& b : basis) {
      std::size_t sz = span.size();
      for (std::size_t k = 0; k < sz; ++k) span.push_back(span[k] ^ b);
    }
    std::sort(span.begin(), span.end());
    CHECK(span == brute);
  }
}

TEST_CASE("kernel basis is deterministic") {
  Gf2Matrix m = Gf2Matrix::from_rows({w("110101"), w("011011")});
  auto a = kernel_basis(m);
  auto b = kernel_basis(m);
  CHECK(a == b);
}

TEST_CASE("matrix printing round-trips through rows") {
  Gf2Matrix m = Gf2Matrix::from_rows({w("0011"), w("0101"), w("1111")});
  CHECK(m.to_string() == "0011\n0101\n1111\n");
  CHECK_THROWS_AS(m.multiply(w("001")), std::invalid_argument);
}
