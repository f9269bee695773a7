#pragma once

#include <string>
#include <vector>

#include "cubepack/word.hpp"

namespace cubepack {

/// Matrix over GF(2) with up to 128 columns, stored as one BinaryWord per row.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols);
  static Gf2Matrix from_rows(std::vector<BinaryWord> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // 0-based indices.
  int bit(int r, int c) const;
  void set_bit(int r, int c, int value);
  const BinaryWord& row(int r) const;

  /// M * v^T over GF(2); the syndrome is returned as a word of length rows().
  BinaryWord multiply(const BinaryWord& v) const;

  /// One bitstring row per line.
  std::string to_string() const;

 private:
  int cols_;
  std::vector<BinaryWord> rows_;
};

/// Basis of {v : M * v^T = 0}, possibly empty. The basis is canonical: it is
/// derived from the reduced row echelon form with leftmost pivot order, one
/// vector per free column in ascending column order.
std::vector<BinaryWord> kernel_basis(const Gf2Matrix& m);

int rank(const Gf2Matrix& m);

}  // namespace cubepack
