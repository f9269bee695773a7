#include "cubepack/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cubepack {

Gf2Matrix::Gf2Matrix(int rows, int cols) : cols_(cols) {
  if (rows < 1 || cols < 1 || cols > BinaryWord::kMaxLength) {
    throw std::invalid_argument("bad matrix shape " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  }
  rows_.assign(static_cast<std::size_t>(rows), BinaryWord::zeros(cols));
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BinaryWord> rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  Gf2Matrix m(static_cast<int>(rows.size()), rows.front().length());
  for (const auto& r : rows) {
    if (r.length() != m.cols_) {
      throw std::invalid_argument("matrix rows have mixed lengths");
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

int Gf2Matrix::bit(int r, int c) const { return row(r).bit(c + 1); }

void Gf2Matrix::set_bit(int r, int c, int value) {
  if (c < 0 || c >= cols_) throw std::invalid_argument("column out of range");
  const BinaryWord& old = row(r);
  if (old.bit(c + 1) != (value & 1)) {
    rows_[static_cast<std::size_t>(r)] = old ^ BinaryWord::unit(c + 1, cols_);
  }
}

const BinaryWord& Gf2Matrix::row(int r) const {
  if (r < 0 || r >= rows()) throw std::invalid_argument("row out of range");
  return rows_[static_cast<std::size_t>(r)];
}

BinaryWord Gf2Matrix::multiply(const BinaryWord& v) const {
  if (v.length() != cols_) throw std::invalid_argument("incompatible lengths");
  if (rows() > BinaryWord::kMaxLength) {
    throw std::invalid_argument("syndrome does not fit in a word");
  }
  BinaryWord out = BinaryWord::zeros(rows());
  for (int r = 0; r < rows(); ++r) {
    if ((rows_[static_cast<std::size_t>(r)] & v).weight() % 2 != 0) {
      out = out ^ BinaryWord::unit(r + 1, rows());
    }
  }
  return out;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (int r = 0; r < rows(); ++r) {
    s += rows_[static_cast<std::size_t>(r)].to_string();
    s += '\n';
  }
  return s;
}

namespace {

struct Echelon {
  std::vector<BinaryWord> rows;   // reduced, pivot rows only
  std::vector<int> pivot_cols;    // 0-based, ascending
};

// Reduced row echelon form with leftmost pivot order; zero rows dropped.
Echelon reduce(const Gf2Matrix& m) {
  std::vector<BinaryWord> work;
  work.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

  Echelon e;
  std::size_t next = 0;
  for (int c = 0; c < m.cols() && next < work.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < work.size() && work[pivot].bit(c + 1) == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[next], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next && work[r].bit(c + 1)) work[r] = work[r] ^ work[next];
    }
    e.pivot_cols.push_back(c);
    ++next;
  }
  work.erase(work.begin() + static_cast<std::ptrdiff_t>(next), work.end());
  e.rows = std::move(work);
  return e;
}

}  // namespace

std::vector<BinaryWord> kernel_basis(const Gf2Matrix& m) {
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<BinaryWord> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BinaryWord v = BinaryWord::unit(f + 1, m.cols());
    for (std::size_t p = 0; p < e.rows.size(); ++p) {
      if (e.rows[p].bit(f + 1)) {
        v = v ^ BinaryWord::unit(e.pivot_cols[p] + 1, m.cols());
      }
    }
    basis.push_back(v);
  }
  return basis;
}

int rank(const Gf2Matrix& m) {
  return static_cast<int>(reduce(m).pivot_cols.size());
}

}  // namespace cubepack
