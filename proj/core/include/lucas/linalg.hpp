#pragma once

#include <optional>
#include <vector>

#include "lucas/field.hpp"

namespace lucas {

/// Row-major dense matrix over F_q.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Fq>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fq& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fq at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fq> data_;
};

struct AffineSolution {
  std::vector<Fq> particular;           // free variables set to zero
  std::vector<std::vector<Fq>> kernel;  // one vector per free column, in column order
};

/// Solves rows * v = rhs by Gauss-Jordan elimination with the first nonzero
/// entry in column order as pivot. Returns nullopt when inconsistent.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<AffineSolution> solve_affine_system(const FiniteField& field, const Matrix& rows,
                                                  const std::vector<Fq>& rhs);

std::vector<Fq> mat_vec(const FiniteField& field, const Matrix& m, const std::vector<Fq>& v);

}  // namespace lucas
