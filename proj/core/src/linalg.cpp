#include "lucas/linalg.hpp"

#include <stdexcept>

namespace lucas {

Matrix Matrix::from_rows(const std::vector<std::vector<Fq>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Fq> mat_vec(const FiniteField& field, const Matrix& m, const std::vector<Fq>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match column count");
  std::vector<Fq> out(m.rows(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = field.add(out[r], field.mul(m.at(r, c), v[c]));
  return out;
}

std::optional<AffineSolution> solve_affine_system(const FiniteField& field, const Matrix& rows,
                                                  const std::vector<Fq>& rhs) {
  if (rhs.size() != rows.rows()) throw std::invalid_argument("rhs length does not match row count");
  const std::size_t n_rows = rows.rows(), n_cols = rows.cols();

  // Augmented copy.
  Matrix a(n_rows, n_cols + 1);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) a.at(r, c) = rows.at(r, c);
    a.at(r, n_cols) = rhs[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < n_rows && field.is_zero(a.at(pivot, c))) ++pivot;
    if (pivot == n_rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k <= n_cols; ++k) std::swap(a.at(pivot, k), a.at(rank, k));
    const Fq inv = field.inv(a.at(rank, c));
    for (std::size_t k = c; k <= n_cols; ++k) a.at(rank, k) = field.mul(a.at(rank, k), inv);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == rank || field.is_zero(a.at(r, c))) continue;
      const Fq factor = a.at(r, c);
      for (std::size_t k = c; k <= n_cols; ++k)
        a.at(r, k) = field.sub(a.at(r, k), field.mul(factor, a.at(rank, k)));
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < n_rows; ++r)
    if (!field.is_zero(a.at(r, n_cols))) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(n_cols, field.zero());
  std::vector<bool> is_pivot(n_cols, false);
  for (std::size_t k = 0; k < rank; ++k) {
    sol.particular[pivot_cols[k]] = a.at(k, n_cols);
    is_pivot[pivot_cols[k]] = true;
  }
  for (std::size_t free = 0; free < n_cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fq> v(n_cols, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < rank; ++k) v[pivot_cols[k]] = field.neg(a.at(k, free));
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace lucas
