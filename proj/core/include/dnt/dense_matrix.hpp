#ifndef DNT_DENSE_MATRIX_HPP
#define DNT_DENSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace dnt {

/// Minimal row-major square matrix. Kept deliberately plain so that the
/// summation order of every product stays explicit and reproducible.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<double> values;  // dim * dim, row-major

  static DenseMatrix zero(std::size_t dim) {
    return {dim, std::vector<double>(dim * dim, 0.0)};
  }

  double at(std::size_t row, std::size_t col) const {
    return values[row * dim + col];
  }
  double& at(std::size_t row, std::size_t col) {
    return values[row * dim + col];
  }
};

/// result[j] = sum over k (ascending) of row[k] * m(k, j).
inline std::vector<double> row_times_matrix(std::span<const double> row,
                                            const DenseMatrix& m) {
  std::vector<double> result(m.dim, 0.0);
  for (std::size_t j = 0; j < m.dim; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < m.dim; ++k) acc += row[k] * m.at(k, j);
    result[j] = acc;
  }
  return result;
}

}  // namespace dnt

#endif  // DNT_DENSE_MATRIX_HPP
