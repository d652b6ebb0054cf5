#ifndef EQHILB_EXACTALG_LINSOLVE_HPP
#define EQHILB_EXACTALG_LINSOLVE_HPP

#include <cstddef>
#include <vector>

#include "eqhilb/errors.hpp"
#include "eqhilb/exactalg/ratfun.hpp"

namespace eqhilb {

// Row-major dense matrix. Scalar needs no default constructor, so every
// cell is initialized from a fill value.
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> cells_;
};

using RatMatrix = DenseMatrix<RatFun>;
using PolyMatrix = DenseMatrix<MPoly>;

// M * x, for checking solutions.
std::vector<RatFun> multiply(const RatMatrix& m, const std::vector<RatFun>& x);

// Solves M x = rhs. Each row is cleared of denominators, then eliminated
// fraction-free (every update is an exact polynomial division by the
// previous pivot), and the solution is read off with one division per
// component. Throws SingularMatrixError naming the stage with no pivot.
std::vector<RatFun> linear_solve_ratfun(const RatMatrix& m, const std::vector<RatFun>& rhs);

// Fraction-free elimination of a polynomial augmented matrix (last column
// is the rhs): x_i = numerators[i] / determinant.
struct FractionFreeSolution {
  std::vector<MPoly> numerators;
  MPoly determinant;
};
FractionFreeSolution eliminate(PolyMatrix a);

std::vector<RatFun> solve_augmented(PolyMatrix a);

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_LINSOLVE_HPP
