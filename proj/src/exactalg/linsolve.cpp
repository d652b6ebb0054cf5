#include "eqhilb/exactalg/linsolve.hpp"

namespace eqhilb {

std::vector<RatFun> multiply(const RatMatrix& m, const std::vector<RatFun>& x) {
  if (m.cols() != x.size()) throw UsageError("matrix and vector sizes differ");
  std::vector<RatFun> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatFun acc(x.empty() ? m(i, 0).vars() : x[0].vars());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !x[j].is_zero()) acc = acc + m(i, j) * x[j];
    out.push_back(acc);
  }
  return out;
}

std::vector<RatFun> linear_solve_ratfun(const RatMatrix& m, const std::vector<RatFun>& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw UsageError("linear system matrix is not square");
  if (rhs.size() != n) throw UsageError("right-hand side has the wrong length");
  if (n == 0) return {};
  const VarSet vars = m(0, 0).vars();

  PolyMatrix a(n, n + 1, MPoly(vars));
  for (std::size_t i = 0; i < n; ++i) {
    // Multiply the row by the product of its distinct denominators.
    std::vector<const MPoly*> dens;
    auto cell = [&](std::size_t j) -> const RatFun& { return j < n ? m(i, j) : rhs[i]; };
    for (std::size_t j = 0; j <= n; ++j) {
      const MPoly& d = cell(j).den();
      if (d.is_constant() && d.constant_term() == 1) continue;
      bool seen = false;
      for (const MPoly* p : dens) seen = seen || *p == d;
      if (!seen) dens.push_back(&d);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const RatFun& c = cell(j);
      MPoly v = c.num();
      for (const MPoly* p : dens)
        if (!(*p == c.den())) v *= *p;
      a(i, j) = std::move(v);
    }
  }
  return solve_augmented(std::move(a));
}

FractionFreeSolution eliminate(PolyMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n + 1) throw UsageError("augmented matrix has the wrong shape");
  if (n == 0) throw UsageError("empty linear system");
  const VarSet vars = a(0, 0).vars();
  MPoly prev(vars, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (pivot == n || a(i, k).term_count() < a(pivot, k).term_count()) pivot = i;
    }
    if (pivot == n) throw SingularMatrixError(k);
    a.swap_rows(k, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const MPoly lead = a(i, k);
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        MPoly v = a(k, k) * a(i, j);
        if (!lead.is_zero() && !a(k, j).is_zero()) v -= lead * a(k, j);
        a(i, j) = v.exact_divide(prev);
      }
      a(i, k) = MPoly(vars);
    }
    prev = a(k, k);
  }
  // Every diagonal entry now equals the determinant.
  FractionFreeSolution sol{{}, prev};
  for (std::size_t i = 0; i < n; ++i) sol.numerators.push_back(std::move(a(i, n)));
  return sol;
}

std::vector<RatFun> solve_augmented(PolyMatrix a) {
  if (a.rows() == 0) return {};
  auto sol = eliminate(std::move(a));
  std::vector<RatFun> x;
  for (auto& num : sol.numerators) x.emplace_back(std::move(num), sol.determinant);
  return x;
}

}  // namespace eqhilb
