#ifndef EQHILB_GENFUN_GENFUN_HPP
#define EQHILB_GENFUN_GENFUN_HPP

#include <vector>

#include "eqhilb/automata/dfa.hpp"
#include "eqhilb/exactalg/count_table.hpp"
#include "eqhilb/exactalg/ratfun.hpp"

namespace eqhilb {

// Letter weights: one monomial per alphabet symbol.
class WeightFn {
 public:
  WeightFn(Alphabet alphabet, VarSet vars, std::vector<MPoly> weights);

  // Content letters -> t; CountVar(k) -> s (single class) or s_k.
  static WeightFn standard(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const VarSet& vars() const noexcept { return vars_; }
  const MPoly& operator[](SymbolId a) const { return weights_.at(a); }

 private:
  Alphabet alphabet_;
  VarSet vars_;
  std::vector<MPoly> weights_;
};

// u^T (I - sum_a rho(a) M_a)^{-1} e_start, where M_a has a 1 at (i, j) for
// each edge j -> i labeled a and u marks the accepting states.
RatFun transfer_series(const Dfa& a, const WeightFn& rho);

// The matrix I - sum_a rho(a) M_a itself.
std::vector<std::vector<MPoly>> transfer_matrix(const Dfa& a, const WeightFn& rho);

struct SeriesCheck {
  RatFun series;
  CountTable expanded;
  CountTable counted;
  std::vector<bool> equal;  // per cell, linear order
  std::size_t mismatches = 0;
  bool ok() const noexcept { return mismatches == 0; }
};

// Expands transfer_series under the standard weights and compares it cell
// by cell with dp_count. `bounds` = {dmax, class bounds...}.
SeriesCheck series_check(const Dfa& a, std::span<const unsigned> bounds);

}  // namespace eqhilb

#endif  // EQHILB_GENFUN_GENFUN_HPP
