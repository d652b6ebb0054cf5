#ifndef EQHILB_EXACTALG_SERIES_HPP
#define EQHILB_EXACTALG_SERIES_HPP

#include <span>
#include <string>
#include <vector>

#include "eqhilb/exactalg/count_table.hpp"
#include "eqhilb/exactalg/ratfun.hpp"

namespace eqhilb {

// Table axis label for a series variable: t -> d, s -> n, s1 -> m, s2 -> n.
std::string axis_label(const std::string& var, std::size_t nvars);

// Power-series coefficients of f in the box [0, bounds] (one bound per
// variable, in VarSet order). Requires a nonzero constant term in the
// denominator; throws ArithmeticError otherwise, or if a coefficient comes
// out non-integral.
CountTable series_expand(const RatFun& f, std::span<const unsigned> bounds);
CountTable series_expand(const RatFun& f, unsigned bound_per_axis = 8);

// Polynomial whose coefficients are the table entries.
MPoly table_to_poly(const CountTable& table, const VarSet& vars);

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_SERIES_HPP
