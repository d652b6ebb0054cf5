#ifndef EQHILB_EXACTALG_PARSE_HPP
#define EQHILB_EXACTALG_PARSE_HPP

#include <string_view>

#include "eqhilb/exactalg/ratfun.hpp"

namespace eqhilb {

// Grammar: sums and differences of products and quotients of powers
// (non-negative integer exponents) of integers, variables and parenthesized
// expressions. Unicode minus is accepted. Throws ParseError.
RatFun parse_ratfun(std::string_view text, const VarSet& vars);
MPoly parse_poly(std::string_view text, const VarSet& vars);

// {t, s1, s2} if the text mentions s1 or s2, otherwise {t, s}.
VarSet infer_vars(std::string_view text);

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_PARSE_HPP
