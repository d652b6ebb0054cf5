#ifndef EQHILB_EXACTALG_RATFUN_HPP
#define EQHILB_EXACTALG_RATFUN_HPP

#include <string>

#include "eqhilb/exactalg/mpoly.hpp"

namespace eqhilb {

// Quotient of two polynomials. Canonical form only divides out the joint
// integer content and fixes the sign so the denominator's lowest graded term
// is positive; common polynomial factors are kept. Compare with rat_equal,
// not by representation.
class RatFun {
 public:
  explicit RatFun(VarSet vars);  // zero
  explicit RatFun(MPoly num);
  RatFun(MPoly num, MPoly den);

  const VarSet& vars() const noexcept { return num_.vars(); }
  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  // "(<num>)/(<den>)"
  std::string to_string() const;

 private:
  void canonicalize();

  MPoly num_;
  MPoly den_;
};

// a.num * b.den == b.num * a.den
bool rat_equal(const RatFun& a, const RatFun& b);

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_RATFUN_HPP
