#include "eqhilb/exactalg/ratfun.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

RatFun::RatFun(VarSet vars) : num_(vars), den_(vars, 1) {}

RatFun::RatFun(MPoly num) : num_(std::move(num)), den_(num_.vars(), 1) {}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.vars() == den_.vars()))
    throw UsageError("numerator and denominator over different variable sets");
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = MPoly(num_.vars(), 1);
    return;
  }
  Integer g = num_.content();
  const Integer dc = den_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
  if (den_.lowest_term().coef < 0) g = -g;
  if (g != 1) {
    num_ = num_.exact_divide(g);
    den_ = den_.exact_divide(g);
  }
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rat_equal(const RatFun& a, const RatFun& b) {
  if (!(a.vars() == b.vars())) throw UsageError("rational functions over different variable sets");
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace eqhilb
