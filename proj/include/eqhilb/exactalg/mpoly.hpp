#ifndef EQHILB_EXACTALG_MPOLY_HPP
#define EQHILB_EXACTALG_MPOLY_HPP

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqhilb/exactalg/integer.hpp"

namespace eqhilb {

// Ordered list of variable names. Canonical order puts t first, then s or
// s1, s2. At most kMaxVars variables are supported.
class VarSet {
 public:
  static constexpr std::size_t kMaxVars = 3;

  VarSet();
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  // {t, s} for one-parameter filtrations, {t, s1, ..., sk} otherwise.
  static VarSet for_count_classes(std::size_t classes);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Packed exponent vector. Bits 48..63 hold the total degree and each
// variable owns 16 bits below that, variable 0 highest. Comparing packed
// keys as integers is graded lex order with t > s > ...; multiplying two
// monomials is adding their keys.
namespace exponent {

using Key = std::uint64_t;
inline constexpr unsigned kFieldBits = 16;
inline constexpr Key kFieldMask = 0xffff;
inline constexpr unsigned kMaxExponent = 0xffff;

Key pack(std::span<const unsigned> e);
std::vector<unsigned> unpack(Key k, std::size_t nvars);
inline unsigned degree(Key k) { return static_cast<unsigned>(k >> 48); }
inline unsigned get(Key k, std::size_t var) {
  return static_cast<unsigned>((k >> (32 - kFieldBits * var)) & kFieldMask);
}
bool divides(Key a, Key b);  // a | b
Key multiply(Key a, Key b);  // checks overflow

}  // namespace exponent

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Terms are kept sorted by ascending packed key with no zero
// coefficients stored.
class MPoly {
 public:
  struct Term {
    exponent::Key key;
    Integer coef;
  };

  explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}
  MPoly(VarSet vars, const Integer& constant);

  static MPoly variable(const VarSet& vars, std::size_t index, unsigned power = 1);
  static MPoly monomial(const VarSet& vars, std::span<const unsigned> e,
                        const Integer& coef = 1);

  const VarSet& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(std::span<const unsigned> e) const;
  Integer coefficient(exponent::Key k) const;
  Integer constant_term() const;  // evaluation at the origin
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  // Gcd of all coefficients (0 for the zero polynomial, always >= 0).
  Integer content() const;
  // Lowest term in graded order; for polynomials with a nonzero constant
  // term this is the constant term. Requires a nonzero polynomial.
  const Term& lowest_term() const;
  // Highest term in graded order. Requires a nonzero polynomial.
  const Term& highest_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly& operator*=(const MPoly& b);
  MPoly& operator*=(const Integer& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Integer& c) { return a *= c; }

  // Exact quotient; throws ArithmeticError if b does not divide *this.
  MPoly exact_divide(const MPoly& b) const;
  MPoly exact_divide(const Integer& c) const;

  Integer evaluate(std::span<const Integer> point) const;

  // Keep only the terms whose exponent is <= bounds componentwise.
  MPoly truncated(std::span<const unsigned> bounds) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  // Descending graded order, e.g. "-t^2*s - t*s^2 + t^2 + t*s - 2*t - s + 1".
  std::string to_string() const;

 private:
  void check_same_vars(const MPoly& b) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool subtract);

  VarSet vars_;
  std::vector<Term> terms_;
};

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_MPOLY_HPP
