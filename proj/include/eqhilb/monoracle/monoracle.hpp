#ifndef EQHILB_MONORACLE_MONORACLE_HPP
#define EQHILB_MONORACLE_MONORACLE_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqhilb/exactalg/count_table.hpp"
#include "eqhilb/langlib/langlib.hpp"

namespace eqhilb {

// Sparse exponent vector over variables indexed by positive integers,
// stored as (index, exponent) pairs sorted by index, exponents >= 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int index, unsigned power = 1);
  // Product of x_i over the list (repetition allowed).
  static Monomial from_indices(const std::vector<int>& indices);

  const std::vector<std::pair<int, unsigned>>& support() const noexcept { return terms_; }
  unsigned exponent(int index) const;
  unsigned degree() const;
  bool is_one() const noexcept { return terms_.empty(); }
  // Indices in ascending order, each repeated by its exponent.
  std::vector<int> indices() const;
  int max_index() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // exact; throws ArithmeticError
  Monomial shifted(int by) const;

  // "x1^2*x3", or "1".
  std::string to_string(const std::string& prefix = "x") const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, unsigned>> terms_;
};

// The three shift-invariant generator families.
//   WindowSquares(c): x_i x_(i+j), 0 <= j <= c
//   Gap:              x_i x_(i+1), x_i x_(i+2)
//   PolyRing(c):      variables x_(k,i), k in [c], stored under index c(i-1)+k
// A window of size n allows generators with i in [n].
class GeneratorFamily {
 public:
  enum class Kind { WindowSquares, Gap, PolyRing };

  static GeneratorFamily window_squares(unsigned c) { return {Kind::WindowSquares, c}; }
  static GeneratorFamily gap() { return {Kind::Gap, 2}; }
  static GeneratorFamily poly_ring(unsigned c);

  Kind kind() const noexcept { return kind_; }
  unsigned c() const noexcept { return c_; }
  std::string name() const;

  // Offsets j for which generator(i, j) exists: 0..c, 1..2, or 1..c.
  unsigned first_offset() const noexcept { return kind_ == Kind::WindowSquares ? 0 : 1; }
  unsigned last_offset() const noexcept { return c_; }
  Monomial generator(int i, unsigned offset) const;
  std::vector<Monomial> generators(int n) const;
  // Index shift induced by moving the window by one.
  int shift_step() const noexcept { return kind_ == Kind::PolyRing ? static_cast<int>(c_) : 1; }

 private:
  GeneratorFamily(Kind k, unsigned c) : kind_(k), c_(c) {}
  Kind kind_;
  unsigned c_;
};

enum class Convention { Algebra, StringBounded };
const char* convention_name(Convention c);
Convention parse_convention(const std::string& text);

// One generator occurrence: window position and offset.
struct GeneratorRef {
  int start = 0;
  unsigned offset = 0;
  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

using StringPresentation = std::vector<GeneratorRef>;

// "(1,2)(3,4)" with the variable indices of each generator; poly-ring
// entries print as (k,i).
std::string to_string(const StringPresentation& p, const GeneratorFamily& f);
Monomial realize(const StringPresentation& p, const GeneratorFamily& f);

// Canonical presentation, or nullopt if m is not a product of generators.
std::optional<StringPresentation> normal_form(const Monomial& m, const GeneratorFamily& f);

// Algebra: distinct products of d generators with window index <= n.
// StringBounded: those whose normal form starts its last generator at <= n.
std::set<Monomial> enumerate_monomials(const GeneratorFamily& f, int n, unsigned d, Convention conv);

// Axes (d, n); column n = 0 is left at zero.
CountTable hilbert_counts(const GeneratorFamily& f, unsigned nmax, unsigned dmax, Convention conv);

// From two (d, n) tables with equal d range: entry (d, m, n) is
// a(d, m) * b(d, n) for the Segre table and sum_{d1+d2=d} a(d1, m) b(d2, n)
// for the tensor table.
CountTable segre_counts(const CountTable& a, const CountTable& b);
CountTable tensor_counts(const CountTable& a, const CountTable& b);

// m(eps) = 1, m(a_j w) = generator(1, j) m(w), m(tau w) = shift(m(w)).
Monomial word_to_monomial(std::span<const SymbolId> w, const Alphabet& alphabet, const GeneratorFamily& f);

struct WordMonomialMap {
  std::vector<std::pair<Word, Monomial>> pairs;
  std::size_t target_size = 0;
  bool injective = false;
  bool surjective = false;  // onto the target set
  bool into = false;        // every image lies in the target set
  bool bijective() const noexcept { return injective && surjective && into; }
};

// Applies word_to_monomial to every word of L with d content letters and
// n - 1 taus; the target is enumerate_monomials(f, n, d, conv).
WordMonomialMap word_monomial_maps(const Language& lang, const GeneratorFamily& f, int n, unsigned d,
                                   Convention conv = Convention::StringBounded);

struct CompareCell {
  unsigned d = 0;
  unsigned n = 0;
  Integer language;
  Integer oracle;
  bool equal() const { return language == oracle; }
};

struct CompareReport {
  std::vector<CompareCell> cells;  // d-major, n from 1
  std::size_t mismatches() const;
};

// Language count at (d, n) is the number of words with d content letters
// and n - 1 taus.
CompareReport compare_report(const Language& lang, const GeneratorFamily& f, Convention conv, unsigned dmax,
                             unsigned nmax);

}  // namespace eqhilb

#endif  // EQHILB_MONORACLE_MONORACLE_HPP
