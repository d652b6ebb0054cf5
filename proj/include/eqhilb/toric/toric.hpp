#ifndef EQHILB_TORIC_TORIC_HPP
#define EQHILB_TORIC_TORIC_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqhilb/exactalg/ratfun.hpp"
#include "eqhilb/monoracle/monoracle.hpp"

namespace eqhilb {

// Variable x_[lo,hi] of the presentation ring, mapped to x_lo * x_hi.
struct Edge {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// x[1,2] (edge style) or x(1,1) (row/column style of the gap map:
// x(1,i) = x[i,i+1], x(2,i) = x[i,i+2]).
enum class NameStyle { Edge, Indexed };

class EdgeMonomial {
 public:
  EdgeMonomial() = default;
  static EdgeMonomial variable(Edge e, unsigned power = 1);
  // Terms need not be sorted; repeated edges are merged, zero powers dropped.
  static EdgeMonomial from_terms(std::vector<std::pair<Edge, unsigned>> terms);

  const std::vector<std::pair<Edge, unsigned>>& support() const noexcept { return terms_; }
  unsigned exponent(Edge e) const;
  unsigned degree() const;
  bool is_one() const noexcept { return terms_.empty(); }
  int min_vertex() const;
  int max_vertex() const;

  bool divides(const EdgeMonomial& other) const;
  bool coprime(const EdgeMonomial& other) const;
  EdgeMonomial operator*(const EdgeMonomial& other) const;
  EdgeMonomial operator/(const EdgeMonomial& other) const;  // exact
  EdgeMonomial gcd(const EdgeMonomial& other) const;
  EdgeMonomial shifted(int by) const;

  std::string to_string(NameStyle style = NameStyle::Edge) const;

  friend bool operator==(const EdgeMonomial&, const EdgeMonomial&) = default;
  friend auto operator<=>(const EdgeMonomial&, const EdgeMonomial&) = default;

 private:
  std::vector<std::pair<Edge, unsigned>> terms_;
};

// head - tail
struct Binomial {
  EdgeMonomial head;
  EdgeMonomial tail;

  // Edge weights head - tail; zero weights are dropped.
  static Binomial from_weights(const std::map<Edge, int>& weights);
  std::map<Edge, int> weights() const;

  bool is_zero() const { return head == tail; }
  unsigned degree() const { return std::max(head.degree(), tail.degree()); }
  int min_vertex() const;
  int max_vertex() const;
  Binomial negated() const { return {tail, head}; }
  Binomial shifted(int by) const { return {head.shifted(by), tail.shifted(by)}; }
  // Divides out the common factor of head and tail.
  Binomial cancelled() const;
  // Sign chosen so head < tail; for deduplication up to sign.
  Binomial oriented() const;
  std::string to_string(NameStyle style = NameStyle::Edge) const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// Inverse of Binomial::to_string in either style: "m1 - m2" where each
// side is 1 or a '*'-product of x[lo,hi] / x(row,i) factors with optional
// ^power. Throws ParseError.
Binomial parse_binomial(std::string_view text);

// The monomial maps being presented. Window n admits edges with lo <= n.
//   gap:               [i,i+1], [i,i+2]
//   window_squares(c): [i,j] with 0 <= j - i <= c
class ToricMap {
 public:
  static ToricMap gap() { return ToricMap(GeneratorFamily::gap()); }
  static ToricMap window_squares(unsigned c) { return ToricMap(GeneratorFamily::window_squares(c)); }
  explicit ToricMap(GeneratorFamily family);

  const GeneratorFamily& family() const noexcept { return family_; }
  bool admits(Edge e) const;
  bool admits(Edge e, int n) const { return admits(e) && e.lo <= n; }
  bool fits(const Binomial& b, int n) const;
  std::vector<Edge> variables(int n) const;

 private:
  GeneratorFamily family_;
};

// Product of x_lo x_hi over the edges; throws UsageError if an edge is
// outside the window or not a variable of the map.
Monomial presentation_image(const EdgeMonomial& m, const ToricMap& map, int n);

// Vertex weight: sum of the weights of the adjacent edges (a loop [i,i]
// counts twice).
std::map<int, int> vertex_weights(const Binomial& b);
bool kernel_test(const Binomial& b);

// ---------------------------------------------------------------- family

struct GenElement {
  std::string label;               // "g2", "g()", "g(1,2)"
  bool quadric = false;            // the single quadratic generator
  std::vector<unsigned> sequence;  // defining sequence over {1,2}
  Binomial binomial;
  int max_vertex = 0;
  unsigned degree() const { return binomial.degree(); }
};

Binomial quadratic_generator();  // x[1,2]x[3,4] - x[1,3]x[2,4]
Binomial seed_generator();       // x[1,2]x[3,5]^2x[6,7] - x[1,3]x[2,3]x[5,6]x[5,7]

// Appends 1 or 2 to the defining sequence of a recursive element.
Binomial extend_generator(const Binomial& g, unsigned step);

// The quadratic generator and every recursive element of degree <= max_degree,
// ordered by degree, then sequence.
std::vector<GenElement> build_gen_family(unsigned max_degree);

// Two triangles at the ends joined by an increasing path with weights
// alternating +-2 and no consecutive [j-1,j],[j,j+1] edges.
bool structure_check(const GenElement& g);

// Degree -> number of recursive (non-quadric) elements of that degree.
std::map<unsigned, std::size_t> degree_census(const std::vector<GenElement>& family);

// --------------------------------------------------------------- quadrics

// x[i,j] x[min(k,l),max(k,l)] - x[i,k] x[min(j,l),max(j,l)] for
// i <= j < k <= i+c, i < l, |k-l| <= c, |j-l| <= c, keeping those whose
// four variables lie in window n; deduplicated up to sign.
std::vector<Binomial> quadric_family(unsigned c, int n);

// ------------------------------------------------------------------ moves

// All shifts of the given binomials that fit in window n.
std::vector<Binomial> window_moves(const std::vector<Binomial>& base, const ToricMap& map, int n);

// Degree-d monomials of the window with the given image, sorted.
std::vector<EdgeMonomial> fiber_of(const ToricMap& map, int n, const Monomial& target);

struct FiberGraph {
  Monomial target;
  std::vector<EdgeMonomial> members;
  std::vector<std::vector<std::size_t>> components;  // member indices
  std::size_t moves_used = 0;                        // moves that produced an edge
  bool connected() const { return components.size() <= 1; }
};

// m ~ m' iff m = w*head and m' = w*tail for a move (either orientation).
FiberGraph fiber_connected(const ToricMap& map, int n, const Monomial& target, const std::vector<Binomial>& moves);

// Every fiber of internal degree d with at least two members.
std::vector<Monomial> nontrivial_fibers(const ToricMap& map, int n, unsigned d);

struct FiberSweep {
  std::size_t fibers = 0;
  std::size_t disconnected = 0;
  std::optional<Monomial> first_disconnected;
  bool all_connected() const { return disconnected == 0; }
};

// Connectivity of every nontrivial fiber with 2 <= degree <= dmax.
FiberSweep fiber_sweep(const ToricMap& map, int n, unsigned dmax, const std::vector<Binomial>& moves);

// {target, fiber_size, components, moves_used}
nlohmann::json fiber_report(const FiberGraph& g, NameStyle style = NameStyle::Edge);

// ------------------------------------------------------------- reduction

// Repeatedly replaces one side of h by a move whose other side shares a
// variable with the opposite side, then cancels; moves are B and every
// shift of B. Returns the zero binomial when h reduces away, otherwise the
// remainder where no move applies. Throws UsageError if h is not in the
// kernel.
Binomial reduce_binomial(const Binomial& h, const std::vector<Binomial>& moves);

// ---------------------------------------------------------- degree stats

struct DegreeStats {
  int n = 0;
  unsigned computed = 0;  // max degree of a family element fitting window n
  unsigned formula = 0;   // 2n/3, (2n+1)/3, (2n-1)/3 by n mod 3
  std::string witness;    // label of a maximal element
  bool agrees() const { return computed == formula; }
};

unsigned degree_formula(int n);
DegreeStats gen_degree_stats(int n);

// Minimal generators of the window-n presentation ideal counted by degree,
// from fibers: a fiber contributes (components - 1) where members sharing
// a variable are joined. Independent of the recursive family.
std::map<unsigned, std::size_t> minimal_generator_degrees(const ToricMap& map, int n, unsigned dmax);

// ------------------------------------------------------------ ideal series

// (1-t)^2/((1-t)^2 - s) - 1 - algebra_series, over {t, s}: the series of
// the gap presentation ideals if algebra_series is that of the algebras.
RatFun ideal_series(const RatFun& algebra_series);

// dim [I_n]_d = C(2n+d-1, d) - dim [A_n]_d with the algebra side counted
// under the given convention; axes (d, n), column n = 0 zero.
CountTable ideal_counts(unsigned nmax, unsigned dmax, Convention conv = Convention::Algebra);

}  // namespace eqhilb

#endif  // EQHILB_TORIC_TORIC_HPP
