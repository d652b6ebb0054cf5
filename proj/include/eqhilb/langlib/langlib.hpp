#ifndef EQHILB_LANGLIB_LANGLIB_HPP
#define EQHILB_LANGLIB_LANGLIB_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqhilb/automata/count.hpp"
#include "eqhilb/automata/ops.hpp"
#include "eqhilb/automata/regex.hpp"
#include "eqhilb/genfun/genfun.hpp"

namespace eqhilb {

// A hand-drawn automaton kept next to the canonical one, with a flag for
// whether it recognizes the language.
struct FigureAutomaton {
  std::string label;
  Dfa dfa;
};

struct Language {
  std::string name;
  Alphabet alphabet;
  WordPredicate predicate;
  Dfa dfa;  // canonical minimal automaton
  std::optional<Regex> regex;
  std::vector<FigureAutomaton> figures;
  WeightFn weights;
  MPoly offset;  // s, s_k or s1*s2

  RatFun transfer() const { return transfer_series(dfa, weights); }
  // offset * transfer()
  RatFun equivariant_series() const;
  const FigureAutomaton* figure(const std::string& label) const;
};

enum class CheckMode { Unchecked, Checked };

// Word length used by checked construction.
inline constexpr unsigned kAgreementLength = 10;

struct LanguageCheck {
  AgreementReport predicate_vs_dfa;
  // One entry per figure and for the regex: does it recognize the language?
  std::vector<std::pair<std::string, bool>> constructions;
  bool ok() const;
};

LanguageCheck verify_language(const Language& lang, unsigned max_length = kAgreementLength);

// Nondecreasing runs of alpha_1..alpha_c separated by tau.
Language lang_poly_ring(unsigned c, CheckMode mode = CheckMode::Unchecked);

// Words tau^k1 a_i1 ... a_id tau^k(d+1) with k(j+1) >= i_j for j < d.
// figures: "figure" (all states accepting) and "as-printed" (only (i,0)
// and (i,i) accepting, which rejects e.g. a2 tau when c >= 2).
Language lang_window_squares(unsigned c, CheckMode mode = CheckMode::Unchecked);

// The two-generator language with conditions on consecutive alphas.
Language lang_gap(CheckMode mode = CheckMode::Unchecked);

// The hand-coded automata on their own.
Dfa poly_ring_automaton(unsigned c);
Dfa window_squares_automaton(unsigned c);
Dfa window_squares_printed_automaton(unsigned c);
Dfa gap_automaton();

// Renames the language for use as factor k of a Segre product or
// concatenation: tau-type letters get class s_k and names tau<k>, content
// letters get the suffix _<k>.
Language as_factor(const Language& lang, unsigned k);

// A must use class 1 only and B class 2 only. Content letters are pairs
// g(a,b). Built as the intersection of both preimages with the scaffold
// language (tau1* tau2* g)* tau1* tau2*.
Language lang_segre(const Language& a, const Language& b,
                         CheckMode mode = CheckMode::Unchecked);

// Words w_A w_B. Alphabets must be disjoint and A, B use classes 1, 2.
Language lang_concat(const Language& a, const Language& b,
                          CheckMode mode = CheckMode::Unchecked);

// {epsilon} over a single class-k tau letter and no content letters.
Language lang_trivial(unsigned k);

}  // namespace eqhilb

#endif  // EQHILB_LANGLIB_LANGLIB_HPP
