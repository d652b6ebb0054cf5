#ifndef EQHILB_AUTOMATA_OPS_HPP
#define EQHILB_AUTOMATA_OPS_HPP

#include <map>
#include <string>
#include <vector>

#include "eqhilb/automata/dfa.hpp"

namespace eqhilb {

// Monoid homomorphism from words over `source` to words over `target`.
class Homomorphism {
 public:
  // images[i] is the image of source symbol i.
  Homomorphism(Alphabet source, Alphabet target, std::vector<Word> images);
  // By name; every source symbol must be mapped (possibly to the empty word).
  Homomorphism(Alphabet source, Alphabet target,
               const std::map<std::string, std::vector<std::string>>& images);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(SymbolId a) const { return images_.at(a); }
  Word apply(std::span<const SymbolId> w) const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// Subset construction (epsilon closure included), removal of states that
// cannot reach acceptance, and partition refinement. States are numbered
// in breadth-first order from the start state, symbols in alphabet order,
// so two equivalent inputs give identical results. The empty language is a
// single rejecting state.
Dfa determinize_trim_minimize(const Nfa& a);
Dfa minimize(const Dfa& a);

Dfa intersect(const Dfa& a, const Dfa& b);

// Automaton over h.source() accepting {w : h(w) in L(a)}. Keeps the state
// set of `a` (no minimization).
Dfa hom_preimage(const Dfa& a, const Homomorphism& h);

bool equivalent(const Dfa& a, const Dfa& b);

// The same automaton over a renamed alphabet of equal size (symbol ids are
// kept).
Dfa with_alphabet(const Dfa& a, const Alphabet& alphabet);

// Same transitions and acceptance state-for-state (no renumbering).
bool identical(const Dfa& a, const Dfa& b);

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_OPS_HPP
