#ifndef EQHILB_AUTOMATA_NFA_HPP
#define EQHILB_AUTOMATA_NFA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "eqhilb/automata/alphabet.hpp"

namespace eqhilb {

using State = std::uint32_t;

// Nondeterministic automaton with epsilon moves. The only construction-time
// representation; determinize_trim_minimize turns it into a Dfa.
class Nfa {
 public:
  explicit Nfa(Alphabet alphabet, std::size_t states = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State q) const { return accepting_.at(q); }
  const std::vector<std::pair<SymbolId, State>>& moves(State q) const { return moves_.at(q); }
  const std::vector<State>& epsilon(State q) const { return eps_.at(q); }

  State add_state(bool accepting = false);
  void set_start(State q);
  void set_accepting(State q, bool accepting = true);
  void add_move(State from, SymbolId a, State to);
  void add_epsilon(State from, State to);

 private:
  void check(State q) const;

  Alphabet alphabet_;
  State start_ = 0;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::pair<SymbolId, State>>> moves_;
  std::vector<std::vector<State>> eps_;
};

// Regular operations on Nfas over the same alphabet.
Nfa nfa_empty(const Alphabet& alphabet);      // accepts nothing
Nfa nfa_epsilon(const Alphabet& alphabet);    // accepts {epsilon}
Nfa nfa_symbol(const Alphabet& alphabet, SymbolId a);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);

// Re-expresses an Nfa over a larger alphabet containing every symbol of the
// original (matched by name).
Nfa nfa_lift(const Nfa& a, const Alphabet& target);

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_NFA_HPP
