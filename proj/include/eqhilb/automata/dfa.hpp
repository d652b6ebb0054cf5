#ifndef EQHILB_AUTOMATA_DFA_HPP
#define EQHILB_AUTOMATA_DFA_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "eqhilb/automata/nfa.hpp"

namespace eqhilb {

// Partial deterministic automaton: a missing transition rejects.
class Dfa {
 public:
  static constexpr State kNone = std::numeric_limits<State>::max();

  explicit Dfa(Alphabet alphabet, std::size_t states = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State q) const { return accepting_.at(q); }
  State next(State q, SymbolId a) const { return table_[q * alphabet_.size() + a]; }
  std::size_t transition_count() const;

  // Display names (e.g. "21" or "3"); defaults to the state number.
  std::string state_name(State q) const;
  bool has_state_names() const noexcept { return !names_.empty(); }

  State add_state(bool accepting = false, std::string name = {});
  void set_start(State q);
  void set_accepting(State q, bool accepting = true);
  void set_transition(State from, SymbolId a, State to);
  // Same, by symbol name and state name; convenient for hand-coded figures.
  void set_transition(const std::string& from, const std::string& symbol, const std::string& to);
  State state_named(const std::string& name) const;

  // Runs w from q; kNone once a transition is missing.
  State run(State q, std::span<const SymbolId> w) const;

  Nfa to_nfa() const;

 private:
  void check(State q) const;

  Alphabet alphabet_;
  State start_ = 0;
  std::vector<bool> accepting_;
  std::vector<State> table_;
  std::vector<std::string> names_;
};

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_DFA_HPP
